#pragma once

#include <iosfwd>
#include <string>

#include "lowmach/systems/params.hpp"

namespace lowmach::scaling {

/// Dimensional reference values and transport coefficients.
struct PhysicalInputs {
  double rho0 = 1.0;
  double u0 = 1.0;
  double L0 = 1.0;
  double theta0 = 1.0;
  double H0 = 0.0;
  double mu = 1.0;
  double lambda = 0.0;
  double nu = 1.0;
  double kappa = 1.0;
  double R_gas = 1.0;
  double cV = 1.0;
  /// Magnetic permeability factor in the Cowling number.
  double perm = 1.0;

  /// Throws UsageError on a nonpositive scale or coefficient, H0 < 0, or 2 mu + 3 lambda <= 0.
  void validate() const;
};

struct DimensionlessNumbers {
  double reynolds = 0.0;
  double mach = 0.0;
  double prandtl = 0.0;
  double magnetic_reynolds = 0.0;
  double cowling = 0.0;
  double gamma = 0.0;
  double sound_speed = 0.0;
  /// lambda / mu, carried into the scaled stress tensor.
  double lambda_ratio = 0.0;
};

DimensionlessNumbers nondimensionalize(const PhysicalInputs& in);

struct ScaledCoefficients {
  systems::PhysicalParams params;
  /// Set when C != 1, i.e. the scaled equations drop a nontrivial Cowling factor.
  bool cowling_ignored = false;
};

/// eps = M, mu = 1/R, lambda = (lambda/mu)/R, nu = 1/Rm, kappa = gamma/(R Pr).
ScaledCoefficients scaled_coefficients(const DimensionlessNumbers& dn);

/// Parses "key = value" lines ('#' starts a comment). Unknown keys and
/// malformed numbers throw UsageError; missing keys keep their defaults.
PhysicalInputs parse_inputs(std::istream& in);
PhysicalInputs read_inputs(const std::string& path);

/// Aligned human-readable table of the numbers and scaled coefficients.
void write_table(std::ostream& os, const DimensionlessNumbers& dn, const ScaledCoefficients& sc);
/// CSV header and one row (same column order).
std::string csv_header();
std::string csv_row(const DimensionlessNumbers& dn, const ScaledCoefficients& sc);

}  // namespace lowmach::scaling
