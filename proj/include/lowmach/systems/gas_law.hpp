#pragma once

#include <functional>

#include "lowmach/fields/field.hpp"

namespace lowmach::systems {

/// Density as a function of entropy and pressure, rho = R(S, p), with dR/dp.
struct GasLaw {
  double S_base = 1.0;
  double p_base = 1.0;
  std::function<double(double, double)> density;
  std::function<double(double, double)> density_dp;

  /// R(S, p) = (p exp(-S))^(1/gamma).
  static GasLaw perfect(double gamma, double S_base = 1.0, double p_base = 1.0);
};

struct CoeffPair {
  double a;
  double r;
};

/// a = (p/R) dR/dp and r = R/p at entropy S and pressure p_base exp(eps_q).
/// Throws InvalidGasLaw on nonpositive R or dR/dp.
CoeffPair gas_coeffs_at(const GasLaw& law, double S, double eps_q);

struct GasCoeffs {
  fields::ScalarField a;
  fields::ScalarField r;
};

/// Pointwise a, r at S = S_base + eps Theta, p = p_base exp(eps q).
GasCoeffs gas_coeffs(const GasLaw& law, const fields::ScalarField& theta,
                     const fields::ScalarField& q, double eps);

/// r(S_base, 0), the density factor of the ideal limit system.
double base_density_factor(const GasLaw& law);

}  // namespace lowmach::systems
