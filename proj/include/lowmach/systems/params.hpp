#pragma once

namespace lowmach::systems {

/// Coefficients of the scaled compressible system. `eps` is the Mach number.
struct PhysicalParams {
  double mu = 0.0;
  double lambda = 0.0;
  double nu = 0.0;
  double kappa = 0.0;
  double gamma = 5.0 / 3.0;
  double eps = 0.1;

  bool any_dissipation() const { return mu != 0.0 || lambda != 0.0 || nu != 0.0 || kappa != 0.0; }

  /// Throws UsageError unless gamma > 1, eps > 0, mu, nu, kappa >= 0 and,
  /// when any dissipation is on, mu > 0 and 2 mu + 3 lambda > 0.
  void validate_full() const;
  /// Throws UsageError unless gamma > 1, eps > 0 and all dissipation is exactly 0.
  void validate_ideal() const;
};

}  // namespace lowmach::systems
