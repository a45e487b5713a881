#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lowmach/incompressible/limit.hpp"
#include "lowmach/systems/gas_law.hpp"
#include "lowmach/systems/params.hpp"
#include "lowmach/systems/state.hpp"
#include "lowmach/systems/state_space.hpp"

namespace lowmach::compressible {

using incompressible::RunStatus;
using systems::FullState;
using systems::GasLaw;
using systems::IdealState;
using systems::PhysicalParams;
using systems::StateSpaceBox;

enum class Scheme { ImexFull, Rk4Ideal, Rk4FullExplicit };

Scheme parse_scheme(const std::string& name);
std::string scheme_name(Scheme s);

struct SchemeConfig {
  Scheme scheme = Scheme::ImexFull;
  double cfl = 0.3;
  std::optional<double> dt_override;
  int clean_div_every = 1;
  /// Weight of the implicit stage in imex_step_full; 0 gives explicit midpoint.
  double implicit_weight = 1.0;

  /// Throws UsageError unless cfl is in (0, 1) and clean_div_every >= 1.
  void validate() const;
};

/// ImexFull: cfl h / (max|u| + max|H| + 1). Rk4FullExplicit: the acoustic
/// bound cfl eps h / (max|u| + sqrt(gamma (1 + eps max|phi|)) + max|H|),
/// further capped by the explicit diffusion limit.
double stable_dt(const FullState& U, const PhysicalParams& p, const SchemeConfig& cfg);

/// Rk4Ideal: cfl eps h / (max|u| + c_fast), c_fast = 1/sqrt(a_min r_min) + max|H|/sqrt(r_min).
double stable_dt(const IdealState& V, const GasLaw& law, double eps, const SchemeConfig& cfg);

/// Two-stage additive Runge-Kutta: implicit midpoint (trapezoidal on the
/// linear part) for full_linear, explicit midpoint for full_nonlinear.
FullState imex_step_full(const FullState& U, double dt, const PhysicalParams& p, double implicit_weight = 1.0);

/// Classical RK4 on rhs_full.
FullState rk4_step_full(const FullState& U, double dt, const PhysicalParams& p);

/// Classical RK4 on rhs_ideal. Negative dt integrates backwards.
IdealState rk4_step_ideal(const IdealState& V, const GasLaw& law, double eps, double dt);

/// Leray projection of the magnetic field.
fields::VectorField3 clean_divergence(const fields::VectorField3& H);

/// Integral of q (full system).
double mass(const FullState& U);
/// Scaled density excess (integral of R(S, p) - R(S_base, p_base) |torus|) / eps
/// for the ideal system, whose conserved density is R(S, p) rather than q.
double mass(const IdealState& V, const GasLaw& law, double eps);

struct Diagnostics {
  double time = 0.0;
  double mass = 0.0;
  double divH = 0.0;  ///< L2 norm of div H
  double maxq = 0.0;
  double maxu = 0.0;
  double maxH = 0.0;
  double maxphi = 0.0;  ///< phi or Theta
  double h0 = 0.0;
  double h2 = 0.0;
  double h4 = 0.0;
};

template <typename S>
struct Trajectory {
  std::vector<double> times;
  std::vector<S> states;
  std::vector<Diagnostics> diagnostics;
  Scheme scheme = Scheme::ImexFull;
  double dt = 0.0;  ///< step used (last value if adaptive)
  long steps = 0;
  RunStatus status = RunStatus::Completed;
  double achieved_T = 0.0;  ///< last time the state was known to be in the box
  std::string message;
};

/// Advances the full system with ImexFull or Rk4FullExplicit, landing on
/// every output time. Leaving the box or producing non-finite values
/// truncates the trajectory.
Trajectory<FullState> solve_compressible(const FullState& init, double T, const SchemeConfig& cfg,
                                         const PhysicalParams& p, std::vector<double> out_times,
                                         const StateSpaceBox& box = {});

/// Ideal-system analogue (scheme Rk4Ideal).
Trajectory<IdealState> solve_compressible(const IdealState& init, double T, const SchemeConfig& cfg,
                                          const GasLaw& law, double eps, std::vector<double> out_times,
                                          const StateSpaceBox& box = {});

}  // namespace lowmach::compressible
