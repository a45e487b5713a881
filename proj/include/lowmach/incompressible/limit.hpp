#pragma once

#include <string>
#include <variant>
#include <vector>

#include "lowmach/fields/field.hpp"

namespace lowmach::incompressible {

using fields::ScalarField;
using fields::VectorField3;

/// Viscous incompressible MHD with viscosity mu and magnetic diffusivity nu.
struct Viscous {
  double mu = 0.0;
  double nu = 0.0;
};
/// Ideal incompressible MHD with constant density factor r0 = r(S_base, 0).
struct Ideal {
  double r0 = 1.0;
};
using LimitMode = std::variant<Viscous, Ideal>;

/// Divergence-free velocity and magnetic field with the recovered, mean-zero pressure.
struct LimitState {
  VectorField3 vel;
  VectorField3 mag;
  ScalarField pressure;
  LimitMode mode;

  /// Projects vel and mag onto divergence-free fields and recovers the pressure.
  static LimitState make(VectorField3 vel, VectorField3 mag, LimitMode mode);
};

struct LimitTendency {
  VectorField3 vel;
  VectorField3 mag;
};

/// Analytic time derivatives of vel and mag (projected form, diffusion included).
LimitTendency limit_tendency(const VectorField3& vel, const VectorField3& mag, const LimitMode& mode);

/// Solves lap(pi + |mag|^2/2) = div(mag.grad mag - c vel.grad vel), with c = 1
/// (viscous) or r0 (ideal), and returns the mean-zero pi.
ScalarField recover_pressure(const VectorField3& vel, const VectorField3& mag, const LimitMode& mode);

/// d pi / dt from the time-differentiated pressure equation.
ScalarField pressure_dt(const LimitState& s);

/// pi_t + vel.grad pi.
ScalarField material_dt_pressure(const LimitState& s);

/// Kinetic plus magnetic energy: (|vel|^2 + |mag|^2)/2 integrated, with the
/// kinetic part weighted by r0 in ideal mode.
double limit_energy(const LimitState& s);

/// mu |grad vel|^2 + nu |grad mag|^2 integrated (0 in ideal mode).
double dissipation_rate(const VectorField3& vel, const VectorField3& mag, const LimitMode& mode);

/// Advective step bound h / (max|vel| + max|mag|).
double advective_dt_bound(const LimitState& s);

/// One Lawson (integrating factor) RK4 step. Throws StabilityError when dt
/// exceeds advective_dt_bound, unless `force` is set. When `dissipated` is
/// given, the dissipation integral over the step is added to it.
LimitState step_limit(const LimitState& s, double dt, bool force = false, double* dissipated = nullptr);

enum class RunStatus { Completed, Truncated };

struct LimitTrajectory {
  std::vector<double> times;
  std::vector<LimitState> states;
  std::vector<ScalarField> material_dt_pressure;
  /// Dissipation integral accumulated from t = 0 to each snapshot.
  std::vector<double> dissipated;
  double dt = 0.0;
  RunStatus status = RunStatus::Completed;
  double last_good_time = 0.0;
  std::string message;
};

/// Advances to T with step dt, landing exactly on every output time (which
/// must lie in [0, T] and include 0 and T). A non-finite state truncates the
/// trajectory with status Truncated.
LimitTrajectory solve_limit(const LimitState& init, double T, double dt, std::vector<double> out_times,
                            bool force = false);

}  // namespace lowmach::incompressible
