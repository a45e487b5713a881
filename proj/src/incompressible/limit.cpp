#include "lowmach/incompressible/limit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lowmach/errors.hpp"
#include "lowmach/fields/operators.hpp"

namespace lowmach::incompressible {

namespace op = fields;

namespace {

struct Coeffs {
  double mu = 0.0;
  double nu = 0.0;
  double r0 = 1.0;
};

Coeffs coeffs(const LimitMode& mode) {
  if (const auto* v = std::get_if<Viscous>(&mode)) return {v->mu, v->nu, 1.0};
  return {0.0, 0.0, std::get<Ideal>(mode).r0};
}

// mag.grad mag - r0 vel.grad vel, dealiased
VectorField3 momentum_flux(const VectorField3& vel, const VectorField3& mag, double r0) {
  VectorField3 n = op::advect(mag, mag);
  n.axpy(-r0, op::advect(vel, vel));
  return n;
}

// projected nonlinear tendencies without diffusion
LimitTendency nonlinear(const VectorField3& vel, const VectorField3& mag, const Coeffs& c) {
  VectorField3 tv = op::leray_project(momentum_flux(vel, mag, c.r0));
  tv *= 1.0 / c.r0;
  VectorField3 tm = op::leray_project(op::advect(mag, vel) - op::advect(vel, mag));
  return {std::move(tv), std::move(tm)};
}

void decay(VectorField3& v, double coef, double h) {
  if (coef == 0.0 || h == 0.0) return;
  auto k2 = v.grid().k_squared();
  for (int c = 0; c < 3; ++c) {
    auto s = v[c].mutable_spectrum();
    for (std::size_t m = 0; m < s.size(); ++m) s[m] *= std::exp(-coef * k2[m] * h);
  }
}

struct Pair {
  VectorField3 vel;
  VectorField3 mag;
};

Pair propagate(const Pair& p, const Coeffs& c, double h) {
  Pair out = p;
  decay(out.vel, c.mu, h);
  decay(out.mag, c.nu, h);
  return out;
}

Pair combine(Pair a, double s, const LimitTendency& t) {
  a.vel.axpy(s, t.vel);
  a.mag.axpy(s, t.mag);
  return a;
}

Pair project(Pair p) {
  return {op::leray_project(p.vel), op::leray_project(p.mag)};
}

double grad_sq(const VectorField3& v) {
  double s = 0.0;
  for (int c = 0; c < 3; ++c) s -= op::inner_product(v[c], op::laplacian(v[c]));
  return s;
}

bool finite(const VectorField3& v) { return std::isfinite(v.max_magnitude()); }

}  // namespace

LimitState LimitState::make(VectorField3 vel, VectorField3 mag, LimitMode mode) {
  VectorField3 pv = op::leray_project(vel);
  VectorField3 pm = op::leray_project(mag);
  ScalarField p = recover_pressure(pv, pm, mode);
  return {std::move(pv), std::move(pm), std::move(p), mode};
}

LimitTendency limit_tendency(const VectorField3& vel, const VectorField3& mag, const LimitMode& mode) {
  const Coeffs c = coeffs(mode);
  LimitTendency t = nonlinear(vel, mag, c);
  if (c.mu != 0.0) t.vel.axpy(c.mu, op::laplacian(vel));
  if (c.nu != 0.0) t.mag.axpy(c.nu, op::laplacian(mag));
  return t;
}

ScalarField recover_pressure(const VectorField3& vel, const VectorField3& mag, const LimitMode& mode) {
  const Coeffs c = coeffs(mode);
  ScalarField p = op::poisson_solve_mean_zero(op::div(momentum_flux(vel, mag, c.r0)));
  p.axpy(-0.5, op::dot(mag, mag));
  p -= ScalarField(p.grid_ptr(), p.mean());
  return p;
}

ScalarField pressure_dt(const LimitState& s) {
  const Coeffs c = coeffs(s.mode);
  const LimitTendency t = limit_tendency(s.vel, s.mag, s.mode);
  VectorField3 nt = op::advect(t.mag, s.mag) + op::advect(s.mag, t.mag);
  nt.axpy(-c.r0, op::advect(t.vel, s.vel) + op::advect(s.vel, t.vel));
  ScalarField pt = op::poisson_solve_mean_zero(op::div(nt));
  pt -= op::dot(s.mag, t.mag);
  pt -= ScalarField(pt.grid_ptr(), pt.mean());
  return pt;
}

ScalarField material_dt_pressure(const LimitState& s) {
  return pressure_dt(s) + op::advect(s.vel, s.pressure);
}

double limit_energy(const LimitState& s) {
  const Coeffs c = coeffs(s.mode);
  return 0.5 * (c.r0 * op::inner_product(s.vel, s.vel) + op::inner_product(s.mag, s.mag));
}

double dissipation_rate(const VectorField3& vel, const VectorField3& mag, const LimitMode& mode) {
  const Coeffs c = coeffs(mode);
  double d = 0.0;
  if (c.mu != 0.0) d += c.mu * grad_sq(vel);
  if (c.nu != 0.0) d += c.nu * grad_sq(mag);
  return d;
}

double advective_dt_bound(const LimitState& s) {
  const double speed = s.vel.max_magnitude() + s.mag.max_magnitude();
  if (speed == 0.0) return std::numeric_limits<double>::infinity();
  return s.vel.grid().spacing() / speed;
}

LimitState step_limit(const LimitState& s, double dt, bool force, double* dissipated) {
  if (!(dt > 0.0)) throw UsageError("step_limit: dt must be positive");
  const double bound = advective_dt_bound(s);
  if (dt > bound && !force) {
    throw StabilityError("step_limit: dt " + std::to_string(dt) + " exceeds advective bound " +
                             std::to_string(bound),
                         dt, bound);
  }
  const Coeffs c = coeffs(s.mode);
  const double h = dt;
  const Pair u1{s.vel, s.mag};
  const LimitTendency k1 = nonlinear(u1.vel, u1.mag, c);
  const Pair u2 = project(propagate(combine(u1, 0.5 * h, k1), c, 0.5 * h));
  const LimitTendency k2 = nonlinear(u2.vel, u2.mag, c);
  const Pair eu_half = propagate(u1, c, 0.5 * h);
  const Pair u3 = project(combine(eu_half, 0.5 * h, k2));
  const LimitTendency k3 = nonlinear(u3.vel, u3.mag, c);
  const Pair k3_half = propagate(Pair{k3.vel, k3.mag}, c, 0.5 * h);
  const Pair u4 = project(combine(propagate(u1, c, h), h, LimitTendency{k3_half.vel, k3_half.mag}));
  const LimitTendency k4 = nonlinear(u4.vel, u4.mag, c);

  Pair acc = propagate(Pair{k1.vel, k1.mag}, c, h);
  const Pair k23 = propagate(Pair{k2.vel + k3.vel, k2.mag + k3.mag}, c, 0.5 * h);
  acc.vel.axpy(2.0, k23.vel);
  acc.mag.axpy(2.0, k23.mag);
  acc.vel += k4.vel;
  acc.mag += k4.mag;
  Pair next = project(combine(propagate(u1, c, h), h / 6.0, LimitTendency{acc.vel, acc.mag}));

  if (dissipated && (c.mu != 0.0 || c.nu != 0.0)) {
    *dissipated += h / 6.0 *
                   (dissipation_rate(u1.vel, u1.mag, s.mode) + 2.0 * dissipation_rate(u2.vel, u2.mag, s.mode) +
                    2.0 * dissipation_rate(u3.vel, u3.mag, s.mode) + dissipation_rate(u4.vel, u4.mag, s.mode));
  }
  ScalarField p = finite(next.vel) && finite(next.mag) ? recover_pressure(next.vel, next.mag, s.mode)
                                                       : ScalarField(s.pressure.grid_ptr(), NAN);
  return {std::move(next.vel), std::move(next.mag), std::move(p), s.mode};
}

LimitTrajectory solve_limit(const LimitState& init, double T, double dt, std::vector<double> out_times,
                            bool force) {
  if (!(T >= 0.0)) throw UsageError("solve_limit: T must be nonnegative");
  if (!(dt > 0.0)) throw UsageError("solve_limit: dt must be positive");
  std::sort(out_times.begin(), out_times.end());
  out_times.erase(std::unique(out_times.begin(), out_times.end()), out_times.end());
  if (out_times.empty() || out_times.front() != 0.0 || out_times.back() != T) {
    throw UsageError("solve_limit: output times must include 0 and T");
  }

  LimitTrajectory traj;
  traj.dt = dt;
  LimitState cur = init;
  double t = 0.0;
  double diss = 0.0;
  auto record = [&] {
    traj.times.push_back(t);
    traj.states.push_back(cur);
    traj.material_dt_pressure.push_back(material_dt_pressure(cur));
    traj.dissipated.push_back(diss);
    traj.last_good_time = t;
  };
  record();
  for (std::size_t k = 1; k < out_times.size(); ++k) {
    const double target = out_times[k];
    while (t < target) {
      const bool last = (target - t) <= dt * (1.0 + 1e-6);
      const double h = last ? target - t : dt;
      LimitState next = step_limit(cur, h, force, &diss);
      if (!finite(next.vel) || !finite(next.mag)) {
        traj.status = RunStatus::Truncated;
        traj.message = "non-finite state after t = " + std::to_string(t);
        return traj;
      }
      cur = std::move(next);
      t = last ? target : t + h;
    }
    record();
  }
  return traj;
}

}  // namespace lowmach::incompressible
