#include "lowmach/compressible/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lowmach/errors.hpp"
#include "lowmach/fields/operators.hpp"
#include "lowmach/systems/rhs.hpp"

namespace lowmach::compressible {

namespace op = fields;
using systems::apply_mask;
using systems::axpy;

Scheme parse_scheme(const std::string& name) {
  if (name == "imex" || name == "ImexFull") return Scheme::ImexFull;
  if (name == "rk4-ideal" || name == "Rk4Ideal") return Scheme::Rk4Ideal;
  if (name == "rk4-full" || name == "Rk4FullExplicit") return Scheme::Rk4FullExplicit;
  throw UsageError("unknown scheme '" + name + "' (expected imex, rk4-ideal or rk4-full)");
}

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::ImexFull: return "imex";
    case Scheme::Rk4Ideal: return "rk4-ideal";
    case Scheme::Rk4FullExplicit: return "rk4-full";
  }
  return "?";
}

void SchemeConfig::validate() const {
  if (!(cfl > 0.0 && cfl < 1.0)) throw UsageError("cfl must lie in (0, 1)");
  if (clean_div_every < 1) throw UsageError("clean_div_every must be at least 1");
  if (dt_override && !(*dt_override > 0.0)) throw UsageError("dt override must be positive");
  if (!(implicit_weight >= 0.0 && implicit_weight <= 1.0)) throw UsageError("implicit_weight must lie in [0, 1]");
}

double stable_dt(const FullState& U, const PhysicalParams& p, const SchemeConfig& cfg) {
  if (cfg.dt_override) return *cfg.dt_override;
  const double h = U.q.grid().spacing();
  const double umax = U.u.max_magnitude();
  const double hmax = U.H.max_magnitude();
  if (cfg.scheme == Scheme::ImexFull) return cfg.cfl * h / (umax + hmax + 1.0);
  const double c = std::sqrt(p.gamma * (1.0 + p.eps * U.phi.max_abs())) + hmax;
  double dt = cfg.cfl * p.eps * h / (umax + c);
  const double diff = std::max({p.mu + std::abs(p.lambda), p.nu, p.kappa});
  if (diff > 0.0) dt = std::min(dt, cfg.cfl * h * h / (diff * U.q.grid().active_dims()));
  return dt;
}

double stable_dt(const IdealState& V, const GasLaw& law, double eps, const SchemeConfig& cfg) {
  if (cfg.dt_override) return *cfg.dt_override;
  const auto co = systems::gas_coeffs(law, V.theta, V.q, eps);
  const double amin = co.a.min();
  const double rmin = co.r.min();
  const double c_fast = 1.0 / std::sqrt(amin * rmin) + V.H.max_magnitude() / std::sqrt(rmin);
  return cfg.cfl * eps * V.q.grid().spacing() / (V.u.max_magnitude() + c_fast);
}

FullState imex_step_full(const FullState& U, double dt, const PhysicalParams& p, double implicit_weight) {
  const double a = 0.5 * dt * implicit_weight;
  FullState Y = U;
  axpy(Y, 0.5 * dt, systems::full_nonlinear(U, p));
  if (implicit_weight < 1.0) axpy(Y, 0.5 * dt * (1.0 - implicit_weight), systems::full_linear(U, p));
  if (a > 0.0) systems::solve_linear_full(Y, a, p);
  apply_mask(Y);
  FullState out = U;
  axpy(out, dt, systems::rhs_full(Y, p));
  apply_mask(out);
  return out;
}

template <typename S, typename F>
static S rk4(const S& X, double dt, F&& raw_rhs) {
  auto rhs = [&](const S& x) {
    S k = raw_rhs(x);
    apply_mask(k);
    return k;
  };
  const S k1 = rhs(X);
  S x2 = X;
  axpy(x2, 0.5 * dt, k1);
  const S k2 = rhs(x2);
  S x3 = X;
  axpy(x3, 0.5 * dt, k2);
  const S k3 = rhs(x3);
  S x4 = X;
  axpy(x4, dt, k3);
  const S k4 = rhs(x4);
  S out = X;
  axpy(out, dt / 6.0, k1);
  axpy(out, dt / 3.0, k2);
  axpy(out, dt / 3.0, k3);
  axpy(out, dt / 6.0, k4);
  apply_mask(out);
  return out;
}

FullState rk4_step_full(const FullState& U, double dt, const PhysicalParams& p) {
  return rk4(U, dt, [&](const FullState& x) { return systems::rhs_full(x, p); });
}

IdealState rk4_step_ideal(const IdealState& V, const GasLaw& law, double eps, double dt) {
  return rk4(V, dt, [&](const IdealState& x) { return systems::rhs_ideal(x, law, eps); });
}

fields::VectorField3 clean_divergence(const fields::VectorField3& H) { return op::leray_project(H); }

double mass(const FullState& U) { return U.q.integral(); }

double mass(const IdealState& V, const GasLaw& law, double eps) {
  const auto& g = V.q.grid();
  auto q = V.q.values();
  auto th = V.theta.values();
  const double base = law.density(law.S_base, law.p_base);
  double sum = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    sum += law.density(law.S_base + eps * th[i], law.p_base * std::exp(eps * q[i])) - base;
  }
  return sum * g.cell_volume() / eps;
}

namespace {

template <typename S>
Diagnostics diagnose(const S& X, double t, double m) {
  Diagnostics d;
  d.time = t;
  d.mass = m;
  d.divH = op::sobolev_norm(op::div(X.H), 0.0);
  d.maxq = X.q.max_abs();
  d.maxu = X.u.max_magnitude();
  d.maxH = X.H.max_magnitude();
  d.maxphi = X.last().max_abs();
  d.h0 = systems::sobolev_norm(X, 0.0);
  d.h2 = systems::sobolev_norm(X, 2.0);
  d.h4 = systems::sobolev_norm(X, 4.0);
  return d;
}

std::vector<double> normalize_times(std::vector<double> out_times, double T) {
  if (!(T >= 0.0)) throw UsageError("final time must be nonnegative");
  std::sort(out_times.begin(), out_times.end());
  out_times.erase(std::unique(out_times.begin(), out_times.end()), out_times.end());
  if (out_times.empty() || out_times.front() != 0.0 || out_times.back() != T) {
    throw UsageError("output times must include 0 and T");
  }
  return out_times;
}

template <typename S, typename DtFn, typename StepFn, typename MassFn>
Trajectory<S> drive(const S& init, double T, const SchemeConfig& cfg, std::vector<double> out_times,
                    const StateSpaceBox& box, DtFn&& dt_of, StepFn&& step, MassFn&& mass_of) {
  cfg.validate();
  out_times = normalize_times(std::move(out_times), T);
  Trajectory<S> traj;
  traj.scheme = cfg.scheme;
  S cur = init;
  double t = 0.0;
  auto record = [&] {
    traj.times.push_back(t);
    traj.states.push_back(cur);
    traj.diagnostics.push_back(diagnose(cur, t, mass_of(cur)));
  };
  auto truncate = [&](const std::string& why) {
    traj.status = RunStatus::Truncated;
    traj.achieved_T = t;
    traj.message = why;
    return traj;
  };
  {
    const auto rep = systems::in_state_space(cur, box);
    if (!rep.pass) return truncate("initial state outside the state-space box (" + rep.failures.front() + ")");
  }
  record();
  for (std::size_t k = 1; k < out_times.size(); ++k) {
    const double target = out_times[k];
    while (t < target) {
      double dt = dt_of(cur);
      if (!(dt > 0.0) || !std::isfinite(dt)) return truncate("invalid time step at t = " + std::to_string(t));
      const bool last = (target - t) <= dt * (1.0 + 1e-6);
      if (last) dt = target - t;
      S next = init;
      try {
        next = step(cur, dt);
      } catch (const StateSpaceExit& e) {
        return truncate(e.what());
      }
      ++traj.steps;
      if (traj.steps % cfg.clean_div_every == 0) next.H = clean_divergence(next.H);
      const auto rep = systems::in_state_space(next, box);
      if (!rep.pass) {
        std::string which;
        for (const auto& f : rep.failures) which += (which.empty() ? "" : ",") + f;
        return truncate("left the state-space box (" + which + ") after t = " + std::to_string(t));
      }
      cur = std::move(next);
      t = last ? target : t + dt;
      traj.dt = dt;
    }
    record();
  }
  traj.achieved_T = t;
  return traj;
}

}  // namespace

Trajectory<FullState> solve_compressible(const FullState& init, double T, const SchemeConfig& cfg,
                                         const PhysicalParams& p, std::vector<double> out_times,
                                         const StateSpaceBox& box) {
  p.validate_full();
  if (cfg.scheme == Scheme::Rk4Ideal) throw UsageError("scheme rk4-ideal applies to the ideal system only");
  return drive<FullState>(
      init, T, cfg, std::move(out_times), box, [&](const FullState& U) { return stable_dt(U, p, cfg); },
      [&](const FullState& U, double dt) {
        return cfg.scheme == Scheme::ImexFull ? imex_step_full(U, dt, p, cfg.implicit_weight)
                                              : rk4_step_full(U, dt, p);
      },
      [](const FullState& U) { return mass(U); });
}

Trajectory<IdealState> solve_compressible(const IdealState& init, double T, const SchemeConfig& cfg,
                                          const GasLaw& law, double eps, std::vector<double> out_times,
                                          const StateSpaceBox& box) {
  if (!(eps > 0.0)) throw UsageError("eps must be positive");
  if (cfg.scheme != Scheme::Rk4Ideal) throw UsageError("the ideal system is integrated with rk4-ideal");
  return drive<IdealState>(
      init, T, cfg, std::move(out_times), box,
      [&](const IdealState& V) { return stable_dt(V, law, eps, cfg); },
      [&](const IdealState& V, double dt) { return rk4_step_ideal(V, law, eps, dt); },
      [&](const IdealState& V) { return mass(V, law, eps); });
}

}  // namespace lowmach::compressible
