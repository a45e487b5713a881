#include "lowmach/asymptotics/residuals.hpp"

#include <algorithm>

#include "lowmach/errors.hpp"
#include "lowmach/fields/operators.hpp"

namespace lowmach::asymptotics {

namespace op = fields;
using fields::ScalarField;
using fields::VectorField3;
using fields::pointwise_product;

template <typename S>
double ResidualSeries<S>::max_norm(std::size_t i) const {
  return norms.at(i).empty() ? 0.0 : *std::max_element(norms[i].begin(), norms[i].end());
}

template <typename S>
double ResidualSeries<S>::max_row_u(std::size_t i) const {
  return row_u_norms.at(i).empty() ? 0.0 : *std::max_element(row_u_norms[i].begin(), row_u_norms[i].end());
}

template <typename S>
double ResidualSeries<S>::max_mismatch() const {
  return mismatch.empty() ? 0.0 : *std::max_element(mismatch.begin(), mismatch.end());
}

template struct ResidualSeries<FullState>;
template struct ResidualSeries<IdealState>;

namespace {

template <typename S>
void finish(ResidualSeries<S>& out, S displayed, S direct) {
  out.mismatch.push_back(systems::sobolev_norm(systems::difference(displayed, direct), 0.0));
  for (std::size_t i = 0; i < out.s_list.size(); ++i) {
    out.norms[i].push_back(systems::sobolev_norm(displayed, out.s_list[i]));
    out.row_u_norms[i].push_back(op::sobolev_norm(displayed.u, out.s_list[i]));
  }
  out.displayed.push_back(std::move(displayed));
  out.direct.push_back(std::move(direct));
}

template <typename S>
ResidualSeries<S> start(const LimitTrajectory& limit, std::vector<double> s_list) {
  if (limit.states.empty()) throw UsageError("limit trajectory has no snapshots");
  if (limit.material_dt_pressure.size() != limit.states.size()) {
    throw UsageError("limit trajectory is missing pressure material-derivative snapshots");
  }
  ResidualSeries<S> out;
  out.times = limit.times;
  out.s_list = std::move(s_list);
  out.norms.resize(out.s_list.size());
  out.row_u_norms.resize(out.s_list.size());
  return out;
}

}  // namespace

ResidualSeries<FullState> residual_full(const LimitTrajectory& limit, double eps, const systems::PhysicalParams& p,
                                        std::vector<double> s_list) {
  auto out = start<FullState>(limit, std::move(s_list));
  const double e = eps;
  for (std::size_t t = 0; t < limit.states.size(); ++t) {
    const auto& st = limit.states[t];
    const auto* vm = std::get_if<incompressible::Viscous>(&st.mode);
    if (vm == nullptr) throw UsageError("residual_full needs a viscous-mode limit trajectory");
    if (vm->mu != p.mu || vm->nu != p.nu) throw UsageError("limit viscosities differ from the full-system parameters");
    const auto& g = st.vel.grid_ptr();
    const ScalarField& pi = st.pressure;
    const ScalarField& m = limit.material_dt_pressure[t];
    const auto tend = incompressible::limit_tendency(st.vel, st.mag, st.mode);
    const ScalarField pi_t = m - op::advect(st.vel, pi);
    const VectorField3 X = tend.vel + op::advect(st.vel, st.vel);  // w_t + w.grad w

    // rows of the closed-form source
    VectorField3 Xp = X + op::grad(pi);
    FullState R((0.5 * e) * m, (0.5 * e * e) * pointwise_product(pi, Xp), VectorField3(g),
                ScalarField(g));
    R.phi = 0.5 * e * m + (0.25 * e * e * e) * pointwise_product(pi, m);

    // approximation substituted into the left-hand sides
    const FullState U = approx_full(st, e);
    const ScalarField J = ScalarField(g, 1.0) + e * U.q;
    const ScalarField Jp = ScalarField(g, 1.0) + e * U.phi;
    const ScalarField divv = op::div(U.u);
    const ScalarField qt = (0.5 * e) * pi_t;
    ScalarField dq = qt + op::advect(U.u, U.q) + (1.0 / e) * pointwise_product(J, divv);
    VectorField3 press = pointwise_product(J, op::grad(U.phi)) + pointwise_product(Jp, op::grad(U.q));
    press *= 1.0 / e;
    VectorField3 du = pointwise_product(J, X) + press - op::advect(U.H, U.H);
    du.axpy(0.5, op::grad(op::dot(U.H, U.H)));
    du.axpy(-p.mu, op::laplacian(U.u));
    VectorField3 dH = tend.mag + op::advect(U.u, U.H) + op::product(divv, U.H) - op::advect(U.H, U.u);
    dH.axpy(-p.nu, op::laplacian(U.H));
    ScalarField dphi = pointwise_product(J, qt + op::advect(U.u, U.phi)) +
                       ((p.gamma - 1.0) / e) * pointwise_product(pointwise_product(J, Jp), divv);
    finish(out, std::move(R), FullState(std::move(dq), std::move(du), std::move(dH), std::move(dphi)));
  }
  return out;
}

ResidualSeries<IdealState> residual_ideal(const LimitTrajectory& limit, double eps, const systems::GasLaw& law,
                                          std::vector<double> s_list) {
  auto out = start<IdealState>(limit, std::move(s_list));
  const double e = eps;
  const double r0 = systems::base_density_factor(law);
  for (std::size_t t = 0; t < limit.states.size(); ++t) {
    const auto& st = limit.states[t];
    if (!std::holds_alternative<incompressible::Ideal>(st.mode)) {
      throw UsageError("residual_ideal needs an ideal-mode limit trajectory");
    }
    const auto& g = st.vel.grid_ptr();
    const ScalarField& Pi = st.pressure;
    const ScalarField& m = limit.material_dt_pressure[t];
    const auto tend = incompressible::limit_tendency(st.vel, st.mag, st.mode);
    const ScalarField Pi_t = m - op::advect(st.vel, Pi);
    const VectorField3 X = tend.vel + op::advect(st.vel, st.vel);  // v_t + v.grad v

    // coefficients at (S_base + eps^2 Pi, eps^2 Pi), which is also where V_eps sits
    const IdealState V = approx_ideal(st, e);
    const auto co = systems::gas_coeffs(law, V.theta, V.q, e);
    IdealState R(e * pointwise_product(co.a, m),
                 pointwise_product(co.r - ScalarField(g, r0), X), VectorField3(g), e * m);

    const ScalarField divv = op::div(V.u);
    ScalarField dq = pointwise_product(co.a, e * Pi_t + op::advect(V.u, V.q)) + (1.0 / e) * divv;
    VectorField3 du = pointwise_product(co.r, X) + (1.0 / e) * op::grad(V.q) - op::advect(V.H, V.H);
    du.axpy(0.5, op::grad(op::dot(V.H, V.H)));
    VectorField3 dH = tend.mag + op::advect(V.u, V.H) + op::product(divv, V.H) - op::advect(V.H, V.u);
    ScalarField dth = e * Pi_t + op::advect(V.u, V.theta);
    finish(out, std::move(R), IdealState(std::move(dq), std::move(du), std::move(dH), std::move(dth)));
  }
  return out;
}

}  // namespace lowmach::asymptotics
