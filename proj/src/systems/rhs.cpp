#include "lowmach/systems/rhs.hpp"

#include <cmath>

#include "lowmach/errors.hpp"
#include "lowmach/fields/operators.hpp"

namespace lowmach::systems {

using fields::Complex;
namespace op = fields;

SourceTerms source_terms(const VectorField3& u, const VectorField3& H, const PhysicalParams& p) {
  const auto& g = u.grid_ptr();
  const ScalarField divu = op::div(u);
  VectorField3 F = p.mu * op::laplacian(u);
  F.axpy(p.mu + p.lambda, op::grad(divu));

  std::array<VectorField3, 3> du{op::grad(u[0]), op::grad(u[1]), op::grad(u[2])};
  std::vector<double> l(g->size(), 0.0);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      auto a = du[static_cast<std::size_t>(j)][i].values();
      auto b = du[static_cast<std::size_t>(i)][j].values();
      for (std::size_t k = 0; k < l.size(); ++k) {
        const double d = 0.5 * (a[k] + b[k]);
        l[k] += 2.0 * p.mu * d * d;
      }
    }
  }
  auto dv = divu.values();
  for (std::size_t k = 0; k < l.size(); ++k) l[k] += p.lambda * dv[k] * dv[k];
  ScalarField L = op::dealias(ScalarField::from_values(g, std::move(l)));

  const VectorField3 c = op::curl(H);
  ScalarField G = p.nu * op::dot(c, c);
  return {std::move(F), std::move(L), std::move(G)};
}

void check_positivity(const FullState& U, double eps) {
  for (const auto& [name, f] : {std::pair<const char*, const ScalarField*>{"q", &U.q}, {"phi", &U.phi}}) {
    for (double v : f->values()) {
      if (!std::isfinite(v)) throw StateSpaceExit(name, v);
    }
    const double lo = f->min();
    if (!(1.0 + eps * lo > 0.0)) throw StateSpaceExit(name, lo);
  }
}

FullState full_linear(const FullState& U, const PhysicalParams& p) {
  const double ie = 1.0 / p.eps;
  const ScalarField divu = op::div(U.u);
  FullState out(-ie * divu, -ie * op::grad(U.q + U.phi), p.nu * op::laplacian(U.H),
                -(p.gamma - 1.0) * ie * divu);
  out.u.axpy(p.mu, op::laplacian(U.u));
  out.phi.axpy(p.kappa, op::laplacian(U.phi));
  return out;
}

FullState full_nonlinear(const FullState& U, const PhysicalParams& p) {
  check_positivity(U, p.eps);
  const double e = p.eps;
  const auto& g = U.grid_ptr();
  const ScalarField J = ScalarField(g, 1.0) + e * U.q;
  const ScalarField divu = op::div(U.u);
  const VectorField3 gq = op::grad(U.q);

  ScalarField nq = -(op::advect(U.u, U.q) + op::product(U.q, divu));

  // bracket divided by J: (q - phi) grad q + H.grad H - grad|H|^2/2 + (mu+lambda) grad div u - eps q mu lap u
  VectorField3 bu = op::product(U.q - U.phi, gq);
  bu += op::advect(U.H, U.H);
  bu.axpy(-0.5, op::grad(op::dot(U.H, U.H)));
  const VectorField3 lapu = op::laplacian(U.u);
  bu.axpy(p.mu + p.lambda, op::grad(divu));
  bu -= e * p.mu * fields::pointwise_product(U.q, lapu);
  VectorField3 nu = -op::advect(U.u, U.u) + fields::pointwise_quotient(bu, J);

  VectorField3 nH = op::advect(U.H, U.u) - op::advect(U.u, U.H) - op::product(divu, U.H);

  const auto src = source_terms(U.u, U.H, p);
  ScalarField bphi = e * (src.L + src.G);
  bphi -= e * p.kappa * fields::pointwise_product(U.q, op::laplacian(U.phi));
  ScalarField nphi = -op::advect(U.u, U.phi) - (p.gamma - 1.0) * op::product(U.phi, divu) +
                     fields::pointwise_quotient(bphi, J);
  return FullState(std::move(nq), std::move(nu), std::move(nH), std::move(nphi));
}

FullState rhs_full(const FullState& U, const PhysicalParams& p) {
  FullState out = full_nonlinear(U, p);
  axpy(out, 1.0, full_linear(U, p));
  return out;
}

void solve_linear_full(FullState& R, double a, const PhysicalParams& p, double stiff_scale) {
  const auto& g = R.q.grid();
  auto kd0 = g.derivative_symbol(0);
  auto kd1 = g.derivative_symbol(1);
  auto kd2 = g.derivative_symbol(2);
  auto k2 = g.k_squared();
  auto q = R.q.mutable_spectrum();
  auto phi = R.phi.mutable_spectrum();
  std::array<std::span<Complex>, 3> u{R.u[0].mutable_spectrum(), R.u[1].mutable_spectrum(),
                                      R.u[2].mutable_spectrum()};
  std::array<std::span<Complex>, 3> h{R.H[0].mutable_spectrum(), R.H[1].mutable_spectrum(),
                                      R.H[2].mutable_spectrum()};
  const double c = stiff_scale * a / p.eps;
  const double gm1 = p.gamma - 1.0;
  const Complex I(0.0, 1.0);
  for (std::size_t m = 0; m < g.spectral_size(); ++m) {
    const std::array<double, 3> k{kd0[m], kd1[m], kd2[m]};
    const double kk = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
    const double du = 1.0 + a * p.mu * k2[m];
    const double dphi = 1.0 + a * p.kappa * k2[m];
    const double dh = 1.0 + a * p.nu * k2[m];
    for (auto& hc : h) hc[m] /= dh;

    const Complex su = k[0] * u[0][m] + k[1] * u[1][m] + k[2] * u[2][m];
    const double beta = 1.0 + gm1 / dphi;
    const Complex s = (su - I * c * kk * (q[m] + phi[m] / dphi)) / (du + c * c * kk * beta);
    const Complex qn = q[m] - I * c * s;
    const Complex phin = (phi[m] - I * c * gm1 * s) / dphi;
    const Complex sigma = qn + phin;
    for (int ax = 0; ax < 3; ++ax) u[ax][m] = (u[ax][m] - I * c * k[ax] * sigma) / du;
    q[m] = qn;
    phi[m] = phin;
  }
}

IdealState rhs_ideal(const IdealState& V, const GasLaw& law, double eps) {
  for (const ScalarField* f : {&V.q, &V.theta}) {
    for (double v : f->values()) {
      if (!std::isfinite(v)) throw StateSpaceExit(f == &V.q ? "q" : "theta", v);
    }
  }
  const auto co = gas_coeffs(law, V.theta, V.q, eps);
  const double ie = 1.0 / eps;
  const ScalarField divu = op::div(V.u);

  ScalarField tq = -op::advect(V.u, V.q) - ie * fields::pointwise_quotient(divu, co.a);
  VectorField3 mag = op::advect(V.H, V.H);
  mag.axpy(-0.5, op::grad(op::dot(V.H, V.H)));
  mag.axpy(-ie, op::grad(V.q));
  VectorField3 tu = -op::advect(V.u, V.u) + fields::pointwise_quotient(mag, co.r);
  VectorField3 tH = op::advect(V.H, V.u) - op::advect(V.u, V.H) - op::product(divu, V.H);
  ScalarField tth = -op::advect(V.u, V.theta);
  return IdealState(std::move(tq), std::move(tu), std::move(tH), std::move(tth));
}

}  // namespace lowmach::systems
