#include <cmath>
#include <sstream>

#include "doctest.h"
#include "lowmach/errors.hpp"
#include "lowmach/fields/operators.hpp"
#include "lowmach/fields/random_fields.hpp"
#include "lowmach/systems/matrices.hpp"
#include "lowmach/systems/rhs.hpp"
#include "lowmach/systems/state_space.hpp"
#include "trig_oracle.hpp"

using namespace lowmach;
using namespace lowmach::systems;
using fields::DimMode;
using fields::Grid;
using fields::Rng;

namespace {

ScalarField sample(const GridPtr& g, const Modes& m) {
  return ScalarField::from_function(g, [&](double x, double y, double z) { return m({x, y, z}); });
}

double max_diff(const ScalarField& a, const ScalarField& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.values().size(); ++i) m = std::max(m, std::abs(a.values()[i] - b.values()[i]));
  return m;
}

// smooth, low-mode full state with nonzero div u, on any grid
FullState random_state(const GridPtr& g, Rng& rng, double amp, int max_mode = 2) {
  auto rs = [&] {
    auto f = fields::random_band_limited(g, rng, max_mode, 1.0);
    f *= amp / std::max(f.max_abs(), 1e-300);
    return f;
  };
  auto u = fields::random_band_limited_vector(g, rng, max_mode, 1.0);
  u *= amp / u.max_magnitude();
  auto H = fields::leray_project(fields::random_band_limited_vector(g, rng, max_mode, 1.0));
  H *= amp / H.max_magnitude();
  return FullState(rs(), std::move(u), std::move(H), rs());
}

PhysicalParams viscous(double eps) {
  PhysicalParams p;
  p.mu = 0.07;
  p.lambda = 0.02;
  p.nu = 0.05;
  p.kappa = 0.03;
  p.gamma = 1.4;
  p.eps = eps;
  return p;
}

}  // namespace

TEST_CASE("params validation") {
  PhysicalParams p = viscous(0.1);
  CHECK_NOTHROW(p.validate_full());
  p.gamma = 1.0;
  CHECK_THROWS_AS(p.validate_full(), UsageError);
  p = viscous(0.1);
  p.lambda = -0.1;  // 2 mu + 3 lambda < 0
  CHECK_THROWS_AS(p.validate_full(), UsageError);
  p = viscous(0.1);
  CHECK_THROWS_AS(p.validate_ideal(), UsageError);
  PhysicalParams ideal;
  CHECK_NOTHROW(ideal.validate_ideal());
  ideal.eps = 0.0;
  CHECK_THROWS_AS(ideal.validate_ideal(), UsageError);
}

TEST_CASE("source terms") {
  auto g = Grid::create(DimMode::Slab2p5D, 16);
  PhysicalParams p;
  auto zero = source_terms(VectorField3(g), VectorField3(g), p);
  CHECK(zero.F.max_magnitude() == 0.0);
  CHECK(zero.L.max_abs() == 0.0);
  CHECK(zero.G.max_abs() == 0.0);

  p.mu = 1.0;
  p.lambda = 0.0;
  p.nu = 1.0;
  VectorField3 u(ScalarField::from_function(g, [](double, double y, double) { return std::sin(y); }), ScalarField(g),
                 ScalarField(g));
  VectorField3 H(ScalarField(g), ScalarField::from_function(g, [](double x, double, double) { return std::sin(x); }),
                 ScalarField(g));
  auto st = source_terms(u, H, p);
  CHECK(max_diff(st.F[0], -1.0 * u[0]) <= 1e-12);
  CHECK(st.F[1].max_abs() <= 1e-12);
  CHECK(max_diff(st.G, ScalarField::from_function(g, [](double x, double, double) { return std::cos(x) * std::cos(x); })) <= 1e-12);
  // |D(u)|^2 = 2 (cos x2 / 2)^2, so L = 2 mu * cos^2 x2 / 2
  CHECK(max_diff(st.L, ScalarField::from_function(g, [](double, double y, double) { return std::cos(y) * std::cos(y); })) <= 1e-12);
}

TEST_CASE("rhs_full annihilates constants at rest") {
  auto g = Grid::create(DimMode::Full3D, 8);
  FullState U(ScalarField(g, 0.3), VectorField3(g), VectorField3(ScalarField(g, 1.0), ScalarField(g, -2.0), ScalarField(g, 0.5)),
              ScalarField(g, -0.2));
  auto t = rhs_full(U, viscous(0.1));
  CHECK(max_abs(t) <= 1e-14);
}

TEST_CASE("rhs_full against the hand-substituted equations") {
  const double eps = 0.15;
  const PhysicalParams p = viscous(eps);
  const double gm1 = p.gamma - 1.0;
  Modes a{{{0.5, {1, 0, 0}, true}, {0.3, {0, 1, 1}, false}}};
  Modes b{{{0.4, {1, 0, 1}, false}, {-0.2, {0, 2, 0}, true}}};
  Modes q = a.scaled(eps), phi = b.scaled(eps);
  std::array<Modes, 3> u{Modes{{{0.3, {0, 1, 0}, false}, {0.2, {1, 0, 0}, true}, {0.1, {0, 0, 1}, true}}},
                         Modes{{{0.4, {1, 0, 0}, true}, {-0.15, {0, 1, 1}, false}}},
                         Modes{{{0.25, {1, 0, 0}, false}, {0.1, {0, 1, 0}, true}}}};
  std::array<Modes, 3> H{Modes{{{0.3, {0, 1, 0}, true}}}, Modes{{{0.2, {0, 0, 1}, false}}}, Modes{{{0.5, {1, 0, 0}, true}}}};

  auto g = Grid::create(DimMode::Full3D, 16);
  FullState U(sample(g, q), VectorField3(sample(g, u[0]), sample(g, u[1]), sample(g, u[2])),
              VectorField3(sample(g, H[0]), sample(g, H[1]), sample(g, H[2])), sample(g, phi));
  FullState t = rhs_full(U, p);

  double err = 0.0;
  for (std::size_t idx = 0; idx < g->size(); ++idx) {
    const auto x = g->point(idx);
    const double J = 1 + eps * q(x), Jp = 1 + eps * phi(x);
    double divu = 0, udq = 0, udphi = 0, hsq_grad[3] = {0, 0, 0};
    for (int i = 0; i < 3; ++i) {
      divu += u[i].d(i, x);
      udq += u[i](x) * q.d(i, x);
      udphi += u[i](x) * phi.d(i, x);
    }
    for (int j = 0; j < 3; ++j)
      for (int m = 0; m < 3; ++m) hsq_grad[j] += H[m](x) * H[m].d(j, x);
    const double qt = -udq - J * divu / eps;
    err = std::max(err, std::abs(qt - t.q.values()[idx]));

    double D2 = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const double d = 0.5 * (u[j].d(i, x) + u[i].d(j, x));
        D2 += d * d;
      }
    for (int j = 0; j < 3; ++j) {
      double graddiv = 0;
      for (int i = 0; i < 3; ++i) graddiv += u[i].dd(i, j, x);
      double F = p.mu * u[j].lap(x) + (p.mu + p.lambda) * graddiv;
      double ugu = 0, hgh = 0, hgu = 0, ugh = 0;
      for (int i = 0; i < 3; ++i) {
        ugu += u[i](x) * u[j].d(i, x);
        hgh += H[i](x) * H[j].d(i, x);
        hgu += H[i](x) * u[j].d(i, x);
        ugh += u[i](x) * H[j].d(i, x);
      }
      const double press = (J * phi.d(j, x) + Jp * q.d(j, x)) / eps;
      const double ut = -ugu + (F - press + hgh - hsq_grad[j]) / J;
      err = std::max(err, std::abs(ut - t.u[j].values()[idx]));
      const double Ht = -ugh - divu * H[j](x) + hgu + p.nu * H[j].lap(x);
      err = std::max(err, std::abs(Ht - t.H[j].values()[idx]));
    }
    const double c0 = H[2].d(1, x) - H[1].d(2, x), c1 = H[0].d(2, x) - H[2].d(0, x), c2 = H[1].d(0, x) - H[0].d(1, x);
    const double Lsrc = 2 * p.mu * D2 + p.lambda * divu * divu;
    const double Gsrc = p.nu * (c0 * c0 + c1 * c1 + c2 * c2);
    const double phit = -udphi - gm1 * Jp * divu / eps + (p.kappa * phi.lap(x) + eps * (Lsrc + Gsrc)) / J;
    err = std::max(err, std::abs(phit - t.phi.values()[idx]));
  }
  CHECK(err <= 1e-9);
}

TEST_CASE("rhs_full conserves the integral of q") {
  Rng rng(2);
  for (auto mode : {DimMode::Slab2p5D, DimMode::Full3D}) {
    auto g = Grid::create(mode, 16);
    for (int trial = 0; trial < 5; ++trial) {
      auto U = random_state(g, rng, 0.8, 5);
      apply_mask(U);
      CHECK(std::abs(rhs_full(U, viscous(0.1)).q.integral()) <= 1e-11);
    }
  }
}

TEST_CASE("rhs_full positivity") {
  auto g = Grid::create(DimMode::Slab2p5D, 8);
  FullState U(g);
  U.q = ScalarField(g, -11.0);
  try {
    rhs_full(U, viscous(0.1));
    FAIL("expected state-space exit");
  } catch (const StateSpaceExit& e) {
    CHECK(e.field() == "q");
    CHECK(e.extremum() == -11.0);
  }
  U.q = ScalarField(g);
  U.phi = ScalarField(g, -20.0);
  CHECK_THROWS_AS(rhs_full(U, viscous(0.1)), StateSpaceExit);
}

TEST_CASE("linear and nonlinear parts sum to rhs_full; implicit solve inverts I - aL") {
  auto g = Grid::create(DimMode::Full3D, 16);
  Rng rng(4);
  auto U = random_state(g, rng, 0.5, 4);
  const auto p = viscous(0.05);
  auto sum = full_linear(U, p);
  axpy(sum, 1.0, full_nonlinear(U, p));
  CHECK(max_abs(difference(sum, rhs_full(U, p))) <= 1e-12 * max_abs(sum));

  const double a = 0.013;
  FullState R = U;
  axpy(R, -a, full_linear(U, p));
  solve_linear_full(R, a, p);
  CHECK(max_abs(difference(R, U)) <= 1e-12);
}

TEST_CASE("gas coefficients") {
  const double gamma = 5.0 / 3.0;
  auto law = GasLaw::perfect(gamma, 0.7, 1.3);
  auto g = Grid::create(DimMode::Slab2p5D, 8);
  Rng rng(1);
  auto th = fields::random_band_limited(g, rng, 2);
  auto q = fields::random_band_limited(g, rng, 2);
  for (double eps : {0.0, 0.05, 0.3}) {
    auto c = gas_coeffs(law, th, q, eps);
    for (double v : c.a.values()) CHECK(v == doctest::Approx(1.0 / gamma).epsilon(1e-14));
    for (double v : c.r.values()) CHECK(v > 0);
  }
  auto c0 = gas_coeffs(law, th, q, 0.0);
  const double r_expected = std::pow(1.3, 1.0 / gamma - 1.0) * std::exp(-0.7 / gamma);
  for (double v : c0.r.values()) CHECK(v == doctest::Approx(r_expected).epsilon(1e-14));
  CHECK(base_density_factor(law) == doctest::Approx(r_expected).epsilon(1e-14));

  GasLaw bad = law;
  bad.density_dp = [](double, double) { return -1.0; };
  CHECK_THROWS_AS(gas_coeffs_at(bad, 1.0, 0.0), InvalidGasLaw);
  bad = law;
  bad.density = [](double, double) { return 0.0; };
  CHECK_THROWS_AS(gas_coeffs(bad, th, q, 0.1), InvalidGasLaw);
}

TEST_CASE("rhs_ideal") {
  auto g = Grid::create(DimMode::Slab2p5D, 16);
  auto law = GasLaw::perfect(1.4);
  IdealState rest(ScalarField(g, 0.2), VectorField3(g), VectorField3(ScalarField(g, 1.0), ScalarField(g), ScalarField(g)),
                  ScalarField(g, -0.3));
  CHECK(max_abs(rhs_ideal(rest, law, 0.1)) <= 1e-14);

  // Theta transport against hand substitution
  IdealState V(g);
  V.u[0] = ScalarField::from_function(g, [](double, double y, double) { return std::cos(y); });
  V.u[1] = ScalarField::from_function(g, [](double x, double, double) { return 0.5 * std::sin(x); });
  V.theta = ScalarField::from_function(g, [](double x, double y, double) { return std::sin(x + y); });
  auto t = rhs_ideal(V, law, 0.1);
  auto expect = ScalarField::from_function(g, [](double x, double y, double) {
    return -(std::cos(y) + 0.5 * std::sin(x)) * std::cos(x + y);
  });
  CHECK(max_diff(t.theta, expect) <= 1e-10);

  // singular terms scale as 1/eps
  IdealState W(g);
  W.u[0] = ScalarField::from_function(g, [](double x, double, double) { return std::sin(x); });
  auto t1 = rhs_ideal(W, law, 0.1), t2 = rhs_ideal(W, law, 0.2);
  CHECK(max_diff(t1.q, 2.0 * t2.q) <= 1e-13);
  GasLaw linear_law;  // R = p exp(-S): r = exp(-S) independent of q
  linear_law.density = [](double S, double p) { return p * std::exp(-S); };
  linear_law.density_dp = [](double S, double) { return std::exp(-S); };
  IdealState Z(g);
  Z.q = ScalarField::from_function(g, [](double x, double y, double) { return std::cos(x) * std::sin(y); });
  auto z1 = rhs_ideal(Z, linear_law, 0.1), z2 = rhs_ideal(Z, linear_law, 0.2);
  CHECK(max_diff(z1.u[0], 2.0 * z2.u[0]) <= 1e-12);
  CHECK(max_diff(z1.u[1], 2.0 * z2.u[1]) <= 1e-12);
}

TEST_CASE("matrix displays") {
  PhysicalParams p = viscous(0.2);
  PointState s{0.0, {0.1, -0.2, 0.3}, {0.4, 0.5, -0.6}, 0.0};
  auto M = assemble_matrices(s, p);
  CHECK((M.A0 - Matrix8::Identity()).cwiseAbs().maxCoeff() == 0.0);
  s.q = 0.7;
  s.phi = -0.4;
  M = assemble_matrices(s, p);
  CHECK(M.A[0](0, 1) == doctest::Approx((1 + 0.2 * 0.7) / 0.2));
  CHECK(M.A[0](1, 0) == doctest::Approx((1 - 0.2 * 0.4) / 0.2));
  CHECK(M.A[1](7, 2) == doctest::Approx(0.4 * (1 + 0.14) * (1 - 0.08) / 0.2));
  CHECK(M.A[2](3, 7) == doctest::Approx((1 + 0.14) / 0.2));
  CHECK(M.A[0](5, 2) == doctest::Approx(-0.4));  // row H2, col u2 = -H1
  CHECK(M.A[1](4, 1) == doctest::Approx(-0.5));  // row H1, col u1 = -H2
  p.eps = 0.0;
  CHECK_THROWS_AS(assemble_matrices(s, p), UsageError);

  std::ostringstream os;
  write_matrix_csv(os, Matrix8::Identity());
  std::string first = os.str().substr(0, os.str().find('\n'));
  CHECK(first == "1,0,0,0,0,0,0,0");
}

TEST_CASE("quasilinear form matches rhs_full") {
  Rng rng(8);
  for (auto mode : {DimMode::Slab2p5D, DimMode::Full3D}) {
    auto g = Grid::create(mode, 16);
    for (int trial = 0; trial < 3; ++trial) {
      const auto p = viscous(0.1 + 0.1 * trial);
      auto U = random_state(g, rng, 0.6, 2);
      auto t = rhs_full(U, p);
      auto Q = source_vector(U, p);
      std::array<FullState, 3> dU{FullState(g), FullState(g), FullState(g)};
      for (int j = 0; j < 3; ++j) {
        auto& d = dU[static_cast<std::size_t>(j)];
        d.q = fields::partial(U.q, j);
        d.phi = fields::partial(U.phi, j);
        for (int c = 0; c < 3; ++c) {
          d.u[c] = fields::partial(U.u[c], j);
          d.H[c] = fields::partial(U.H[c], j);
        }
      }
      double sq = 0, ref = 0;
      for (std::size_t i = 0; i < g->size(); ++i) {
        auto M = assemble_matrices(point_of(U, i), p);
        Vector8 res = M.A0 * point_of(t, i).as_vector() - point_of(Q, i).as_vector();
        for (int j = 0; j < 3; ++j) res += M.A[static_cast<std::size_t>(j)] * point_of(dU[static_cast<std::size_t>(j)], i).as_vector();
        sq += res.squaredNorm();
        ref = std::max(ref, res.cwiseAbs().maxCoeff());
      }
      CHECK(ref <= 1e-9);
      CHECK(std::sqrt(sq * g->cell_volume()) <= 1e-9);
    }
  }
}

TEST_CASE("symmetrizers") {
  PhysicalParams p = viscous(0.1);
  p.gamma = 5.0 / 3.0;
  auto S = symmetrizers(PointState{0.0, {1, 2, 3}, {0.1, 0.2, 0.3}, 0.0}, p);
  Vector8 expect;
  expect << 1, 1, 1, 1, 1, 1, 1, 1.5;
  CHECK((S.Ahat0.diagonal() - expect).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK((S.Atilde0.diagonal() - expect).cwiseAbs().maxCoeff() <= 1e-15);

  Rng rng(99);
  StateSpaceBox box;
  const double b = box.scalar_bound();
  double worst = 0, worst_hat_left = 0, worst_hat_product = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    p.eps = rng.uniform(0.01, 0.45);
    PointState s{rng.uniform(-b, b), {}, {}, rng.uniform(-b, b)};
    for (auto& v : s.u) v = rng.uniform(-box.u_max, box.u_max) / std::sqrt(3.0);
    for (auto& v : s.H) v = rng.uniform(-box.H_max, box.H_max) / std::sqrt(3.0);
    auto M = assemble_matrices(s, p);
    auto Y = symmetrizers(s, p);
    for (int j = 0; j < 3; ++j) {
      Matrix8 calA = M.A0.inverse() * M.A[static_cast<std::size_t>(j)];
      worst = std::max(worst, asymmetry(Y.Atilde0 * calA));
      worst_hat_left = std::max(worst_hat_left, asymmetry(Y.Ahat0 * M.A[static_cast<std::size_t>(j)]));
      worst_hat_product = std::max(worst_hat_product, asymmetry(Y.Ahat0 * calA));
    }
    const double lower = (1 - p.eps * b) / ((1 + p.eps * b) * (1 + p.eps * b));
    CHECK(Y.Atilde0.diagonal().minCoeff() >= lower * (1 - 1e-14));
    CHECK(Y.Ahat0.diagonal().minCoeff() > 0);
  }
  CHECK(worst <= 1e-12);
  CHECK(worst_hat_left <= 1e-12);
  // the A0^-1 variant of the hat symmetrizer is not symmetric away from q = 0
  CHECK(worst_hat_product > 1e-3);

  CHECK_THROWS_AS(symmetrizers(PointState{-20.0, {}, {}, 0.0}, p), StateSpaceExit);
}

TEST_CASE("canonical energy") {
  auto g = Grid::create(DimMode::Slab2p5D, 16);
  Rng rng(31);
  PhysicalParams p = viscous(0.0);
  auto U = random_state(g, rng, 1.0);
  CHECK(canonical_energy(FullState(g), U, p) == 0.0);
  auto E = random_state(g, rng, 1.0, 5);
  auto l2 = [](const auto& f) { return fields::sobolev_norm(f, 0.0) * fields::sobolev_norm(f, 0.0); };
  const double expect = l2(E.q) + l2(E.u) + l2(E.H) + l2(E.phi) / (p.gamma - 1);
  CHECK(canonical_energy(E, U, p) == doctest::Approx(expect).epsilon(1e-10));

  StateSpaceBox box;
  const double b = box.scalar_bound();
  for (int trial = 0; trial < 100; ++trial) {
    p.eps = rng.uniform(0.01, 0.3);
    auto Ui = random_state(g, rng, 1.5, 3);
    auto Ei = random_state(g, rng, 1.0, 5);
    const double e = p.eps;
    const double lo = std::min((1 - e * b) / ((1 + e * b) * (1 + e * b)), 1 / ((p.gamma - 1) * (1 + e * b)));
    const double hi = std::max({(1 + e * b) / ((1 - e * b) * (1 - e * b)), 1 / (1 - e * b), 1 / ((p.gamma - 1) * (1 - e * b))});
    const double plain = sobolev_norm(Ei, 0.0) * sobolev_norm(Ei, 0.0);
    const double ce = canonical_energy(Ei, Ui, p);
    CHECK(ce >= lo * plain * (1 - 1e-12));
    CHECK(ce <= hi * plain * (1 + 1e-12));
  }
}

TEST_CASE("state space box") {
  auto g = Grid::create(DimMode::Slab2p5D, 8);
  StateSpaceBox box;
  CHECK(in_state_space(FullState(g), box).pass);
  FullState U(g);
  U.q = ScalarField(g, box.q_max + 0.1);
  auto r = in_state_space(U, box);
  CHECK_FALSE(r.pass);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0] == "q");
  U.q = ScalarField(g, box.q_max);
  CHECK_FALSE(in_state_space(U, box).pass);
  IdealState V(g);
  V.H[0] = ScalarField(g, 10.0);
  auto rv = in_state_space(V, box);
  CHECK_FALSE(rv.pass);
  CHECK(rv.failures[0] == "H");
}
