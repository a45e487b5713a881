#include <cmath>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "lowmach/errors.hpp"
#include "lowmach/fields/identities.hpp"
#include "lowmach/fields/operators.hpp"
#include "lowmach/fields/random_fields.hpp"
#include "lowmach/fields/snapshot_io.hpp"

using namespace lowmach;
using namespace lowmach::fields;

namespace {

constexpr double kPi = std::numbers::pi;

double max_diff(const ScalarField& a, const ScalarField& b) {
  double m = 0.0;
  auto va = a.values();
  auto vb = b.values();
  for (std::size_t i = 0; i < va.size(); ++i) m = std::max(m, std::abs(va[i] - vb[i]));
  return m;
}

double max_diff(const VectorField3& a, const VectorField3& b) {
  return std::max({max_diff(a[0], b[0]), max_diff(a[1], b[1]), max_diff(a[2], b[2])});
}

ScalarField fn(const GridPtr& g, double (*f)(double, double, double)) {
  return ScalarField::from_function(g, f);
}

// trapezoidal quadrature of |f|^2 over the 3-torus, written independently of the library
double quadrature_l2sq(const ScalarField& f) {
  const auto& g = f.grid();
  double h = 2 * kPi / static_cast<double>(g.n());
  double sum = 0.0;
  for (double v : f.values()) sum += v * v;
  double cell = g.mode() == DimMode::Full3D ? h * h * h : h * h * 2 * kPi;
  return sum * cell;
}

}  // namespace

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(Grid::create(DimMode::Full3D, 4), UsageError);
  CHECK_THROWS_AS(Grid::create(DimMode::Full3D, 12), UsageError);
  auto g = Grid::create(DimMode::Slab2p5D, 16);
  CHECK(g->size() == 256);
  CHECK(g->dealias_cutoff() == 5);
  auto mask = g->dealias_mask();
  for (std::size_t i = 0; i < mask.size(); ++i) {
    bool inside = std::abs(g->wavenumber(0)[i]) <= 5 && std::abs(g->wavenumber(1)[i]) <= 5;
    CHECK(mask[i] == (inside ? 1.0 : 0.0));
    CHECK(g->wavenumber(2)[i] == 0.0);
  }
}

TEST_CASE("spectral round trip") {
  for (auto mode : {DimMode::Slab2p5D, DimMode::Full3D}) {
    auto g = Grid::create(mode, 16);
    Rng rng(7);
    std::vector<double> v(g->size());
    for (auto& x : v) x = rng.uniform(-1, 1);
    auto f = ScalarField::from_values(g, v);
    auto back = ScalarField::from_spectrum(g, std::vector<Complex>(f.spectrum().begin(), f.spectrum().end()));
    double ref = f.max_abs();
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(std::abs(back.values()[i] - v[i]) <= 1e-13 * ref);
  }
}

TEST_CASE("derivative examples") {
  for (auto mode : {DimMode::Slab2p5D, DimMode::Full3D}) {
    auto g = Grid::create(mode, 16);
    auto s1 = fn(g, [](double x, double, double) { return std::sin(x); });
    auto gr = grad(s1);
    CHECK(max_diff(gr[0], fn(g, [](double x, double, double) { return std::cos(x); })) <= 1e-12);
    CHECK(gr[1].max_abs() <= 1e-12);
    CHECK(gr[2].max_abs() <= 1e-12);

    VectorField3 v(fn(g, [](double, double y, double) { return std::sin(y); }), ScalarField(g), ScalarField(g));
    auto c = curl(v);
    CHECK(c[0].max_abs() <= 1e-12);
    CHECK(c[1].max_abs() <= 1e-12);
    CHECK(max_diff(c[2], fn(g, [](double, double y, double) { return -std::cos(y); })) <= 1e-12);

    auto e = fn(g, [](double x, double y, double) { return std::sin(x) * std::cos(y); });
    CHECK(max_diff(laplacian(e), -2.0 * e) <= 1e-12);

    Rng rng(3);
    auto r = random_band_limited_vector(g, rng, 5);
    CHECK(div(curl(r)).max_abs() <= 1e-12);
    auto rs = random_band_limited(g, rng, 5);
    auto cg = curl(grad(rs));
    CHECK(std::max({cg[0].max_abs(), cg[1].max_abs(), cg[2].max_abs()}) <= 1e-12);
  }
}

TEST_CASE("slab mode has no x3 dependence") {
  auto g = Grid::create(DimMode::Slab2p5D, 16);
  Rng rng(11);
  auto f = random_band_limited(g, rng, 5);
  CHECK(partial(f, 2).max_abs() == 0.0);
}

TEST_CASE("diff_op arity") {
  auto g = Grid::create(DimMode::Slab2p5D, 8);
  ScalarField s(g, 1.0);
  VectorField3 v(g);
  CHECK_THROWS_AS(diff_op(DiffKind::Div, AnyField{s}), UsageError);
  CHECK_THROWS_AS(diff_op(DiffKind::Curl, AnyField{s}), UsageError);
  CHECK_THROWS_AS(diff_op(DiffKind::Grad, AnyField{v}), UsageError);
  CHECK_NOTHROW(diff_op(DiffKind::Laplacian, AnyField{v}));
  CHECK_NOTHROW(diff_op(DiffKind::Partial, AnyField{s}, 1));
}

TEST_CASE("dealiased products") {
  auto g = Grid::create(DimMode::Full3D, 16);
  Rng rng(5);
  auto b = ScalarField::from_values(g, [&] {
    std::vector<double> v(g->size());
    for (auto& x : v) x = rng.uniform(-1, 1);
    return v;
  }());
  auto masked = b;
  masked.apply_mask();
  CHECK(max_diff(product(ScalarField(g, 1.0), b), masked) <= 1e-13);

  auto s = fn(g, [](double x, double, double) { return std::sin(x); });
  auto expect = fn(g, [](double x, double, double) { return (1 - std::cos(2 * x)) / 2; });
  CHECK(max_diff(product(s, s), expect) <= 1e-13);

  VectorField3 w(ScalarField(g, 1.0), ScalarField(g), ScalarField(g));
  CHECK(max_diff(advect(w, s), fn(g, [](double x, double, double) { return std::cos(x); })) <= 1e-12);

  auto other = Grid::create(DimMode::Full3D, 8);
  CHECK_THROWS_AS(product(s, ScalarField(other, 1.0)), UsageError);
}

TEST_CASE("sobolev norms") {
  auto g = Grid::create(DimMode::Full3D, 16);
  const double vol = std::pow(2 * kPi, 3);
  ScalarField c(g, -2.5);
  for (double s : {0.0, 1.0, 2.0, 4.0}) CHECK(sobolev_norm(c, s) == doctest::Approx(2.5 * std::pow(2 * kPi, 1.5)).epsilon(1e-13));

  auto f = fn(g, [](double x, double, double) { return std::sin(x); });
  // oracle: quadrature of f and of (1 - lap) f = 2 sin x
  double l2 = std::sqrt(quadrature_l2sq(f));
  CHECK(l2 == doctest::Approx(std::sqrt(vol / 2)).epsilon(1e-12));
  CHECK(sobolev_norm(f, 0) == doctest::Approx(l2).epsilon(1e-12));
  CHECK(sobolev_norm(f, 2) == doctest::Approx(std::sqrt(quadrature_l2sq(2.0 * f))).epsilon(1e-12));
  CHECK(sobolev_norm(f, 2) == doctest::Approx(2 * std::sqrt(vol / 2)).epsilon(1e-12));
  CHECK_THROWS_AS(sobolev_norm(f, -1), UsageError);

  Rng rng(9);
  for (auto mode : {DimMode::Slab2p5D, DimMode::Full3D}) {
    auto gm = Grid::create(mode, 16);
    auto r = random_band_limited(gm, rng, 7, 1.0);
    CHECK(sobolev_norm(r, 0) * sobolev_norm(r, 0) == doctest::Approx(quadrature_l2sq(r)).epsilon(1e-10));
    double prev = 0.0;
    for (double s = 0; s <= 4; s += 0.5) {
      double cur = sobolev_norm(r, s);
      CHECK(cur >= prev);
      prev = cur;
    }
  }
}

TEST_CASE("leray projection") {
  for (auto mode : {DimMode::Slab2p5D, DimMode::Full3D}) {
    auto g = Grid::create(mode, 16);
    Rng rng(13);
    auto v = random_band_limited_vector(g, rng, 5);
    auto pv = leray_project(v);
    CHECK(div(pv).max_abs() <= 1e-12);
    CHECK(max_diff(leray_project(pv), pv) <= 1e-13);
    auto cv = curl(v);
    CHECK(max_diff(leray_project(cv), cv) <= 1e-13);
    auto w = random_band_limited_vector(g, rng, 5);
    CHECK(std::abs(inner_product(pv, w) - inner_product(v, leray_project(w))) <= 1e-12 * sobolev_norm(v, 0) * sobolev_norm(w, 0));
    // the mean passes through
    VectorField3 mean(ScalarField(g, 1.0), ScalarField(g, 2.0), ScalarField(g, 3.0));
    CHECK(max_diff(leray_project(mean), mean) <= 1e-14);
  }
  auto g = Grid::create(DimMode::Full3D, 16);
  auto gr = grad(fn(g, [](double x, double y, double) { return std::sin(x) * std::sin(y); }));
  auto p = leray_project(gr);
  CHECK(std::max({p[0].max_abs(), p[1].max_abs(), p[2].max_abs()}) <= 1e-12);
}

TEST_CASE("poisson solve") {
  auto g = Grid::create(DimMode::Full3D, 16);
  auto rhs = fn(g, [](double x, double y, double) { return -2 * std::sin(x) * std::sin(y); });
  auto sol = poisson_solve_mean_zero(rhs);
  CHECK(max_diff(sol, fn(g, [](double x, double y, double) { return std::sin(x) * std::sin(y); })) <= 1e-13);
  CHECK(poisson_solve_mean_zero(ScalarField(g)).max_abs() == 0.0);
  CHECK_THROWS_AS(poisson_solve_mean_zero(ScalarField(g, 1e-6)), IncompatibleRhsError);

  Rng rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    auto r = random_band_limited(g, rng, 5);
    r -= ScalarField(g, r.mean());
    auto f = poisson_solve_mean_zero(r);
    CHECK(max_diff(laplacian(f), r) <= 1e-12);
    CHECK(std::abs(f.mean()) <= 1e-15);
  }
}

TEST_CASE("identities") {
  for (auto mode : {DimMode::Slab2p5D, DimMode::Full3D}) {
    auto g = Grid::create(mode, 16);
    CHECK(check_identities(VectorField3(g), VectorField3(g)).max() == 0.0);
    VectorField3 h(ScalarField(g), fn(g, [](double x, double, double) { return std::sin(x); }), ScalarField(g));
    VectorField3 u(fn(g, [](double, double y, double) { return std::cos(y); }), ScalarField(g), ScalarField(g));
    CHECK(check_identities(u, h).max() <= 1e-10);
  }
  // hand expansion for the single-mode pair: curl H = (0,0,cos x1), |curl H|^2 = cos^2 x1
  auto g = Grid::create(DimMode::Slab2p5D, 16);
  VectorField3 h(ScalarField(g), fn(g, [](double x, double, double) { return std::sin(x); }), ScalarField(g));
  auto hxc = cross(h, curl(h));  // (sin x1 cos x1, 0, 0)
  CHECK(max_diff(hxc[0], fn(g, [](double x, double, double) { return std::sin(x) * std::cos(x); })) <= 1e-13);
  CHECK(max_diff(div(hxc), fn(g, [](double x, double, double) { return std::cos(2 * x); })) <= 1e-12);

  Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    auto gm = Grid::create(trial % 2 ? DimMode::Full3D : DimMode::Slab2p5D, 16);
    auto ru = random_band_limited_vector(gm, rng, 5);
    auto rh = random_band_limited_vector(gm, rng, 5);
    CHECK(check_identities(ru, rh).max() <= 1e-10);
  }
}

TEST_CASE("random fields are reproducible and real") {
  auto g = Grid::create(DimMode::Full3D, 16);
  Rng a(42), b(42);
  auto fa = random_band_limited(g, a, 4);
  auto fb = random_band_limited(g, b, 4);
  CHECK(max_diff(fa, fb) == 0.0);
  auto copy = ScalarField::from_values(g, std::vector<double>(fa.values().begin(), fa.values().end()));
  for (std::size_t i = 0; i < g->spectral_size(); ++i) CHECK(std::abs(copy.spectrum()[i] - fa.spectrum()[i]) <= 1e-14);
}

TEST_CASE("snapshot io") {
  auto g = Grid::create(DimMode::Slab2p5D, 16);
  Rng rng(1);
  auto f0 = random_band_limited(g, rng, 5);
  auto f1 = random_band_limited(g, rng, 5);
  std::stringstream buf;
  write_snapshot(buf, {&f0, &f1});
  std::string bytes = buf.str();
  CHECK(bytes.substr(0, 4) == "MLFD");
  CHECK(bytes.size() == 4 + 4 + 1 + 4 + 1 + 2 * 256 * 8);
  CHECK(static_cast<unsigned char>(bytes[8]) == 0);
  CHECK(static_cast<unsigned char>(bytes[9]) == 16);
  auto snap = read_snapshot(buf);
  REQUIRE(snap.components.size() == 2);
  CHECK(snap.grid->n() == 16);
  CHECK(max_diff(snap.components[0], f0) == 0.0);
  CHECK(max_diff(snap.components[1], f1) == 0.0);
  std::stringstream bad("XXXX");
  CHECK_THROWS(read_snapshot(bad));
}
