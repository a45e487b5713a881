#include "lowmach/fields/operators.hpp"

#include <cmath>
#include <numbers>

#include "lowmach/errors.hpp"

namespace lowmach::fields {

namespace {

void require_same_grid(const Grid& a, const Grid& b, const char* op) {
  if (!a.same_as(b)) throw UsageError(std::string(op) + ": grid mismatch");
}

ScalarField multiply_spectrum(const ScalarField& f, const std::function<Complex(std::size_t)>& sym) {
  auto in = f.spectrum();
  std::vector<Complex> out(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = sym(i) * in[i];
  return ScalarField::from_spectrum(f.grid_ptr(), std::move(out));
}

ScalarField masked_values(const GridPtr& grid, std::vector<double> values) {
  auto f = ScalarField::from_values(grid, std::move(values));
  f.apply_mask();
  return f;
}

}  // namespace

ScalarField partial(const ScalarField& f, int axis) {
  if (axis < 0 || axis > 2) throw UsageError("partial: axis must be 0, 1 or 2");
  const auto kd = f.grid().derivative_symbol(axis);
  return multiply_spectrum(f, [&](std::size_t i) { return Complex(0.0, kd[i]); });
}

VectorField3 grad(const ScalarField& f) { return {partial(f, 0), partial(f, 1), partial(f, 2)}; }

ScalarField div(const VectorField3& v) {
  const auto& g = v.grid();
  auto s0 = v[0].spectrum();
  auto s1 = v[1].spectrum();
  auto s2 = v[2].spectrum();
  const auto k0 = g.derivative_symbol(0);
  const auto k1 = g.derivative_symbol(1);
  const auto k2 = g.derivative_symbol(2);
  std::vector<Complex> out(s0.size());
  const Complex I(0.0, 1.0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = I * (k0[i] * s0[i] + k1[i] * s1[i] + k2[i] * s2[i]);
  return ScalarField::from_spectrum(v.grid_ptr(), std::move(out));
}

VectorField3 curl(const VectorField3& v) {
  return {partial(v[2], 1) - partial(v[1], 2), partial(v[0], 2) - partial(v[2], 0),
          partial(v[1], 0) - partial(v[0], 1)};
}

ScalarField laplacian(const ScalarField& f) {
  const auto k2 = f.grid().k_squared();
  return multiply_spectrum(f, [&](std::size_t i) { return Complex(-k2[i], 0.0); });
}

VectorField3 laplacian(const VectorField3& v) { return {laplacian(v[0]), laplacian(v[1]), laplacian(v[2])}; }

AnyField diff_op(DiffKind kind, const AnyField& f, int axis) {
  const auto* s = std::get_if<ScalarField>(&f);
  const auto* v = std::get_if<VectorField3>(&f);
  switch (kind) {
    case DiffKind::Grad:
      if (!s) throw UsageError("diff_op: Grad needs a scalar field");
      return grad(*s);
    case DiffKind::Div:
      if (!v) throw UsageError("diff_op: Div needs a vector field");
      return div(*v);
    case DiffKind::Curl:
      if (!v) throw UsageError("diff_op: Curl needs a vector field");
      return curl(*v);
    case DiffKind::Laplacian:
      if (s) return laplacian(*s);
      return laplacian(*v);
    case DiffKind::Partial:
      if (s) return partial(*s, axis);
      return VectorField3(partial((*v)[0], axis), partial((*v)[1], axis), partial((*v)[2], axis));
  }
  throw UsageError("diff_op: unknown kind");
}

ScalarField dealias(const ScalarField& f) {
  ScalarField out = f;
  out.apply_mask();
  return out;
}

ScalarField product(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.grid(), b.grid(), "product");
  auto av = a.values();
  auto bv = b.values();
  std::vector<double> out(av.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = av[i] * bv[i];
  return masked_values(a.grid_ptr(), std::move(out));
}

VectorField3 product(const ScalarField& a, const VectorField3& b) {
  return {product(a, b[0]), product(a, b[1]), product(a, b[2])};
}

ScalarField dot(const VectorField3& a, const VectorField3& b) {
  require_same_grid(a.grid(), b.grid(), "dot");
  std::vector<double> out(a.grid().size(), 0.0);
  for (int c = 0; c < 3; ++c) {
    auto av = a[c].values();
    auto bv = b[c].values();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += av[i] * bv[i];
  }
  return masked_values(a.grid_ptr(), std::move(out));
}

VectorField3 cross(const VectorField3& a, const VectorField3& b) {
  require_same_grid(a.grid(), b.grid(), "cross");
  const std::size_t n = a.grid().size();
  std::array<std::span<const double>, 3> av{a[0].values(), a[1].values(), a[2].values()};
  std::array<std::span<const double>, 3> bv{b[0].values(), b[1].values(), b[2].values()};
  std::array<std::vector<double>, 3> out{std::vector<double>(n), std::vector<double>(n),
                                         std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    out[0][i] = av[1][i] * bv[2][i] - av[2][i] * bv[1][i];
    out[1][i] = av[2][i] * bv[0][i] - av[0][i] * bv[2][i];
    out[2][i] = av[0][i] * bv[1][i] - av[1][i] * bv[0][i];
  }
  return {masked_values(a.grid_ptr(), std::move(out[0])), masked_values(a.grid_ptr(), std::move(out[1])),
          masked_values(a.grid_ptr(), std::move(out[2]))};
}

ScalarField advect(const VectorField3& w, const ScalarField& f) {
  require_same_grid(w.grid(), f.grid(), "advect");
  const std::size_t n = f.grid().size();
  std::vector<double> out(n, 0.0);
  const int dims = f.grid().active_dims();
  for (int j = 0; j < dims; ++j) {
    const auto df = partial(f, j);
    auto dv = df.values();
    auto wv = w[j].values();
    for (std::size_t i = 0; i < n; ++i) out[i] += wv[i] * dv[i];
  }
  return masked_values(f.grid_ptr(), std::move(out));
}

VectorField3 advect(const VectorField3& w, const VectorField3& f) {
  return {advect(w, f[0]), advect(w, f[1]), advect(w, f[2])};
}

AnyField dealias_product(const AnyField& a, const AnyField& b, Contraction contraction) {
  const auto* as = std::get_if<ScalarField>(&a);
  const auto* av = std::get_if<VectorField3>(&a);
  const auto* bs = std::get_if<ScalarField>(&b);
  const auto* bv = std::get_if<VectorField3>(&b);
  switch (contraction) {
    case Contraction::Pointwise:
      if (as && bs) return product(*as, *bs);
      if (as && bv) return product(*as, *bv);
      if (av && bs) return product(*bs, *av);
      throw UsageError("dealias_product: pointwise product needs at least one scalar");
    case Contraction::Dot:
      if (av && bv) return dot(*av, *bv);
      throw UsageError("dealias_product: dot needs two vectors");
    case Contraction::Cross:
      if (av && bv) return cross(*av, *bv);
      throw UsageError("dealias_product: cross needs two vectors");
    case Contraction::Advective:
      if (!av) throw UsageError("dealias_product: advecting field must be a vector");
      if (bs) return advect(*av, *bs);
      return advect(*av, *bv);
  }
  throw UsageError("dealias_product: unknown contraction");
}

double sobolev_norm(const ScalarField& f, double s) {
  if (!(s >= 0.0)) throw UsageError("sobolev_norm: s must be >= 0");
  const auto& g = f.grid();
  auto c = f.spectrum();
  const auto k2 = g.k_squared();
  const auto w = g.hermitian_weight();
  double sum = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double m = s == 0.0 ? 1.0 : std::pow(1.0 + k2[i], s);
    sum += w[i] * m * std::norm(c[i]);
  }
  return std::sqrt(sum * Grid::volume());
}

double sobolev_norm(const VectorField3& v, double s) {
  double sum = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double c = sobolev_norm(v[i], s);
    sum += c * c;
  }
  return std::sqrt(sum);
}

double sobolev_norm(const AnyField& f, double s) {
  return std::visit([s](const auto& x) { return sobolev_norm(x, s); }, f);
}

double inner_product(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.grid(), b.grid(), "inner_product");
  auto ca = a.spectrum();
  auto cb = b.spectrum();
  const auto w = a.grid().hermitian_weight();
  double sum = 0.0;
  for (std::size_t i = 0; i < ca.size(); ++i) sum += w[i] * (ca[i] * std::conj(cb[i])).real();
  return sum * Grid::volume();
}

double inner_product(const VectorField3& a, const VectorField3& b) {
  return inner_product(a[0], b[0]) + inner_product(a[1], b[1]) + inner_product(a[2], b[2]);
}

VectorField3 leray_project(const VectorField3& v) {
  const auto& g = v.grid();
  std::array<std::span<const Complex>, 3> in{v[0].spectrum(), v[1].spectrum(), v[2].spectrum()};
  std::array<std::span<const double>, 3> k{g.derivative_symbol(0), g.derivative_symbol(1),
                                           g.derivative_symbol(2)};
  const std::size_t m = g.spectral_size();
  std::array<std::vector<Complex>, 3> out{std::vector<Complex>(m), std::vector<Complex>(m),
                                          std::vector<Complex>(m)};
  for (std::size_t i = 0; i < m; ++i) {
    const double kk = k[0][i] * k[0][i] + k[1][i] * k[1][i] + k[2][i] * k[2][i];
    if (kk == 0.0) {
      for (int c = 0; c < 3; ++c) out[c][i] = in[c][i];
      continue;
    }
    const Complex kv = (k[0][i] * in[0][i] + k[1][i] * in[1][i] + k[2][i] * in[2][i]) / kk;
    for (int c = 0; c < 3; ++c) out[c][i] = in[c][i] - k[c][i] * kv;
  }
  return {ScalarField::from_spectrum(v.grid_ptr(), std::move(out[0])),
          ScalarField::from_spectrum(v.grid_ptr(), std::move(out[1])),
          ScalarField::from_spectrum(v.grid_ptr(), std::move(out[2]))};
}

ScalarField poisson_solve_mean_zero(const ScalarField& rhs, double tolerance) {
  const double mean = rhs.mean();
  if (std::abs(mean) > tolerance) {
    throw IncompatibleRhsError("poisson: right-hand side has mean " + std::to_string(mean));
  }
  const auto k2 = rhs.grid().k_squared();
  return multiply_spectrum(rhs, [&](std::size_t i) {
    return k2[i] == 0.0 ? Complex{} : Complex(-1.0 / k2[i], 0.0);
  });
}

ScalarField prolong(const ScalarField& f, const GridPtr& fine) {
  const auto& coarse = f.grid();
  if (fine->mode() != coarse.mode() || fine->n() < coarse.n()) {
    throw UsageError("prolong: target grid must be a finer grid of the same mode");
  }
  const std::size_t nc = coarse.n();
  const std::size_t nf = fine->n();
  const std::size_t hc = nc / 2 + 1;
  const std::size_t hf = nf / 2 + 1;
  auto c = f.spectrum();
  std::vector<Complex> out(fine->spectral_size(), Complex{});
  auto map_index = [&](std::size_t i) -> std::ptrdiff_t {
    // Nyquist modes are ambiguous on the finer grid; they are dropped.
    if (i == nc / 2) return -1;
    return i < nc / 2 ? static_cast<std::ptrdiff_t>(i)
                      : static_cast<std::ptrdiff_t>(nf - (nc - i));
  };
  if (coarse.mode() == DimMode::Slab2p5D) {
    for (std::size_t i1 = 0; i1 < nc; ++i1) {
      const auto f1 = map_index(i1);
      if (f1 < 0) continue;
      for (std::size_t j = 0; j < nc / 2; ++j) {
        out[static_cast<std::size_t>(f1) * hf + j] = c[i1 * hc + j];
      }
    }
  } else {
    for (std::size_t i1 = 0; i1 < nc; ++i1) {
      const auto f1 = map_index(i1);
      if (f1 < 0) continue;
      for (std::size_t i2 = 0; i2 < nc; ++i2) {
        const auto f2 = map_index(i2);
        if (f2 < 0) continue;
        for (std::size_t j = 0; j < nc / 2; ++j) {
          out[(static_cast<std::size_t>(f1) * nf + static_cast<std::size_t>(f2)) * hf + j] =
              c[(i1 * nc + i2) * hc + j];
        }
      }
    }
  }
  return ScalarField::from_spectrum(fine, std::move(out));
}

VectorField3 prolong(const VectorField3& v, const GridPtr& fine) {
  return {prolong(v[0], fine), prolong(v[1], fine), prolong(v[2], fine)};
}

}  // namespace lowmach::fields
