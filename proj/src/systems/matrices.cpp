#include "lowmach/systems/matrices.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

#include "lowmach/errors.hpp"
#include "lowmach/fields/operators.hpp"
#include "lowmach/systems/rhs.hpp"

namespace lowmach::systems {

namespace {
constexpr int kQ = 0;
constexpr int kPhi = 7;
constexpr int U(int j) { return 1 + j; }
constexpr int B(int j) { return 4 + j; }
}  // namespace

Vector8 PointState::as_vector() const {
  Vector8 v;
  v << q, u[0], u[1], u[2], H[0], H[1], H[2], phi;
  return v;
}

PointState PointState::from_vector(const Vector8& v) {
  return {v[0], {v[1], v[2], v[3]}, {v[4], v[5], v[6]}, v[7]};
}

template <typename S>
static PointState point_impl(const S& X, std::size_t i) {
  PointState s;
  s.q = X.q.values()[i];
  for (int j = 0; j < 3; ++j) {
    s.u[static_cast<std::size_t>(j)] = X.u[j].values()[i];
    s.H[static_cast<std::size_t>(j)] = X.H[j].values()[i];
  }
  s.phi = X.last().values()[i];
  return s;
}

PointState point_of(const FullState& U, std::size_t index) { return point_impl(U, index); }
PointState point_of(const IdealState& V, std::size_t index) { return point_impl(V, index); }

SystemMatrices assemble_matrices(const PointState& s, const PhysicalParams& p) {
  if (p.eps == 0.0) throw UsageError("assemble_matrices: eps = 0 makes the matrices singular");
  const double e = p.eps;
  const double J = 1.0 + e * s.q;
  const double Jp = 1.0 + e * s.phi;

  SystemMatrices M;
  M.A0 = Matrix8::Identity();
  for (int j = 0; j < 3; ++j) M.A0(U(j), U(j)) = J;
  M.A0(kPhi, kPhi) = J;

  for (int j = 0; j < 3; ++j) {
    Matrix8& A = M.A[static_cast<std::size_t>(j)];
    A.setZero();
    const double uj = s.u[static_cast<std::size_t>(j)];
    const double Hj = s.H[static_cast<std::size_t>(j)];
    A(kQ, kQ) = uj;
    A(kQ, U(j)) = J / e;
    A(U(j), kQ) = Jp / e;
    A(U(j), kPhi) = J / e;
    for (int m = 0; m < 3; ++m) {
      const double Hm = s.H[static_cast<std::size_t>(m)];
      A(U(m), U(m)) = uj * J;
      A(B(m), B(m)) = uj;
      if (m == j) continue;
      A(U(j), B(m)) = Hm;
      A(U(m), B(m)) = -Hj;
      A(B(m), U(j)) = Hm;
      A(B(m), U(m)) = -Hj;
    }
    A(kPhi, U(j)) = (p.gamma - 1.0) * J * Jp / e;
    A(kPhi, kPhi) = J * uj;
  }
  return M;
}

FullState source_vector(const FullState& U, const PhysicalParams& p) {
  auto src = source_terms(U.u, U.H, p);
  ScalarField last = p.kappa * fields::laplacian(U.phi);
  last.axpy(p.eps, src.L + src.G);
  return FullState(ScalarField(U.grid_ptr()), std::move(src.F), p.nu * fields::laplacian(U.H), std::move(last));
}

Symmetrizers symmetrizers(const PointState& s, const PhysicalParams& p) {
  const double J = 1.0 + p.eps * s.q;
  const double Jp = 1.0 + p.eps * s.phi;
  if (!(J > 0.0)) throw StateSpaceExit("q", s.q);
  if (!(Jp > 0.0)) throw StateSpaceExit("phi", s.phi);
  Symmetrizers out{Matrix8::Identity(), Matrix8::Identity()};
  out.Ahat0(kQ, kQ) = Jp / J;
  out.Ahat0(kPhi, kPhi) = 1.0 / ((p.gamma - 1.0) * Jp);
  out.Atilde0(kQ, kQ) = Jp / (J * J);
  for (int j = 0; j < 3; ++j) out.Atilde0(B(j), B(j)) = 1.0 / J;
  out.Atilde0(kPhi, kPhi) = 1.0 / ((p.gamma - 1.0) * Jp);
  return out;
}

double asymmetry(const Matrix8& M) { return (M - M.transpose()).cwiseAbs().maxCoeff(); }

double canonical_energy(const FullState& E, const FullState& U, const PhysicalParams& p) {
  const auto& g = U.q.grid();
  double sum = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Vector8 e = point_of(E, i).as_vector();
    const Matrix8 A = symmetrizers(point_of(U, i), p).Atilde0;
    sum += e.dot(A.diagonal().cwiseProduct(e));
  }
  return sum * g.cell_volume();
}

double canonical_energy(const IdealState& E, const IdealState& U, const GasLaw& law, double eps) {
  const auto& g = U.q.grid();
  auto th = U.theta.values();
  auto q = U.q.values();
  double sum = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto c = gas_coeffs_at(law, law.S_base + eps * th[i], eps * q[i]);
    const Vector8 e = point_of(E, i).as_vector();
    Vector8 w;
    w << c.a, c.r, c.r, c.r, 1, 1, 1, 1;
    sum += e.dot(w.cwiseProduct(e));
  }
  return sum * g.cell_volume();
}

void write_matrix_csv(std::ostream& out, const Matrix8& M) {
  out << std::setprecision(17);
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) out << (j ? "," : "") << M(i, j);
    out << '\n';
  }
}

}  // namespace lowmach::systems
