#pragma once

#include <array>
#include <iosfwd>

#include <Eigen/Dense>

#include "lowmach/systems/gas_law.hpp"
#include "lowmach/systems/params.hpp"
#include "lowmach/systems/state.hpp"

namespace lowmach::systems {

/// 8x8 matrix at one grid point, index order (q, u1, u2, u3, H1, H2, H3, phi).
using Matrix8 = Eigen::Matrix<double, 8, 8>;
using Vector8 = Eigen::Matrix<double, 8, 1>;

/// Pointwise values of a full (or ideal) state.
struct PointState {
  double q = 0.0;
  std::array<double, 3> u{};
  std::array<double, 3> H{};
  double phi = 0.0;  ///< phi for the full system, Theta for the ideal one

  Vector8 as_vector() const;
  static PointState from_vector(const Vector8& v);
};

PointState point_of(const FullState& U, std::size_t index);
PointState point_of(const IdealState& V, std::size_t index);

/// A0 and A1..A3 of the quasilinear form A0 U_t + sum_j A_j d_j U = Q(U).
/// Throws UsageError when eps == 0.
struct SystemMatrices {
  Matrix8 A0;
  std::array<Matrix8, 3> A;
};
SystemMatrices assemble_matrices(const PointState& U, const PhysicalParams& p);

/// Q(U) = (0, F, nu lap H, kappa lap phi + eps (L + G)) as fields.
FullState source_vector(const FullState& U, const PhysicalParams& p);

struct Symmetrizers {
  Matrix8 Ahat0;    ///< diag((1+eps phi)/(1+eps q), 1, ..., 1, 1/((gamma-1)(1+eps phi)))
  Matrix8 Atilde0;  ///< diag((1+eps phi)/(1+eps q)^2, 1, 1, 1, 1/J, 1/J, 1/J, 1/((gamma-1)(1+eps phi)))
};
/// Throws StateSpaceExit when 1 + eps q or 1 + eps phi is not positive.
Symmetrizers symmetrizers(const PointState& U, const PhysicalParams& p);

/// Max entry of |M - M^T|.
double asymmetry(const Matrix8& M);

/// Integral of <Atilde0(U) E, E> over the torus by grid quadrature.
double canonical_energy(const FullState& E, const FullState& U, const PhysicalParams& p);

/// Ideal-system analogue weighted by A0 = diag(a, r, r, r, 1, 1, 1, 1) of U.
double canonical_energy(const IdealState& E, const IdealState& U, const GasLaw& law, double eps);

/// Row-major CSV, 8 columns, one line per row.
void write_matrix_csv(std::ostream& out, const Matrix8& M);

}  // namespace lowmach::systems
