#pragma once

#include <variant>

#include "lowmach/fields/field.hpp"

namespace lowmach::fields {

using AnyField = std::variant<ScalarField, VectorField3>;

enum class DiffKind { Grad, Div, Curl, Laplacian, Partial };

/// Exact differentiation of the band-limited interpolant. No dealiasing.
/// `axis` is only read for DiffKind::Partial. Throws UsageError when the
/// kind does not accept the input's arity.
AnyField diff_op(DiffKind kind, const AnyField& f, int axis = 0);

ScalarField partial(const ScalarField& f, int axis);
VectorField3 grad(const ScalarField& f);
ScalarField div(const VectorField3& v);
VectorField3 curl(const VectorField3& v);
ScalarField laplacian(const ScalarField& f);
VectorField3 laplacian(const VectorField3& v);

enum class Contraction {
  Pointwise,  ///< scalar*scalar, scalar*vector
  Dot,        ///< vector.vector -> scalar
  Cross,      ///< vector x vector -> vector
  Advective,  ///< (a.grad) b with a a vector, b scalar or vector
};

/// Product formed in physical space and then truncated by the 2/3 mask.
AnyField dealias_product(const AnyField& a, const AnyField& b, Contraction contraction);

ScalarField dealias(const ScalarField& f);
ScalarField product(const ScalarField& a, const ScalarField& b);
VectorField3 product(const ScalarField& a, const VectorField3& b);
ScalarField dot(const VectorField3& a, const VectorField3& b);
VectorField3 cross(const VectorField3& a, const VectorField3& b);
ScalarField advect(const VectorField3& w, const ScalarField& f);
VectorField3 advect(const VectorField3& w, const VectorField3& f);

/// (sum_k (1+|k|^2)^s |c_k|^2 (2 pi)^3)^(1/2); vector components add in quadrature.
double sobolev_norm(const ScalarField& f, double s);
double sobolev_norm(const VectorField3& v, double s);
double sobolev_norm(const AnyField& f, double s);

/// L2 inner product over the 3-torus computed from the spectra.
double inner_product(const ScalarField& a, const ScalarField& b);
double inner_product(const VectorField3& a, const VectorField3& b);

/// v - grad(lap^-1 div v); the k = 0 mode passes through.
VectorField3 leray_project(const VectorField3& v);

/// Mean-zero solution of lap f = rhs. Throws IncompatibleRhsError when
/// |mean(rhs)| exceeds `tolerance`.
ScalarField poisson_solve_mean_zero(const ScalarField& rhs, double tolerance = 1e-10);

/// Zero-pad the spectrum of `f` onto a finer grid of the same mode.
ScalarField prolong(const ScalarField& f, const GridPtr& fine);
VectorField3 prolong(const VectorField3& v, const GridPtr& fine);

}  // namespace lowmach::fields
