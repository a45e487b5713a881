#pragma once

#include "lowmach/systems/gas_law.hpp"
#include "lowmach/systems/params.hpp"
#include "lowmach/systems/state.hpp"

namespace lowmach::systems {

struct SourceTerms {
  VectorField3 F;  ///< 2 mu div D(u) + lambda grad tr D(u)
  ScalarField L;   ///< 2 mu |D(u)|^2 + lambda (tr D(u))^2, dealiased
  ScalarField G;   ///< nu |curl H|^2, dealiased
};

SourceTerms source_terms(const VectorField3& u, const VectorField3& H, const PhysicalParams& p);

/// Time derivative of the full system, each equation solved for its time
/// derivative. Equals full_linear + full_nonlinear.
/// Throws StateSpaceExit when 1 + eps q or 1 + eps phi is not positive.
FullState rhs_full(const FullState& U, const PhysicalParams& p);

/// Constant-coefficient stiff part: the leading 1/eps acoustic coupling and
/// the Fourier-diagonal diffusion mu lap u, nu lap H, kappa lap phi.
FullState full_linear(const FullState& U, const PhysicalParams& p);

/// Everything in rhs_full that is not in full_linear.
FullState full_nonlinear(const FullState& U, const PhysicalParams& p);

/// Solves (I - a * full_linear) Y = R mode by mode; R is overwritten with Y.
/// `stiff_scale` multiplies the 1/eps coupling (1 in normal use).
void solve_linear_full(FullState& R, double a, const PhysicalParams& p, double stiff_scale = 1.0);

/// Throws StateSpaceExit unless 1 + eps q > 0 and 1 + eps phi > 0 everywhere
/// and every value is finite.
void check_positivity(const FullState& U, double eps);

/// Time derivative of the ideal system with coefficients from `law`.
IdealState rhs_ideal(const IdealState& V, const GasLaw& law, double eps);

}  // namespace lowmach::systems
