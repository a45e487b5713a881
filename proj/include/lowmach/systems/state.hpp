#pragma once

#include "lowmach/fields/field.hpp"

namespace lowmach::systems {

using fields::GridPtr;
using fields::ScalarField;
using fields::VectorField3;

/// Unknowns (q, u, H, phi) of the scaled full system: density 1 + eps q,
/// temperature 1 + eps phi.
struct FullState {
  ScalarField q;
  VectorField3 u;
  VectorField3 H;
  ScalarField phi;

  explicit FullState(const GridPtr& g) : q(g), u(g), H(g), phi(g) {}
  FullState(ScalarField q_, VectorField3 u_, VectorField3 H_, ScalarField phi_)
      : q(std::move(q_)), u(std::move(u_)), H(std::move(H_)), phi(std::move(phi_)) {}

  const GridPtr& grid_ptr() const { return q.grid_ptr(); }
  ScalarField& last() { return phi; }
  const ScalarField& last() const { return phi; }
};

/// Unknowns (q, u, H, Theta) of the ideal system: pressure p_base exp(eps q),
/// entropy S_base + eps Theta.
struct IdealState {
  ScalarField q;
  VectorField3 u;
  VectorField3 H;
  ScalarField theta;

  explicit IdealState(const GridPtr& g) : q(g), u(g), H(g), theta(g) {}
  IdealState(ScalarField q_, VectorField3 u_, VectorField3 H_, ScalarField theta_)
      : q(std::move(q_)), u(std::move(u_)), H(std::move(H_)), theta(std::move(theta_)) {}

  const GridPtr& grid_ptr() const { return q.grid_ptr(); }
  ScalarField& last() { return theta; }
  const ScalarField& last() const { return theta; }
};

template <typename S>
concept StateLike = std::same_as<S, FullState> || std::same_as<S, IdealState>;

template <StateLike S>
S& axpy(S& y, double a, const S& x) {
  y.q.axpy(a, x.q);
  y.u.axpy(a, x.u);
  y.H.axpy(a, x.H);
  y.last().axpy(a, x.last());
  return y;
}

template <StateLike S>
S scaled(S x, double a) {
  x.q *= a;
  x.u *= a;
  x.H *= a;
  x.last() *= a;
  return x;
}

template <StateLike S>
S difference(S a, const S& b) {
  return axpy(a, -1.0, b);
}

template <StateLike S>
S& apply_mask(S& x) {
  x.q.apply_mask();
  x.u.apply_mask();
  x.H.apply_mask();
  x.last().apply_mask();
  return x;
}

/// Quadrature sum of the component norms.
template <StateLike S>
double sobolev_norm(const S& x, double s);

/// Largest absolute grid value over all components; NaN if any is non-finite.
template <StateLike S>
double max_abs(const S& x);

extern template double sobolev_norm<FullState>(const FullState&, double);
extern template double sobolev_norm<IdealState>(const IdealState&, double);
extern template double max_abs<FullState>(const FullState&);
extern template double max_abs<IdealState>(const IdealState&);

}  // namespace lowmach::systems
