#include "lowmach/fields/identities.hpp"

#include <algorithm>

#include "lowmach/errors.hpp"
#include "lowmach/fields/operators.hpp"

namespace lowmach::fields {

namespace {

// Undealiased helpers; exact on the refined grid.
ScalarField mul(const ScalarField& a, const ScalarField& b) { return pointwise_product(a, b); }

ScalarField dot_exact(const VectorField3& a, const VectorField3& b) {
  return mul(a[0], b[0]) + mul(a[1], b[1]) + mul(a[2], b[2]);
}

VectorField3 cross_exact(const VectorField3& a, const VectorField3& b) {
  return {mul(a[1], b[2]) - mul(a[2], b[1]), mul(a[2], b[0]) - mul(a[0], b[2]),
          mul(a[0], b[1]) - mul(a[1], b[0])};
}

VectorField3 scale_exact(const ScalarField& s, const VectorField3& v) {
  return {mul(s, v[0]), mul(s, v[1]), mul(s, v[2])};
}

VectorField3 advect_exact(const VectorField3& w, const VectorField3& f) {
  VectorField3 out(f.grid_ptr());
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out[i] += mul(w[j], partial(f[i], j));
  }
  return out;
}

}  // namespace

double IdentityReport::max() const {
  return std::max({div_h_cross_curl_h, div_uxh_cross_h, grad_h_squared, curl_u_cross_h, curl_curl});
}

IdentityReport check_identities(const VectorField3& u_in, const VectorField3& h_in) {
  if (!u_in.grid().same_as(h_in.grid())) throw UsageError("check_identities: grid mismatch");
  const auto fine = Grid::create(u_in.grid().mode(), 2 * u_in.grid().n());
  const VectorField3 u = prolong(u_in, fine);
  const VectorField3 h = prolong(h_in, fine);

  IdentityReport r;
  const VectorField3 curl_h = curl(h);
  const VectorField3 curl_curl_h = curl(curl_h);

  {
    const ScalarField lhs = div(cross_exact(h, curl_h));
    const ScalarField rhs = dot_exact(curl_h, curl_h) - dot_exact(curl_curl_h, h);
    r.div_h_cross_curl_h = sobolev_norm(lhs - rhs, 0.0);
  }
  const VectorField3 u_cross_h = cross_exact(u, h);
  const VectorField3 curl_u_cross_h = curl(u_cross_h);
  {
    const ScalarField lhs = div(cross_exact(u_cross_h, h));
    const ScalarField rhs = dot_exact(cross_exact(curl_h, h), u) + dot_exact(curl_u_cross_h, h);
    r.div_uxh_cross_h = sobolev_norm(lhs - rhs, 0.0);
  }
  {
    const VectorField3 lhs = grad(dot_exact(h, h));
    const VectorField3 rhs = 2.0 * advect_exact(h, h) + 2.0 * cross_exact(h, curl_h);
    r.grad_h_squared = sobolev_norm(lhs - rhs, 0.0);
  }
  {
    const VectorField3 rhs = scale_exact(div(h), u) - scale_exact(div(u), h) + advect_exact(h, u) -
                             advect_exact(u, h);
    r.curl_u_cross_h = sobolev_norm(curl_u_cross_h - rhs, 0.0);
  }
  {
    const VectorField3 rhs = grad(div(h)) - laplacian(h);
    r.curl_curl = sobolev_norm(curl_curl_h - rhs, 0.0);
  }
  return r;
}

}  // namespace lowmach::fields
