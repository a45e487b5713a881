#pragma once

#include "lowmach/fields/field.hpp"

namespace lowmach::fields {

/// L2 residuals of the vector-calculus identities used to rewrite the MHD
/// system in advective form.
struct IdentityReport {
  double div_h_cross_curl_h = 0.0;   ///< div(H x curl H) = |curl H|^2 - curl curl H . H
  double div_uxh_cross_h = 0.0;      ///< div((u x H) x H) = (curl H x H).u + curl(u x H).H
  double grad_h_squared = 0.0;       ///< grad|H|^2 = 2 H.grad H + 2 H x curl H
  double curl_u_cross_h = 0.0;       ///< curl(u x H) = u div H - H div u + H.grad u - u.grad H
  double curl_curl = 0.0;            ///< curl curl H = grad div H - lap H

  double max() const;
};

/// Evaluates every identity on a grid refined by two in each direction, so
/// that products up to cubic order of 2/3-band-limited inputs are exact.
IdentityReport check_identities(const VectorField3& u, const VectorField3& h);

}  // namespace lowmach::fields
