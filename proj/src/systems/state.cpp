#include "lowmach/systems/state.hpp"

#include <cmath>
#include <limits>

#include "lowmach/fields/operators.hpp"

namespace lowmach::systems {

template <StateLike S>
double sobolev_norm(const S& x, double s) {
  const double a = fields::sobolev_norm(x.q, s);
  const double b = fields::sobolev_norm(x.u, s);
  const double c = fields::sobolev_norm(x.H, s);
  const double d = fields::sobolev_norm(x.last(), s);
  return std::sqrt(a * a + b * b + c * c + d * d);
}

namespace {
double scan(const ScalarField& f, double m) {
  for (double v : f.values()) {
    if (!std::isfinite(v)) return std::numeric_limits<double>::quiet_NaN();
    m = std::max(m, std::abs(v));
  }
  return m;
}
}  // namespace

template <StateLike S>
double max_abs(const S& x) {
  double m = 0.0;
  for (const ScalarField* f : {&x.q, &x.u[0], &x.u[1], &x.u[2], &x.H[0], &x.H[1], &x.H[2], &x.last()}) {
    m = scan(*f, m);
    if (std::isnan(m)) return m;
  }
  return m;
}

template double sobolev_norm<FullState>(const FullState&, double);
template double sobolev_norm<IdealState>(const IdealState&, double);
template double max_abs<FullState>(const FullState&);
template double max_abs<IdealState>(const IdealState&);

}  // namespace lowmach::systems
