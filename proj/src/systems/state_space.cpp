#include "lowmach/systems/state_space.hpp"

#include <cmath>

namespace lowmach::systems {

namespace {

double max_or_nan(const ScalarField& f) {
  double m = 0.0;
  for (double v : f.values()) {
    if (!std::isfinite(v)) return NAN;
    m = std::max(m, std::abs(v));
  }
  return m;
}

double magnitude_or_nan(const VectorField3& v) {
  const double m = v.max_magnitude();
  return std::isfinite(m) ? m : NAN;
}

template <typename S>
BoxReport check(const S& X, const StateSpaceBox& box, const char* sname) {
  BoxReport r;
  r.q = max_or_nan(X.q);
  r.s = max_or_nan(X.last());
  r.u = magnitude_or_nan(X.u);
  r.H = magnitude_or_nan(X.H);
  auto test = [&](const char* name, double value, double bound) {
    if (!(value < bound)) {
      r.pass = false;
      r.failures.emplace_back(name);
    }
  };
  test("q", r.q, box.q_max);
  test(sname, r.s, box.s_max);
  test("u", r.u, box.u_max);
  test("H", r.H, box.H_max);
  return r;
}

}  // namespace

BoxReport in_state_space(const FullState& U, const StateSpaceBox& box) { return check(U, box, "phi"); }
BoxReport in_state_space(const IdealState& V, const StateSpaceBox& box) { return check(V, box, "theta"); }

}  // namespace lowmach::systems
