#include "lowmach/asymptotics/approximation.hpp"

#include <cmath>

#include "lowmach/errors.hpp"
#include "lowmach/fields/operators.hpp"
#include "lowmach/fields/random_fields.hpp"

namespace lowmach::asymptotics {

using fields::ScalarField;
using fields::VectorField3;

namespace {

bool is_ideal(const LimitState& s) { return std::holds_alternative<incompressible::Ideal>(s.mode); }

void require(const LimitTrajectory& limit, bool ideal) {
  if (limit.states.empty()) throw UsageError("limit trajectory has no snapshots");
  if (is_ideal(limit.states.front()) != ideal) {
    throw UsageError(ideal ? "ideal approximation needs an ideal-mode limit trajectory"
                           : "full approximation needs a viscous-mode limit trajectory");
  }
}

struct Perturbation {
  ScalarField q;
  VectorField3 u;
  VectorField3 H;
  ScalarField last;
};

Perturbation perturbation(const fields::GridPtr& g, double size, std::uint64_t seed, double s) {
  constexpr int kModes = 4;
  fields::Rng rng(seed);
  Perturbation d{fields::random_band_limited(g, rng, kModes),
                 fields::leray_project(fields::random_band_limited_vector(g, rng, kModes)),
                 fields::leray_project(fields::random_band_limited_vector(g, rng, kModes)),
                 fields::random_band_limited(g, rng, kModes)};
  const double a = fields::sobolev_norm(d.q, s), b = fields::sobolev_norm(d.u, s);
  const double c = fields::sobolev_norm(d.H, s), e = fields::sobolev_norm(d.last, s);
  const double total = std::sqrt(a * a + b * b + c * c + e * e);
  const double f = size / total;
  d.q *= f;
  d.u *= f;
  d.H *= f;
  d.last *= f;
  return d;
}

template <typename S>
void add(S& X, const Perturbation& d) {
  X.q += d.q;
  X.u += d.u;
  X.H += d.H;
  X.last() += d.last;
}

}  // namespace

FullState approx_full(const LimitState& s, double eps) {
  ScalarField q = (0.5 * eps) * s.pressure;
  return FullState(q, s.vel, s.mag, q);
}

IdealState approx_ideal(const LimitState& s, double eps) {
  ScalarField q = eps * s.pressure;
  return IdealState(q, s.vel, s.mag, q);
}

ApproxTrajectory<FullState> build_approx_full(const LimitTrajectory& limit, double eps) {
  require(limit, false);
  ApproxTrajectory<FullState> out;
  out.times = limit.times;
  for (const auto& s : limit.states) out.states.push_back(approx_full(s, eps));
  return out;
}

ApproxTrajectory<IdealState> build_approx_ideal(const LimitTrajectory& limit, double eps) {
  require(limit, true);
  ApproxTrajectory<IdealState> out;
  out.times = limit.times;
  for (const auto& s : limit.states) out.states.push_back(approx_ideal(s, eps));
  return out;
}

FullState well_prepared_init_full(const LimitState& limit0, double eps, double amplitude, std::uint64_t seed,
                                  double s) {
  if (amplitude < 0.0) throw UsageError("perturbation amplitude must be nonnegative");
  FullState U = approx_full(limit0, eps);
  if (amplitude > 0.0) add(U, perturbation(U.grid_ptr(), amplitude * eps, seed, s));
  return U;
}

IdealState well_prepared_init_ideal(const LimitState& limit0, double eps, double amplitude, std::uint64_t seed,
                                    double s) {
  if (amplitude < 0.0) throw UsageError("perturbation amplitude must be nonnegative");
  IdealState V = approx_ideal(limit0, eps);
  if (amplitude > 0.0) add(V, perturbation(V.grid_ptr(), amplitude * eps, seed, s));
  return V;
}

}  // namespace lowmach::asymptotics
