#include "lowmach/cli/checks.hpp"

#include <algorithm>
#include <cmath>

#include "lowmach/asymptotics/residuals.hpp"
#include "lowmach/fields/identities.hpp"
#include "lowmach/fields/operators.hpp"
#include "lowmach/fields/random_fields.hpp"
#include "lowmach/io/csv.hpp"
#include "lowmach/systems/matrices.hpp"
#include "lowmach/systems/state_space.hpp"

namespace lowmach::cli {

CheckResult identity_battery(fields::DimMode mode, std::size_t n, int draws, std::uint64_t seed) {
  auto g = fields::Grid::create(mode, n);
  fields::Rng rng(seed);
  const int kmax = static_cast<int>(n) / 3;
  double worst = 0.0;
  for (int i = 0; i < draws; ++i) {
    auto u = fields::random_band_limited_vector(g, rng, kmax);
    auto h = fields::random_band_limited_vector(g, rng, kmax);
    worst = std::max(worst, fields::check_identities(u, h).max());
  }
  return {"vector identities", worst <= 1e-10, worst, 1e-10, std::to_string(draws) + " draws"};
}

std::vector<CheckResult> symmetrizer_battery(int count, std::uint64_t seed, bool poison) {
  fields::Rng rng(seed);
  const systems::StateSpaceBox box;
  const double b = box.scalar_bound();
  systems::PhysicalParams p;
  double worst = 0.0, min_diag = INFINITY;
  for (int i = 0; i < count; ++i) {
    p.eps = rng.uniform(0.01, 0.45);
    systems::PointState s{rng.uniform(-b, b), {}, {}, rng.uniform(-b, b)};
    for (auto& v : s.u) v = rng.uniform(-box.u_max, box.u_max) / std::sqrt(3.0);
    for (auto& v : s.H) v = rng.uniform(-box.H_max, box.H_max) / std::sqrt(3.0);
    const auto M = systems::assemble_matrices(s, p);
    auto Y = systems::symmetrizers(s, p);
    if (poison) Y.Atilde0(0, 1) += 0.5;
    const systems::Matrix8 inv = M.A0.inverse();
    for (const auto& Aj : M.A) worst = std::max(worst, systems::asymmetry(Y.Atilde0 * (inv * Aj)));
    min_diag = std::min(min_diag, Y.Atilde0.diagonal().minCoeff());
  }
  const std::string detail = std::to_string(count) + " states";
  return {{"symmetrizer symmetry", worst <= 1e-12, worst, 1e-12, detail},
          {"symmetrizer positivity", min_diag > 0.0, min_diag, 0.0, detail}};
}

std::vector<CheckResult> residual_agreement(fields::DimMode mode, std::size_t n, const std::vector<double>& eps_list,
                                            std::uint64_t seed) {
  auto g = fields::Grid::create(mode, n);
  fields::Rng rng(seed);
  const int kmax = std::max(1, static_cast<int>(n) / 6);
  auto vel = fields::random_band_limited_vector(g, rng, kmax);
  auto mag = fields::random_band_limited_vector(g, rng, kmax);
  const double scale = 1.0 / std::max(vel.max_magnitude(), mag.max_magnitude());
  vel *= scale;
  mag *= 0.5 * scale;
  const std::vector<double> times{0.0, 0.02, 0.04};
  const double dt = 0.2 * fields::Grid::create(mode, n)->spacing() / 2.0;

  systems::PhysicalParams p;
  p.mu = p.nu = p.kappa = 0.05;
  const auto law = systems::GasLaw::perfect(p.gamma);
  const auto viscous = incompressible::solve_limit(
      incompressible::LimitState::make(vel, mag, incompressible::Viscous{p.mu, p.nu}), times.back(), dt, times);
  const auto ideal = incompressible::solve_limit(
      incompressible::LimitState::make(vel, mag, incompressible::Ideal{systems::base_density_factor(law)}),
      times.back(), dt, times);
  double full_worst = 0.0, ideal_worst = 0.0;
  for (double eps : eps_list) {
    p.eps = eps;
    full_worst = std::max(full_worst, asymptotics::residual_full(viscous, eps, p, {0.0}).max_mismatch());
    ideal_worst = std::max(ideal_worst, asymptotics::residual_ideal(ideal, eps, law, {0.0}).max_mismatch());
  }
  const std::string detail = std::to_string(eps_list.size()) + " eps values";
  return {{"residual agreement (full)", full_worst <= 1e-8, full_worst, 1e-8, detail},
          {"residual agreement (ideal)", ideal_worst <= 1e-8, ideal_worst, 1e-8, detail}};
}

}  // namespace lowmach::cli
