#pragma once

#include <cstdint>
#include <vector>

#include "lowmach/incompressible/limit.hpp"
#include "lowmach/systems/gas_law.hpp"
#include "lowmach/systems/params.hpp"
#include "lowmach/systems/state.hpp"

namespace lowmach::asymptotics {

using incompressible::LimitState;
using incompressible::LimitTrajectory;
using systems::FullState;
using systems::IdealState;

template <typename S>
struct ApproxTrajectory {
  std::vector<double> times;
  std::vector<S> states;
};

/// (eps pi/2, w, B, eps pi/2) from one viscous limit snapshot.
FullState approx_full(const LimitState& s, double eps);
/// (eps Pi, v, J, eps Pi) from one ideal limit snapshot.
IdealState approx_ideal(const LimitState& s, double eps);

/// Throws UsageError if the trajectory is empty or of the wrong mode.
ApproxTrajectory<FullState> build_approx_full(const LimitTrajectory& limit, double eps);
ApproxTrajectory<IdealState> build_approx_ideal(const LimitTrajectory& limit, double eps);

/// Approximation at t = 0 plus, when amplitude > 0, a seeded perturbation
/// on modes |k_i| <= 4: random scalars on q and phi, projected random
/// vectors on u and H, rescaled so that its total H^s norm is amplitude * eps.
FullState well_prepared_init_full(const LimitState& limit0, double eps, double amplitude, std::uint64_t seed,
                                  double s = 2.0);
/// Same for the ideal system, perturbing (q, u, H, Theta).
IdealState well_prepared_init_ideal(const LimitState& limit0, double eps, double amplitude, std::uint64_t seed,
                                    double s = 2.0);

}  // namespace lowmach::asymptotics
