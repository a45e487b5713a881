#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lowmach/fields/grid.hpp"

namespace lowmach::cli {

struct CheckResult {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

/// Max identity residual over `draws` pairs of random dealiased fields.
CheckResult identity_battery(fields::DimMode mode, std::size_t n, int draws, std::uint64_t seed);

/// Random in-box point states with eps drawn from [0.01, 0.45]: symmetry of
/// Atilde0 A0^-1 A_j and positivity of the Atilde0 diagonal. `poison` adds a
/// stray off-diagonal entry to Atilde0 (negative control).
std::vector<CheckResult> symmetrizer_battery(int count, std::uint64_t seed, bool poison = false);

/// Displayed residual vs direct substitution on a short limit trajectory,
/// for the full and the ideal system at each eps.
std::vector<CheckResult> residual_agreement(fields::DimMode mode, std::size_t n, const std::vector<double>& eps_list,
                                            std::uint64_t seed);

}  // namespace lowmach::cli
