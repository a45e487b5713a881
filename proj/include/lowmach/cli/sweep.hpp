#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lowmach/asymptotics/rates.hpp"
#include "lowmach/cli/config.hpp"

namespace lowmach::cli {

/// Outcome of one compressible run of the sweep.
struct EpsRun {
  double eps = 0.0;
  incompressible::RunStatus status = incompressible::RunStatus::Completed;
  double achieved_T = 0.0;
  std::string message;
  long steps = 0;
  double dt = 0.0;
  asymptotics::ErrorSeries errors;
  std::vector<double> residual_over_eps;  ///< per s: max_t ||R||_s / eps
  std::vector<double> residual_row_u;     ///< per s: max_t ||row u||_s
  std::vector<std::vector<double>> residual_norms;  ///< [s][t]
  std::vector<double> residual_mismatch;  ///< per snapshot
  std::vector<compressible::Diagnostics> diagnostics;
};

struct SweepResult {
  incompressible::LimitTrajectory limit;
  std::vector<EpsRun> runs;  ///< in eps_list order
  bool all_completed() const;
};

using Logger = std::function<void(const std::string&)>;

/// Solves the limit system once, then every eps concurrently on up to
/// `workers` threads.
SweepResult run_sweep(const RunConfig& cfg, int workers, const Logger& log = {});

/// Errors sup_t ||E||_s against eps over the completed runs.
std::vector<std::pair<double, double>> error_points(const SweepResult& r, std::size_t s_index);

/// "err=3eps", "err=3*eps", "err=0.5eps^2": exact K eps^p data.
struct SyntheticSpec {
  double K = 1.0;
  double p = 1.0;
};
SyntheticSpec parse_synthetic(const std::string& spec);

}  // namespace lowmach::cli
