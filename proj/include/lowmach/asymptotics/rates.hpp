#pragma once

#include <utility>
#include <vector>

#include "lowmach/asymptotics/approximation.hpp"
#include "lowmach/compressible/solver.hpp"

namespace lowmach::asymptotics {

struct ErrorSeries {
  std::vector<double> times;
  std::vector<double> s_list;
  /// errors[i][t]: H^{s_list[i]} norm of E = U - U_approx at snapshot t
  std::vector<std::vector<double>> errors;
  /// canonical energy norm (square root of the weighted integral) per snapshot
  std::vector<double> canonical;
  std::vector<double> sup;  ///< sup over time per Sobolev index
  double sup_canonical = 0.0;
};

/// Compares the snapshots the two sequences share (the compressible one may be
/// truncated). Throws UsageError on time or grid mismatch.
ErrorSeries error_series(const compressible::Trajectory<FullState>& full, const ApproxTrajectory<FullState>& approx,
                         const std::vector<double>& s_list, const systems::PhysicalParams& p);
ErrorSeries error_series(const compressible::Trajectory<IdealState>& full,
                         const ApproxTrajectory<IdealState>& approx, const std::vector<double>& s_list,
                         const systems::GasLaw& law, double eps);

/// Least-squares fit of log err = p log eps + log K.
struct RateFit {
  std::vector<double> eps;   ///< sorted decreasing
  std::vector<double> error;
  double slope = 0.0;
  double K = 0.0;
  double max_residual = 0.0;  ///< max |log err - fit| over the points
};

/// Throws UsageError with fewer than 3 points, repeated eps, or any
/// nonpositive eps or error.
RateFit fit_rate(std::vector<std::pair<double, double>> points);

}  // namespace lowmach::asymptotics
