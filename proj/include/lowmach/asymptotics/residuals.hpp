#pragma once

#include <vector>

#include "lowmach/asymptotics/approximation.hpp"

namespace lowmach::asymptotics {

/// Residual rows of the approximation system per snapshot, stored in the
/// slots of the matching state type (row q, row u, row H, last row).
template <typename S>
struct ResidualSeries {
  std::vector<double> times;
  std::vector<double> s_list;
  std::vector<S> displayed;  ///< rows as given by the closed-form source R
  std::vector<S> direct;     ///< approximation substituted into the left-hand sides
  std::vector<double> mismatch;  ///< L2 norm of displayed - direct per snapshot
  /// norms[i][t]: H^{s_list[i]} norm of the displayed residual at snapshot t
  std::vector<std::vector<double>> norms;
  /// row_u_norms[i][t]: H^{s_list[i]} norm of the displayed velocity row
  std::vector<std::vector<double>> row_u_norms;

  double max_norm(std::size_t i) const;
  double max_row_u(std::size_t i) const;
  double max_mismatch() const;
};

ResidualSeries<FullState> residual_full(const LimitTrajectory& limit, double eps,
                                        const systems::PhysicalParams& p,
                                        std::vector<double> s_list = {0.0, 2.0, 4.0});

ResidualSeries<IdealState> residual_ideal(const LimitTrajectory& limit, double eps, const systems::GasLaw& law,
                                          std::vector<double> s_list = {0.0, 2.0, 4.0});

}  // namespace lowmach::asymptotics
