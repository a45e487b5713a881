#pragma once

#include <string>
#include <vector>

#include "lowmach/systems/state.hpp"

namespace lowmach::systems {

/// Pointwise bounds defining a compact subset of the state space.
/// `s_max` bounds phi (full system) or Theta (ideal system).
struct StateSpaceBox {
  double q_max = 2.0;
  double s_max = 2.0;
  double u_max = 10.0;
  double H_max = 10.0;

  /// Largest bound on the scalar unknowns.
  double scalar_bound() const { return std::max(q_max, s_max); }
};

struct BoxReport {
  bool pass = true;
  double q = 0.0;  ///< max |q|
  double s = 0.0;  ///< max |phi| or |Theta|
  double u = 0.0;  ///< max |u|
  double H = 0.0;  ///< max |H|
  std::vector<std::string> failures;
};

/// Strict containment: a value equal to its bound fails. Non-finite values fail.
BoxReport in_state_space(const FullState& U, const StateSpaceBox& box);
BoxReport in_state_space(const IdealState& V, const StateSpaceBox& box);

}  // namespace lowmach::systems
