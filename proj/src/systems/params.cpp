#include "lowmach/systems/params.hpp"

#include <cmath>
#include <string>

#include "lowmach/errors.hpp"

namespace lowmach::systems {

namespace {
void common(const PhysicalParams& p) {
  if (!(p.gamma > 1.0)) throw UsageError("gamma must exceed 1 (got " + std::to_string(p.gamma) + ")");
  if (!(p.eps > 0.0) || !std::isfinite(p.eps)) throw UsageError("eps must be positive");
}
}  // namespace

void PhysicalParams::validate_full() const {
  common(*this);
  if (mu < 0.0 || nu < 0.0 || kappa < 0.0) throw UsageError("mu, nu, kappa must be nonnegative");
  if (any_dissipation()) {
    if (!(mu > 0.0)) throw UsageError("mu must be positive when dissipation is active");
    if (!(2.0 * mu + 3.0 * lambda > 0.0)) throw UsageError("2 mu + 3 lambda must be positive");
  }
}

void PhysicalParams::validate_ideal() const {
  common(*this);
  if (any_dissipation()) throw UsageError("ideal mode requires mu = lambda = nu = kappa = 0");
}

}  // namespace lowmach::systems
