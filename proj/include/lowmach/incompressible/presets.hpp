#pragma once

#include <string>
#include <utility>

#include "lowmach/fields/field.hpp"

namespace lowmach::incompressible {

struct VelMag {
  fields::VectorField3 vel;
  fields::VectorField3 mag;
};

/// vel = (-sin x2, sin x1, 0), mag = beta (-sin x2, sin 2x1, 0).
VelMag orszag_tang_like(const fields::GridPtr& grid, double beta = 0.5);

/// vel = (-cos x1 sin x2, sin x1 cos x2, 0), mag = 0.
VelMag taylor_green(const fields::GridPtr& grid);

/// Looks up "orszag-tang-like" or "taylor-green"; throws UsageError otherwise.
VelMag preset(const std::string& name, const fields::GridPtr& grid);

}  // namespace lowmach::incompressible
