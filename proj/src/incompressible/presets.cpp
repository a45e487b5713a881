#include "lowmach/incompressible/presets.hpp"

#include <cmath>

#include "lowmach/errors.hpp"

namespace lowmach::incompressible {

using fields::ScalarField;
using fields::VectorField3;

VelMag orszag_tang_like(const fields::GridPtr& g, double beta) {
  auto f = [&](auto fn) { return ScalarField::from_function(g, fn); };
  VectorField3 vel(f([](double, double y, double) { return -std::sin(y); }),
                   f([](double x, double, double) { return std::sin(x); }), ScalarField(g));
  VectorField3 mag(f([beta](double, double y, double) { return -beta * std::sin(y); }),
                   f([beta](double x, double, double) { return beta * std::sin(2 * x); }), ScalarField(g));
  return {std::move(vel), std::move(mag)};
}

VelMag taylor_green(const fields::GridPtr& g) {
  auto f = [&](auto fn) { return ScalarField::from_function(g, fn); };
  VectorField3 vel(f([](double x, double y, double) { return -std::cos(x) * std::sin(y); }),
                   f([](double x, double y, double) { return std::sin(x) * std::cos(y); }), ScalarField(g));
  return {std::move(vel), VectorField3(g)};
}

VelMag preset(const std::string& name, const fields::GridPtr& grid) {
  if (name == "orszag-tang-like") return orszag_tang_like(grid);
  if (name == "taylor-green") return taylor_green(grid);
  throw UsageError("unknown preset '" + name + "' (expected orszag-tang-like or taylor-green)");
}

}  // namespace lowmach::incompressible
