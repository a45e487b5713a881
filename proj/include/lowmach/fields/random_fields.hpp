#pragma once

#include <cstdint>
#include <random>

#include "lowmach/fields/field.hpp"

namespace lowmach::fields {

/// Platform-independent uniform draws on [0, 1) from a 64-bit Mersenne twister.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

/// Real field with random Fourier coefficients on modes |k_i| <= max_mode,
/// amplitude decaying as (1 + |k|^2)^(-decay/2). Always inside the 2/3 band.
ScalarField random_band_limited(const GridPtr& grid, Rng& rng, int max_mode, double decay = 2.0);
VectorField3 random_band_limited_vector(const GridPtr& grid, Rng& rng, int max_mode,
                                        double decay = 2.0);

}  // namespace lowmach::fields
