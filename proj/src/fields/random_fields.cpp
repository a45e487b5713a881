#include "lowmach/fields/random_fields.hpp"

#include <algorithm>
#include <cmath>

namespace lowmach::fields {

namespace {

std::size_t wrap(int k, std::size_t n) {
  return k >= 0 ? static_cast<std::size_t>(k) : n - static_cast<std::size_t>(-k);
}

}  // namespace

ScalarField random_band_limited(const GridPtr& grid, Rng& rng, int max_mode, double decay) {
  const int limit = std::min(max_mode, grid->dealias_cutoff());
  const std::size_t n = grid->n();
  const std::size_t half = n / 2 + 1;
  const bool slab = grid->mode() == DimMode::Slab2p5D;
  const auto k0 = grid->wavenumber(0);
  const auto k1 = grid->wavenumber(1);
  const auto k2 = grid->wavenumber(2);
  const auto ksq = grid->k_squared();

  std::vector<Complex> c(grid->spectral_size(), Complex{});
  // Slot of the conjugate partner within the last-axis-zero plane.
  auto partner = [&](std::size_t s) -> std::size_t {
    const int a = -static_cast<int>(k0[s]);
    if (slab) return wrap(a, n) * half;
    const int b = -static_cast<int>(k1[s]);
    return (wrap(a, n) * n + wrap(b, n)) * half;
  };
  auto in_band = [&](std::size_t s) {
    return std::abs(k0[s]) <= limit && std::abs(k1[s]) <= limit && std::abs(k2[s]) <= limit;
  };
  // Last axis is k1 in slab mode and k2 in 3D mode.
  auto last = [&](std::size_t s) { return slab ? k1[s] : k2[s]; };
  auto canonical_in_plane = [&](std::size_t s) {
    if (slab) return k0[s] > 0;
    return k1[s] > 0 || (k1[s] == 0 && k0[s] > 0);
  };

  for (std::size_t s = 0; s < c.size(); ++s) {
    if (!in_band(s)) continue;
    const double amp = std::pow(1.0 + ksq[s], -decay / 2.0);
    if (ksq[s] == 0.0) {
      c[s] = amp * rng.uniform(-1.0, 1.0);
      continue;
    }
    if (last(s) == 0.0 && !canonical_in_plane(s)) continue;
    const double re = rng.uniform(-1.0, 1.0);
    const double im = rng.uniform(-1.0, 1.0);
    c[s] = 0.5 * amp * Complex(re, im);
  }
  for (std::size_t s = 0; s < c.size(); ++s) {
    if (!in_band(s) || ksq[s] == 0.0 || last(s) != 0.0 || !canonical_in_plane(s)) continue;
    c[partner(s)] = std::conj(c[s]);
  }
  return ScalarField::from_spectrum(grid, std::move(c));
}

VectorField3 random_band_limited_vector(const GridPtr& grid, Rng& rng, int max_mode, double decay) {
  ScalarField x = random_band_limited(grid, rng, max_mode, decay);
  ScalarField y = random_band_limited(grid, rng, max_mode, decay);
  ScalarField z = random_band_limited(grid, rng, max_mode, decay);
  return {std::move(x), std::move(y), std::move(z)};
}

}  // namespace lowmach::fields
