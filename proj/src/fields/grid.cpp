#include "lowmach/fields/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>

#include "lowmach/errors.hpp"

namespace lowmach::fields {

namespace {

// The FFTW planner is not reentrant; execution with new arrays is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

double signed_wavenumber(std::size_t index, std::size_t n) {
  return index <= n / 2 ? static_cast<double>(index)
                        : static_cast<double>(index) - static_cast<double>(n);
}

}  // namespace

std::shared_ptr<const Grid> Grid::create(DimMode mode, std::size_t n) {
  if (n < 8 || !is_power_of_two(n)) {
    throw UsageError("grid resolution must be a power of two >= 8, got " + std::to_string(n));
  }
  return std::shared_ptr<const Grid>(new Grid(mode, n));
}

Grid::Grid(DimMode mode, std::size_t n) : mode_(mode), n_(n) {
  const std::size_t half = n / 2 + 1;
  const bool slab = mode == DimMode::Slab2p5D;
  size_ = slab ? n * n : n * n * n;
  spectral_size_ = slab ? n * half : n * n * half;

  for (auto& v : k_) v.assign(spectral_size_, 0.0);
  for (auto& v : kd_) v.assign(spectral_size_, 0.0);
  k2_.assign(spectral_size_, 0.0);
  mask_.assign(spectral_size_, 0.0);
  weight_.assign(spectral_size_, 0.0);

  const double cutoff = static_cast<double>(n / 3);
  const double nyquist = static_cast<double>(n / 2);
  const std::size_t outer = slab ? n : n * n;
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t j = 0; j < half; ++j) {
      const std::size_t s = o * half + j;
      std::array<double, 3> k{0.0, 0.0, 0.0};
      if (slab) {
        k[0] = signed_wavenumber(o, n);
        k[1] = static_cast<double>(j);
      } else {
        k[0] = signed_wavenumber(o / n, n);
        k[1] = signed_wavenumber(o % n, n);
        k[2] = static_cast<double>(j);
      }
      double k2 = 0.0;
      bool keep = true;
      for (int a = 0; a < 3; ++a) {
        k_[a][s] = k[a];
        kd_[a][s] = std::abs(k[a]) == nyquist ? 0.0 : k[a];
        k2 += k[a] * k[a];
        keep = keep && std::abs(k[a]) <= cutoff;
      }
      k2_[s] = k2;
      mask_[s] = keep ? 1.0 : 0.0;
      weight_[s] = (j == 0 || j == n / 2) ? 1.0 : 2.0;
    }
  }

  std::lock_guard lock(planner_mutex());
  double* rbuf = fftw_alloc_real(size_);
  fftw_complex* cbuf = fftw_alloc_complex(spectral_size_);
  const int ni = static_cast<int>(n);
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  if (slab) {
    plan_forward_ = fftw_plan_dft_r2c_2d(ni, ni, rbuf, cbuf, flags);
    plan_inverse_ = fftw_plan_dft_c2r_2d(ni, ni, cbuf, rbuf, flags);
  } else {
    plan_forward_ = fftw_plan_dft_r2c_3d(ni, ni, ni, rbuf, cbuf, flags);
    plan_inverse_ = fftw_plan_dft_c2r_3d(ni, ni, ni, cbuf, rbuf, flags);
  }
  fftw_free(rbuf);
  fftw_free(cbuf);
}

Grid::~Grid() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(plan_forward_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_inverse_));
}

double Grid::spacing() const { return 2.0 * std::numbers::pi / static_cast<double>(n_); }

double Grid::cell_volume() const {
  const double h = spacing();
  return mode_ == DimMode::Slab2p5D ? h * h * 2.0 * std::numbers::pi : h * h * h;
}

double Grid::volume() {
  const double L = 2.0 * std::numbers::pi;
  return L * L * L;
}

std::array<double, 3> Grid::point(std::size_t index) const {
  const double h = spacing();
  if (mode_ == DimMode::Slab2p5D) {
    return {h * static_cast<double>(index / n_), h * static_cast<double>(index % n_), 0.0};
  }
  const std::size_t i3 = index % n_;
  const std::size_t i2 = (index / n_) % n_;
  const std::size_t i1 = index / (n_ * n_);
  return {h * static_cast<double>(i1), h * static_cast<double>(i2), h * static_cast<double>(i3)};
}

void Grid::forward(std::span<const double> values, std::span<Complex> coeffs) const {
  if (values.size() != size_ || coeffs.size() != spectral_size_) {
    throw UsageError("forward transform: buffer size does not match grid");
  }
  // r2c leaves its input intact.
  fftw_execute_dft_r2c(static_cast<fftw_plan>(plan_forward_), const_cast<double*>(values.data()),
                       reinterpret_cast<fftw_complex*>(coeffs.data()));
  const double scale = 1.0 / static_cast<double>(size_);
  for (auto& c : coeffs) c *= scale;
}

void Grid::inverse(std::span<const Complex> coeffs, std::span<double> values) const {
  if (values.size() != size_ || coeffs.size() != spectral_size_) {
    throw UsageError("inverse transform: buffer size does not match grid");
  }
  // c2r destroys its input.
  std::vector<Complex> scratch(coeffs.begin(), coeffs.end());
  fftw_execute_dft_c2r(static_cast<fftw_plan>(plan_inverse_),
                       reinterpret_cast<fftw_complex*>(scratch.data()), values.data());
}

}  // namespace lowmach::fields
