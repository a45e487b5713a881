#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace lowmach::fields {

using Complex = std::complex<double>;

enum class DimMode : std::uint8_t { Slab2p5D = 0, Full3D = 1 };

/// Uniform periodic discretization of the torus [0, 2*pi)^3.
///
/// Physical samples are stored row-major with the last active axis fastest:
/// index (i1, i2) in Slab2p5D mode, (i1, i2, i3) in Full3D mode. Spectral
/// coefficients use the real-to-complex half layout along that same last
/// axis. In Slab2p5D mode every field is independent of x3, so k3 == 0.
///
/// Immutable after construction; FFT execution is safe from several threads.
class Grid {
 public:
  static std::shared_ptr<const Grid> create(DimMode mode, std::size_t n);

  ~Grid();
  Grid(const Grid&) = delete;
  Grid& operator=(const Grid&) = delete;

  DimMode mode() const { return mode_; }
  std::size_t n() const { return n_; }
  /// Number of spatially varying axes (2 or 3).
  int active_dims() const { return mode_ == DimMode::Slab2p5D ? 2 : 3; }
  std::size_t size() const { return size_; }
  std::size_t spectral_size() const { return spectral_size_; }
  double spacing() const;
  /// Quadrature weight per grid point for integrals over the full 3-torus.
  double cell_volume() const;
  /// Measure of the 3-torus, (2*pi)^3.
  static double volume();
  /// Largest retained |k_i| after the 2/3-rule mask.
  int dealias_cutoff() const { return static_cast<int>(n_ / 3); }

  /// Integer wavenumber per spectral slot along `axis` (0..2), Nyquist kept.
  std::span<const double> wavenumber(int axis) const { return k_[axis]; }
  /// First-derivative symbol per slot along `axis`: the wavenumber with the
  /// Nyquist entry zeroed so that derivatives of real fields stay real.
  std::span<const double> derivative_symbol(int axis) const { return kd_[axis]; }
  /// |k|^2 per spectral slot (true wavenumbers, including Nyquist).
  std::span<const double> k_squared() const { return k2_; }
  /// 1 where every |k_i| <= n/3, else 0.
  std::span<const double> dealias_mask() const { return mask_; }
  /// Multiplicity of each half-spectrum slot in a full-spectrum sum (1 or 2).
  std::span<const double> hermitian_weight() const { return weight_; }

  /// Coordinate of grid point `index` along `axis` (0 for axis 2 in slab mode).
  std::array<double, 3> point(std::size_t index) const;

  /// Normalized forward transform: f(x) = sum_k c_k exp(i k.x).
  void forward(std::span<const double> values, std::span<Complex> coeffs) const;
  void inverse(std::span<const Complex> coeffs, std::span<double> values) const;

  bool same_as(const Grid& other) const { return mode_ == other.mode_ && n_ == other.n_; }

 private:
  Grid(DimMode mode, std::size_t n);

  DimMode mode_;
  std::size_t n_;
  std::size_t size_;
  std::size_t spectral_size_;
  std::array<std::vector<double>, 3> k_;
  std::array<std::vector<double>, 3> kd_;
  std::vector<double> k2_;
  std::vector<double> mask_;
  std::vector<double> weight_;
  void* plan_forward_ = nullptr;
  void* plan_inverse_ = nullptr;
};

using GridPtr = std::shared_ptr<const Grid>;

}  // namespace lowmach::fields
