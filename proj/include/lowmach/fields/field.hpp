#pragma once

#include <array>
#include <complex>
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "lowmach/fields/grid.hpp"

namespace lowmach::fields {

/// Real scalar field on a periodic grid.
///
/// Holds physical samples and normalized spectral coefficients; whichever
/// one is stale gets recomputed on first access. The lazy synchronization is
/// guarded by an internal mutex, so concurrent const access is safe. Mutating
/// access while other threads read the same field is not.
class ScalarField {
 public:
  explicit ScalarField(GridPtr grid);
  ScalarField(GridPtr grid, double constant);

  static ScalarField from_values(GridPtr grid, std::vector<double> values);
  static ScalarField from_spectrum(GridPtr grid, std::vector<Complex> coeffs);
  static ScalarField from_function(GridPtr grid,
                                   const std::function<double(double, double, double)>& f);

  ScalarField(const ScalarField& other);
  ScalarField(ScalarField&& other) noexcept;
  ScalarField& operator=(const ScalarField& other);
  ScalarField& operator=(ScalarField&& other) noexcept;
  ~ScalarField() = default;

  const GridPtr& grid_ptr() const { return grid_; }
  const Grid& grid() const { return *grid_; }

  std::span<const double> values() const;
  std::span<const Complex> spectrum() const;
  /// Writable samples; invalidates the cached spectrum.
  std::span<double> mutable_values();
  /// Writable coefficients; invalidates the cached samples.
  std::span<Complex> mutable_spectrum();

  ScalarField& operator+=(const ScalarField& other);
  ScalarField& operator-=(const ScalarField& other);
  ScalarField& operator*=(double factor);
  /// this += factor * other
  ScalarField& axpy(double factor, const ScalarField& other);

  /// Zero every mode outside the 2/3-rule band.
  ScalarField& apply_mask();

  double mean() const;
  /// Integral over the 3-torus (trapezoidal quadrature).
  double integral() const;
  double max_abs() const;
  double min() const;
  double max() const;

 private:
  struct Storage {
    std::vector<double> values;
    std::vector<Complex> spectrum;
    bool has_values = false;
    bool has_spectrum = false;
  };

  void ensure_values() const;
  void ensure_spectrum() const;
  void check_grid(const ScalarField& other, const char* op) const;

  GridPtr grid_;
  mutable Storage data_;
  mutable std::unique_ptr<std::mutex> sync_;
};

ScalarField operator+(ScalarField a, const ScalarField& b);
ScalarField operator-(ScalarField a, const ScalarField& b);
ScalarField operator*(double s, ScalarField a);
ScalarField operator*(ScalarField a, double s);
ScalarField operator-(ScalarField a);

/// Three scalar components on one grid.
class VectorField3 {
 public:
  explicit VectorField3(GridPtr grid);
  VectorField3(ScalarField x, ScalarField y, ScalarField z);

  const GridPtr& grid_ptr() const { return c_[0].grid_ptr(); }
  const Grid& grid() const { return c_[0].grid(); }

  ScalarField& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const ScalarField& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }

  VectorField3& operator+=(const VectorField3& other);
  VectorField3& operator-=(const VectorField3& other);
  VectorField3& operator*=(double factor);
  VectorField3& axpy(double factor, const VectorField3& other);
  VectorField3& apply_mask();

  /// Pointwise maximum of the Euclidean magnitude.
  double max_magnitude() const;

 private:
  std::array<ScalarField, 3> c_;
};

VectorField3 operator+(VectorField3 a, const VectorField3& b);
VectorField3 operator-(VectorField3 a, const VectorField3& b);
VectorField3 operator*(double s, VectorField3 a);
VectorField3 operator-(VectorField3 a);

/// Pointwise (undealiased) product and quotient, for coefficient factors.
ScalarField pointwise_product(const ScalarField& a, const ScalarField& b);
VectorField3 pointwise_product(const ScalarField& a, const VectorField3& b);
ScalarField pointwise_quotient(const ScalarField& a, const ScalarField& b);
VectorField3 pointwise_quotient(const VectorField3& a, const ScalarField& b);
ScalarField pointwise_map(const ScalarField& a, const std::function<double(double)>& f);

}  // namespace lowmach::fields
