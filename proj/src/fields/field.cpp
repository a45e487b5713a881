#include "lowmach/fields/field.hpp"

#include <algorithm>
#include <cmath>

#include "lowmach/errors.hpp"

namespace lowmach::fields {

ScalarField::ScalarField(GridPtr grid) : ScalarField(std::move(grid), 0.0) {}

ScalarField::ScalarField(GridPtr grid, double constant)
    : grid_(std::move(grid)), sync_(std::make_unique<std::mutex>()) {
  if (!grid_) throw UsageError("field requires a grid");
  data_.values.assign(grid_->size(), constant);
  data_.spectrum.assign(grid_->spectral_size(), Complex{});
  data_.spectrum[0] = constant;
  data_.has_values = true;
  data_.has_spectrum = true;
}

ScalarField ScalarField::from_values(GridPtr grid, std::vector<double> values) {
  ScalarField f(std::move(grid));
  if (values.size() != f.grid_->size()) throw UsageError("from_values: size mismatch");
  f.data_.values = std::move(values);
  f.data_.has_spectrum = false;
  return f;
}

ScalarField ScalarField::from_spectrum(GridPtr grid, std::vector<Complex> coeffs) {
  ScalarField f(std::move(grid));
  if (coeffs.size() != f.grid_->spectral_size()) throw UsageError("from_spectrum: size mismatch");
  f.data_.spectrum = std::move(coeffs);
  f.data_.has_values = false;
  return f;
}

ScalarField ScalarField::from_function(GridPtr grid,
                                       const std::function<double(double, double, double)>& fn) {
  std::vector<double> v(grid->size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto x = grid->point(i);
    v[i] = fn(x[0], x[1], x[2]);
  }
  return from_values(std::move(grid), std::move(v));
}

ScalarField::ScalarField(const ScalarField& other)
    : grid_(other.grid_), sync_(std::make_unique<std::mutex>()) {
  std::lock_guard lock(*other.sync_);
  data_ = other.data_;
}

ScalarField::ScalarField(ScalarField&& other) noexcept
    : grid_(std::move(other.grid_)),
      data_(std::move(other.data_)),
      sync_(std::move(other.sync_)) {}

ScalarField& ScalarField::operator=(const ScalarField& other) {
  if (this == &other) return *this;
  Storage copy;
  {
    std::lock_guard lock(*other.sync_);
    copy = other.data_;
  }
  grid_ = other.grid_;
  data_ = std::move(copy);
  if (!sync_) sync_ = std::make_unique<std::mutex>();
  return *this;
}

ScalarField& ScalarField::operator=(ScalarField&& other) noexcept {
  grid_ = std::move(other.grid_);
  data_ = std::move(other.data_);
  sync_ = std::move(other.sync_);
  return *this;
}

void ScalarField::ensure_values() const {
  std::lock_guard lock(*sync_);
  if (data_.has_values) return;
  data_.values.resize(grid_->size());
  grid_->inverse(data_.spectrum, data_.values);
  data_.has_values = true;
}

void ScalarField::ensure_spectrum() const {
  std::lock_guard lock(*sync_);
  if (data_.has_spectrum) return;
  data_.spectrum.resize(grid_->spectral_size());
  grid_->forward(data_.values, data_.spectrum);
  data_.has_spectrum = true;
}

std::span<const double> ScalarField::values() const {
  ensure_values();
  return data_.values;
}

std::span<const Complex> ScalarField::spectrum() const {
  ensure_spectrum();
  return data_.spectrum;
}

std::span<double> ScalarField::mutable_values() {
  ensure_values();
  data_.has_spectrum = false;
  return data_.values;
}

std::span<Complex> ScalarField::mutable_spectrum() {
  ensure_spectrum();
  data_.has_values = false;
  return data_.spectrum;
}

void ScalarField::check_grid(const ScalarField& other, const char* op) const {
  if (grid_ != other.grid_ && !grid_->same_as(*other.grid_)) {
    throw UsageError(std::string(op) + ": fields live on different grids");
  }
}

ScalarField& ScalarField::axpy(double factor, const ScalarField& other) {
  check_grid(other, "axpy");
  // Stay in whichever representation both sides already hold.
  const bool spectral = data_.has_spectrum && !data_.has_values;
  if (spectral) {
    auto src = other.spectrum();
    for (std::size_t i = 0; i < src.size(); ++i) data_.spectrum[i] += factor * src[i];
  } else {
    ensure_values();
    auto src = other.values();
    for (std::size_t i = 0; i < src.size(); ++i) data_.values[i] += factor * src[i];
    data_.has_spectrum = false;
  }
  return *this;
}

ScalarField& ScalarField::operator+=(const ScalarField& other) { return axpy(1.0, other); }
ScalarField& ScalarField::operator-=(const ScalarField& other) { return axpy(-1.0, other); }

ScalarField& ScalarField::operator*=(double factor) {
  if (data_.has_values) {
    for (auto& v : data_.values) v *= factor;
  }
  if (data_.has_spectrum) {
    for (auto& c : data_.spectrum) c *= factor;
  }
  return *this;
}

ScalarField& ScalarField::apply_mask() {
  auto c = mutable_spectrum();
  const auto mask = grid_->dealias_mask();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] *= mask[i];
  return *this;
}

double ScalarField::mean() const {
  if (data_.has_spectrum) return spectrum()[0].real();
  double s = 0.0;
  for (double v : values()) s += v;
  return s / static_cast<double>(grid_->size());
}

double ScalarField::integral() const {
  double s = 0.0;
  for (double v : values()) s += v;
  return s * grid_->cell_volume();
}

double ScalarField::max_abs() const {
  double m = 0.0;
  for (double v : values()) m = std::max(m, std::abs(v));
  return m;
}

double ScalarField::min() const {
  auto v = values();
  return *std::min_element(v.begin(), v.end());
}

double ScalarField::max() const {
  auto v = values();
  return *std::max_element(v.begin(), v.end());
}

ScalarField operator+(ScalarField a, const ScalarField& b) { return std::move(a += b); }
ScalarField operator-(ScalarField a, const ScalarField& b) { return std::move(a -= b); }
ScalarField operator*(double s, ScalarField a) { return std::move(a *= s); }
ScalarField operator*(ScalarField a, double s) { return std::move(a *= s); }
ScalarField operator-(ScalarField a) { return std::move(a *= -1.0); }

VectorField3::VectorField3(GridPtr grid)
    : c_{ScalarField(grid), ScalarField(grid), ScalarField(grid)} {}

VectorField3::VectorField3(ScalarField x, ScalarField y, ScalarField z)
    : c_{std::move(x), std::move(y), std::move(z)} {
  for (int i = 1; i < 3; ++i) {
    if (!c_[0].grid().same_as(c_[static_cast<std::size_t>(i)].grid())) {
      throw UsageError("vector components must share one grid");
    }
  }
}

VectorField3& VectorField3::operator+=(const VectorField3& o) { return axpy(1.0, o); }
VectorField3& VectorField3::operator-=(const VectorField3& o) { return axpy(-1.0, o); }

VectorField3& VectorField3::operator*=(double factor) {
  for (auto& c : c_) c *= factor;
  return *this;
}

VectorField3& VectorField3::axpy(double factor, const VectorField3& o) {
  for (int i = 0; i < 3; ++i) (*this)[i].axpy(factor, o[i]);
  return *this;
}

VectorField3& VectorField3::apply_mask() {
  for (auto& c : c_) c.apply_mask();
  return *this;
}

double VectorField3::max_magnitude() const {
  auto x = c_[0].values();
  auto y = c_[1].values();
  auto z = c_[2].values();
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    m = std::max(m, x[i] * x[i] + y[i] * y[i] + z[i] * z[i]);
  }
  return std::sqrt(m);
}

VectorField3 operator+(VectorField3 a, const VectorField3& b) { return std::move(a += b); }
VectorField3 operator-(VectorField3 a, const VectorField3& b) { return std::move(a -= b); }
VectorField3 operator*(double s, VectorField3 a) { return std::move(a *= s); }
VectorField3 operator-(VectorField3 a) { return std::move(a *= -1.0); }

ScalarField pointwise_product(const ScalarField& a, const ScalarField& b) {
  if (!a.grid().same_as(b.grid())) throw UsageError("pointwise_product: grid mismatch");
  auto av = a.values();
  auto bv = b.values();
  std::vector<double> out(av.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = av[i] * bv[i];
  return ScalarField::from_values(a.grid_ptr(), std::move(out));
}

VectorField3 pointwise_product(const ScalarField& a, const VectorField3& b) {
  return {pointwise_product(a, b[0]), pointwise_product(a, b[1]), pointwise_product(a, b[2])};
}

ScalarField pointwise_quotient(const ScalarField& a, const ScalarField& b) {
  if (!a.grid().same_as(b.grid())) throw UsageError("pointwise_quotient: grid mismatch");
  auto av = a.values();
  auto bv = b.values();
  std::vector<double> out(av.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = av[i] / bv[i];
  return ScalarField::from_values(a.grid_ptr(), std::move(out));
}

VectorField3 pointwise_quotient(const VectorField3& a, const ScalarField& b) {
  return {pointwise_quotient(a[0], b), pointwise_quotient(a[1], b), pointwise_quotient(a[2], b)};
}

ScalarField pointwise_map(const ScalarField& a, const std::function<double(double)>& f) {
  auto av = a.values();
  std::vector<double> out(av.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f(av[i]);
  return ScalarField::from_values(a.grid_ptr(), std::move(out));
}

}  // namespace lowmach::fields
