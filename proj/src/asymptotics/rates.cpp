#include "lowmach/asymptotics/rates.hpp"

#include <algorithm>
#include <cmath>

#include "lowmach/errors.hpp"
#include "lowmach/fields/operators.hpp"
#include "lowmach/systems/matrices.hpp"

namespace lowmach::asymptotics {

namespace {

template <typename S, typename Canon>
ErrorSeries compare(const compressible::Trajectory<S>& full, const ApproxTrajectory<S>& approx,
                    const std::vector<double>& s_list, Canon&& canonical) {
  const std::size_t n = std::min(full.states.size(), approx.states.size());
  ErrorSeries out;
  out.s_list = s_list;
  out.errors.resize(s_list.size());
  out.sup.assign(s_list.size(), 0.0);
  for (std::size_t t = 0; t < n; ++t) {
    if (std::abs(full.times[t] - approx.times[t]) > 1e-12 * std::max(1.0, approx.times[t])) {
      throw UsageError("error_series: snapshot times differ");
    }
    if (!full.states[t].q.grid().same_as(approx.states[t].q.grid())) {
      throw UsageError("error_series: snapshot grids differ");
    }
    const S E = systems::difference(full.states[t], approx.states[t]);
    out.times.push_back(full.times[t]);
    for (std::size_t i = 0; i < s_list.size(); ++i) {
      const double v = systems::sobolev_norm(E, s_list[i]);
      out.errors[i].push_back(v);
      out.sup[i] = std::max(out.sup[i], v);
    }
    const double c = std::sqrt(std::max(0.0, canonical(E, full.states[t])));
    out.canonical.push_back(c);
    out.sup_canonical = std::max(out.sup_canonical, c);
  }
  return out;
}

}  // namespace

ErrorSeries error_series(const compressible::Trajectory<FullState>& full, const ApproxTrajectory<FullState>& approx,
                         const std::vector<double>& s_list, const systems::PhysicalParams& p) {
  return compare(full, approx, s_list,
                 [&](const FullState& E, const FullState& U) { return systems::canonical_energy(E, U, p); });
}

ErrorSeries error_series(const compressible::Trajectory<IdealState>& full,
                         const ApproxTrajectory<IdealState>& approx, const std::vector<double>& s_list,
                         const systems::GasLaw& law, double eps) {
  return compare(full, approx, s_list, [&](const IdealState& E, const IdealState& V) {
    return systems::canonical_energy(E, V, law, eps);
  });
}

RateFit fit_rate(std::vector<std::pair<double, double>> points) {
  if (points.size() < 3) throw UsageError("fit_rate: insufficient points (need at least 3)");
  for (const auto& [e, err] : points) {
    if (!(e > 0.0)) throw UsageError("fit_rate: eps values must be positive");
    if (!(err > 0.0) || !std::isfinite(err)) throw UsageError("fit_rate: error values must be positive");
  }
  std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].first == points[i - 1].first) throw UsageError("fit_rate: repeated eps value");
  }
  const double n = static_cast<double>(points.size());
  double sx = 0, sy = 0;
  for (const auto& [e, err] : points) {
    sx += std::log(e);
    sy += std::log(err);
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (const auto& [e, err] : points) {
    const double dx = std::log(e) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(err) - my);
  }
  RateFit fit;
  fit.slope = sxy / sxx;
  const double intercept = my - fit.slope * mx;
  fit.K = std::exp(intercept);
  for (const auto& [e, err] : points) {
    fit.eps.push_back(e);
    fit.error.push_back(err);
    fit.max_residual = std::max(fit.max_residual, std::abs(std::log(err) - (fit.slope * std::log(e) + intercept)));
  }
  return fit;
}

}  // namespace lowmach::asymptotics
