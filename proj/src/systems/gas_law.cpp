#include "lowmach/systems/gas_law.hpp"

#include <cmath>
#include <string>

#include "lowmach/errors.hpp"

namespace lowmach::systems {

GasLaw GasLaw::perfect(double gamma, double S_base, double p_base) {
  if (!(gamma > 1.0)) throw UsageError("gamma must exceed 1");
  if (!(p_base > 0.0)) throw UsageError("p_base must be positive");
  GasLaw law;
  law.S_base = S_base;
  law.p_base = p_base;
  law.density = [gamma](double S, double p) { return std::pow(p * std::exp(-S), 1.0 / gamma); };
  law.density_dp = [gamma](double S, double p) {
    return std::pow(p * std::exp(-S), 1.0 / gamma) / (gamma * p);
  };
  return law;
}

CoeffPair gas_coeffs_at(const GasLaw& law, double S, double eps_q) {
  const double p = law.p_base * std::exp(eps_q);
  const double R = law.density(S, p);
  const double dR = law.density_dp(S, p);
  if (!(R > 0.0)) throw InvalidGasLaw("R(S, p) = " + std::to_string(R) + " is not positive");
  if (!(dR > 0.0)) throw InvalidGasLaw("dR/dp = " + std::to_string(dR) + " is not positive");
  return {p * dR / R, R / p};
}

GasCoeffs gas_coeffs(const GasLaw& law, const fields::ScalarField& theta,
                     const fields::ScalarField& q, double eps) {
  const auto& g = theta.grid_ptr();
  std::vector<double> a(g->size()), r(g->size());
  auto th = theta.values();
  auto qv = q.values();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto c = gas_coeffs_at(law, law.S_base + eps * th[i], eps * qv[i]);
    a[i] = c.a;
    r[i] = c.r;
  }
  return {fields::ScalarField::from_values(g, std::move(a)), fields::ScalarField::from_values(g, std::move(r))};
}

double base_density_factor(const GasLaw& law) { return gas_coeffs_at(law, law.S_base, 0.0).r; }

}  // namespace lowmach::systems
