#include "lowmach/scaling/nondim.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include "lowmach/errors.hpp"

namespace lowmach::scaling {

void PhysicalInputs::validate() const {
  const std::pair<const char*, double> positive[] = {{"rho0", rho0}, {"u0", u0},       {"L0", L0},
                                                     {"theta0", theta0}, {"mu", mu},   {"nu", nu},
                                                     {"kappa", kappa}, {"R_gas", R_gas}, {"cV", cV},
                                                     {"perm", perm}};
  for (const auto& [name, v] : positive) {
    if (!(v > 0.0) || !std::isfinite(v)) throw UsageError(std::string(name) + " must be positive");
  }
  if (!(H0 >= 0.0)) throw UsageError("H0 must be nonnegative");
  if (!(2.0 * mu + 3.0 * lambda > 0.0)) throw UsageError("2 mu + 3 lambda must be positive");
}

DimensionlessNumbers nondimensionalize(const PhysicalInputs& in) {
  in.validate();
  DimensionlessNumbers dn;
  const double cp = in.cV + in.R_gas;
  dn.reynolds = in.rho0 * in.u0 * in.L0 / in.mu;
  dn.sound_speed = std::sqrt(in.R_gas * in.theta0);
  dn.mach = in.u0 / dn.sound_speed;
  dn.prandtl = cp * in.mu / in.kappa;
  dn.magnetic_reynolds = in.u0 * in.L0 / in.nu;
  dn.cowling = in.perm * in.H0 * in.H0 / (4.0 * std::numbers::pi * in.rho0) / (in.u0 * in.u0);
  dn.gamma = cp / in.cV;
  dn.lambda_ratio = in.lambda / in.mu;
  return dn;
}

ScaledCoefficients scaled_coefficients(const DimensionlessNumbers& dn) {
  ScaledCoefficients sc;
  sc.params.eps = dn.mach;
  sc.params.gamma = dn.gamma;
  sc.params.mu = 1.0 / dn.reynolds;
  sc.params.lambda = dn.lambda_ratio / dn.reynolds;
  sc.params.nu = 1.0 / dn.magnetic_reynolds;
  sc.params.kappa = dn.gamma / (dn.reynolds * dn.prandtl);
  sc.cowling_ignored = dn.cowling != 1.0;
  return sc;
}

PhysicalInputs parse_inputs(std::istream& in) {
  PhysicalInputs p;
  const std::map<std::string, double*> slots = {
      {"rho0", &p.rho0}, {"u0", &p.u0},     {"L0", &p.L0},       {"theta0", &p.theta0},
      {"H0", &p.H0},     {"mu", &p.mu},     {"lambda", &p.lambda}, {"nu", &p.nu},
      {"kappa", &p.kappa}, {"R_gas", &p.R_gas}, {"cV", &p.cV},     {"perm", &p.perm}};
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    auto it = slots.find(key);
    if (it == slots.end()) throw UsageError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
    if (ec != std::errc() || ptr != val.data() + val.size()) {
      throw UsageError("line " + std::to_string(lineno) + ": bad number '" + val + "'");
    }
    *it->second = v;
  }
  return p;
}

PhysicalInputs read_inputs(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open " + path);
  return parse_inputs(f);
}

void write_table(std::ostream& os, const DimensionlessNumbers& dn, const ScaledCoefficients& sc) {
  const std::pair<const char*, double> rows[] = {
      {"Reynolds R", dn.reynolds},         {"Mach M", dn.mach},
      {"Prandtl Pr", dn.prandtl},          {"magnetic Reynolds Rm", dn.magnetic_reynolds},
      {"Cowling C", dn.cowling},           {"gamma", dn.gamma},
      {"sound speed a0", dn.sound_speed},  {"eps", sc.params.eps},
      {"mu (scaled)", sc.params.mu},       {"lambda (scaled)", sc.params.lambda},
      {"nu (scaled)", sc.params.nu},       {"kappa (scaled)", sc.params.kappa}};
  const auto flags = os.flags();
  for (const auto& [name, v] : rows) {
    os << std::left << std::setw(22) << name << std::setprecision(10) << v << '\n';
  }
  if (sc.cowling_ignored) os << "note: C != 1; the scaled equations carry no Cowling factor\n";
  os.flags(flags);
}

std::string csv_header() { return "R,M,Pr,Rm,C,gamma,a0,eps,mu,lambda,nu,kappa,cowling_ignored"; }

std::string csv_row(const DimensionlessNumbers& dn, const ScaledCoefficients& sc) {
  std::ostringstream os;
  os << std::setprecision(17) << dn.reynolds << ',' << dn.mach << ',' << dn.prandtl << ','
     << dn.magnetic_reynolds << ',' << dn.cowling << ',' << dn.gamma << ',' << dn.sound_speed << ','
     << sc.params.eps << ',' << sc.params.mu << ',' << sc.params.lambda << ',' << sc.params.nu << ','
     << sc.params.kappa << ',' << (sc.cowling_ignored ? 1 : 0);
  return os.str();
}

}  // namespace lowmach::scaling
