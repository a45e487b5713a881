#include "lowmach/cli/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "lowmach/errors.hpp"
#include "lowmach/fields/snapshot_io.hpp"
#include "lowmach/incompressible/presets.hpp"
#include "lowmach/io/csv.hpp"

namespace lowmach::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) throw UsageError(key + ": bad number '" + v + "'");
  return out;
}

long long to_int(const std::string& key, const std::string& v) {
  long long out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) throw UsageError(key + ": bad integer '" + v + "'");
  return out;
}

std::vector<double> to_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_double(key, trim(item)));
  if (out.empty()) throw UsageError(key + ": empty list");
  return out;
}

std::string list(const std::vector<double>& v) {
  std::string out;
  for (double x : v) out += (out.empty() ? "" : ",") + io::format_double(x);
  return out;
}

}  // namespace

void RunConfig::set(const std::string& key, const std::string& raw) {
  const std::string v = trim(raw);
  if (key == "system") {
    if (v == "full") system = SystemKind::Full;
    else if (v == "ideal") system = SystemKind::Ideal;
    else throw UsageError("system: expected full or ideal");
  } else if (key == "dim") {
    if (v == "slab" || v == "2.5d") dim = fields::DimMode::Slab2p5D;
    else if (v == "3d") dim = fields::DimMode::Full3D;
    else throw UsageError("dim: expected slab or 3d");
  } else if (key == "n") {
    const auto x = to_int(key, v);
    if (x <= 0) throw UsageError("n must be positive");
    n = static_cast<std::size_t>(x);
  } else if (key == "gamma") gamma = to_double(key, v);
  else if (key == "mu") mu = to_double(key, v);
  else if (key == "lambda") lambda = to_double(key, v);
  else if (key == "nu") nu = to_double(key, v);
  else if (key == "kappa") kappa = to_double(key, v);
  else if (key == "eps_list") eps_list = to_list(key, v);
  else if (key == "T") T = to_double(key, v);
  else if (key == "scheme") scheme = compressible::parse_scheme(v);
  else if (key == "cfl") cfl = to_double(key, v);
  else if (key == "dt") {
    if (v.empty() || v == "auto") dt.reset();
    else dt = to_double(key, v);
  } else if (key == "clean_div_every") clean_div_every = static_cast<int>(to_int(key, v));
  else if (key == "implicit_weight") implicit_weight = to_double(key, v);
  else if (key == "preset") preset = v;
  else if (key == "init_file") init_file = v;
  else if (key == "out_times") out_times = static_cast<int>(to_int(key, v));
  else if (key == "s_list") s_list = to_list(key, v);
  else if (key == "seed") {
    const auto x = to_int(key, v);
    if (x < 0) throw UsageError("seed must be nonnegative");
    seed = static_cast<std::uint64_t>(x);
  } else if (key == "perturbation") perturbation = to_double(key, v);
  else if (key == "limit_dt") limit_dt = to_double(key, v);
  else if (key == "S_base") S_base = to_double(key, v);
  else if (key == "p_base") p_base = to_double(key, v);
  else throw UsageError("unknown config key '" + key + "'");
  explicit_keys.insert(key);
}

void RunConfig::set_assignment(const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw UsageError("expected key=value, got '" + assignment + "'");
  set(trim(assignment.substr(0, eq)), assignment.substr(eq + 1));
}

void RunConfig::validate() const {
  if (n < 16 || (n & (n - 1)) != 0) throw UsageError("n must be a power of two >= 16");
  if (eps_list.empty()) throw UsageError("eps_list must not be empty");
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    if (!(eps_list[i] > 0.0 && eps_list[i] < 1.0)) throw UsageError("each eps must lie in (0, 1)");
    if (i > 0 && !(eps_list[i] < eps_list[i - 1])) throw UsageError("eps_list must be strictly decreasing");
  }
  if (!(T >= 0.0)) throw UsageError("T must be nonnegative");
  if (out_times < 2) throw UsageError("out_times must be at least 2");
  for (double s : s_list) {
    if (!(s >= 0.0)) throw UsageError("s_list entries must be nonnegative");
  }
  if (!(perturbation >= 0.0)) throw UsageError("perturbation must be nonnegative");
  if (!(limit_dt > 0.0)) throw UsageError("limit_dt must be positive");
  if (!(gamma > 1.0)) throw UsageError("gamma must exceed 1");
  if (!(p_base > 0.0)) throw UsageError("p_base must be positive");
  scheme_config().validate();
  if (system == SystemKind::Ideal) {
    if (params(0.1).any_dissipation()) throw UsageError("the ideal system takes no dissipation (mu, lambda, nu, kappa)");
    if (effective_scheme() != compressible::Scheme::Rk4Ideal) {
      throw UsageError("the ideal system is integrated with rk4-ideal");
    }
  } else {
    if (effective_scheme() == compressible::Scheme::Rk4Ideal) {
      throw UsageError("scheme rk4-ideal applies to the ideal system only");
    }
    params(eps_list.front()).validate_full();
  }
}

compressible::Scheme RunConfig::effective_scheme() const {
  if (scheme) return *scheme;
  return system == SystemKind::Ideal ? compressible::Scheme::Rk4Ideal : compressible::Scheme::ImexFull;
}

compressible::SchemeConfig RunConfig::scheme_config() const {
  compressible::SchemeConfig c;
  c.scheme = effective_scheme();
  c.cfl = cfl;
  c.dt_override = dt;
  c.clean_div_every = clean_div_every;
  c.implicit_weight = implicit_weight;
  return c;
}

std::vector<double> RunConfig::output_times() const {
  if (T == 0.0) return {0.0};
  std::vector<double> out;
  for (int i = 0; i < out_times; ++i) out.push_back(T * i / (out_times - 1));
  out.back() = T;
  return out;
}

systems::PhysicalParams RunConfig::params(double eps) const {
  systems::PhysicalParams p;
  if (system == SystemKind::Full || explicit_keys.count("mu") != 0) p.mu = mu;
  if (system == SystemKind::Full || explicit_keys.count("lambda") != 0) p.lambda = lambda;
  if (system == SystemKind::Full || explicit_keys.count("nu") != 0) p.nu = nu;
  if (system == SystemKind::Full || explicit_keys.count("kappa") != 0) p.kappa = kappa;
  p.gamma = gamma;
  p.eps = eps;
  return p;
}

systems::GasLaw RunConfig::law() const { return systems::GasLaw::perfect(gamma, S_base, p_base); }

incompressible::LimitMode RunConfig::limit_mode() const {
  if (system == SystemKind::Ideal) return incompressible::Ideal{systems::base_density_factor(law())};
  return incompressible::Viscous{mu, nu};
}

fields::GridPtr RunConfig::grid() const { return fields::Grid::create(dim, n); }

incompressible::LimitState RunConfig::limit_initial() const {
  if (!init_file.empty()) {
    auto snap = fields::read_snapshot(init_file);
    if (snap.components.size() < 6) throw UsageError("init_file needs at least 6 components (w, B)");
    if (snap.grid->n() != n || snap.grid->mode() != dim) throw UsageError("init_file grid differs from n/dim");
    const auto& c = snap.components;
    return incompressible::LimitState::make(fields::VectorField3(c[0], c[1], c[2]),
                                            fields::VectorField3(c[3], c[4], c[5]), limit_mode());
  }
  auto vm = incompressible::preset(preset, grid());
  return incompressible::LimitState::make(std::move(vm.vel), std::move(vm.mag), limit_mode());
}

std::string RunConfig::dump() const {
  std::ostringstream os;
  auto d = [](double x) { return io::format_double(x); };
  os << "system = " << (system == SystemKind::Full ? "full" : "ideal") << '\n'
     << "dim = " << (dim == fields::DimMode::Slab2p5D ? "slab" : "3d") << '\n'
     << "n = " << n << '\n'
     << "gamma = " << d(gamma) << '\n';
  if (system == SystemKind::Full) {
    os << "mu = " << d(mu) << '\n' << "lambda = " << d(lambda) << '\n' << "nu = " << d(nu) << '\n'
       << "kappa = " << d(kappa) << '\n';
  }
  os << "eps_list = " << list(eps_list) << '\n'
     << "T = " << d(T) << '\n'
     << "scheme = " << compressible::scheme_name(effective_scheme()) << '\n'
     << "cfl = " << d(cfl) << '\n'
     << "dt = " << (dt ? d(*dt) : std::string("auto")) << '\n'
     << "clean_div_every = " << clean_div_every << '\n'
     << "implicit_weight = " << d(implicit_weight) << '\n'
     << "preset = " << preset << '\n';
  if (!init_file.empty()) os << "init_file = " << init_file << '\n';
  os << "out_times = " << out_times << '\n'
     << "s_list = " << list(s_list) << '\n'
     << "seed = " << seed << '\n'
     << "perturbation = " << d(perturbation) << '\n'
     << "limit_dt = " << d(limit_dt) << '\n'
     << "S_base = " << d(S_base) << '\n'
     << "p_base = " << d(p_base) << '\n';
  return os.str();
}

RunConfig parse_config(std::istream& in) {
  RunConfig c;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    try {
      c.set_assignment(line);
    } catch (const UsageError& e) {
      throw UsageError("config line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return c;
}

RunConfig load_config(const std::filesystem::path& path, const std::vector<std::string>& overrides) {
  RunConfig c;
  if (!path.empty()) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open config " + path.string());
    c = parse_config(f);
  }
  for (const auto& o : overrides) c.set_assignment(o);
  return c;
}

}  // namespace lowmach::cli
