#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lowmach/compressible/solver.hpp"
#include "lowmach/incompressible/limit.hpp"

namespace lowmach::cli {

enum class SystemKind { Full, Ideal };

/// Experiment configuration. Text form: one `key = value` per line, lists
/// comma-separated, '#' comments.
struct RunConfig {
  SystemKind system = SystemKind::Full;
  fields::DimMode dim = fields::DimMode::Slab2p5D;
  std::size_t n = 64;
  double gamma = 5.0 / 3.0;
  double mu = 0.05;
  double lambda = 0.0;
  double nu = 0.05;
  double kappa = 0.05;
  std::vector<double> eps_list{0.2, 0.1, 0.05, 0.025};
  double T = 0.5;
  std::optional<compressible::Scheme> scheme;
  double cfl = 0.3;
  std::optional<double> dt;
  int clean_div_every = 1;
  double implicit_weight = 1.0;
  std::string preset = "orszag-tang-like";
  /// Snapshot file with (w, B) to use instead of the preset.
  std::string init_file;
  /// Number of equally spaced output times, both ends included.
  int out_times = 11;
  std::vector<double> s_list{0.0, 2.0, 4.0};
  std::uint64_t seed = 1;
  double perturbation = 0.0;
  double limit_dt = 0.0025;
  double S_base = 1.0;
  double p_base = 1.0;

  /// Keys assigned through set(); used to reject dissipation in ideal mode.
  std::set<std::string> explicit_keys;

  /// Throws UsageError on an unknown key or malformed value.
  void set(const std::string& key, const std::string& value);
  /// `key=value`
  void set_assignment(const std::string& assignment);
  /// Throws UsageError when an invariant fails.
  void validate() const;

  compressible::Scheme effective_scheme() const;
  compressible::SchemeConfig scheme_config() const;
  std::vector<double> output_times() const;
  systems::PhysicalParams params(double eps) const;
  systems::GasLaw law() const;
  incompressible::LimitMode limit_mode() const;
  fields::GridPtr grid() const;
  /// Initial limit state from the preset or init_file.
  incompressible::LimitState limit_initial() const;

  /// Canonical key = value dump (round-trips through parse).
  std::string dump() const;
};

RunConfig parse_config(std::istream& in);
/// Loads `path` (if nonempty) and applies `overrides` ("key=value") in order.
RunConfig load_config(const std::filesystem::path& path, const std::vector<std::string>& overrides);

}  // namespace lowmach::cli
