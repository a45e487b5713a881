#include "lowmach/cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "lowmach/asymptotics/approximation.hpp"
#include "lowmach/cli/checks.hpp"
#include "lowmach/cli/sweep.hpp"
#include "lowmach/errors.hpp"
#include "lowmach/fields/operators.hpp"
#include "lowmach/io/csv.hpp"
#include "lowmach/io/svg_plot.hpp"
#include "lowmach/io/trajectory_io.hpp"
#include "lowmach/scaling/nondim.hpp"

namespace lowmach::cli {

namespace fs = std::filesystem;

namespace {

RunConfig configure(const CommandOptions& opt) {
  RunConfig cfg = load_config(opt.config_path, opt.overrides);
  if (opt.seed) cfg.seed = *opt.seed;
  cfg.validate();
  return cfg;
}

std::ofstream open_out(const fs::path& path) {
  fs::create_directories(path.parent_path());
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path.string());
  return f;
}

void save_config(const fs::path& dir, const RunConfig& cfg) { open_out(dir / "config.txt") << cfg.dump(); }

template <typename F>
int guarded(std::ostream& os, F&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    os << "configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (const StateSpaceExit& e) {
    os << "numerical breakdown: " << e.what() << '\n';
    return kBreakdown;
  } catch (const StabilityError& e) {
    os << "numerical breakdown: " << e.what() << '\n';
    return kBreakdown;
  } catch (const std::exception& e) {
    os << "error: " << e.what() << '\n';
    return kFailure;
  }
}

std::string pass_line(const CheckResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS  " : "FAIL  ") << r.name << ": " << r.value << " (tolerance " << r.tolerance << ", "
     << r.detail << ")";
  return os.str();
}

std::string eps_dir(double eps) { return "eps_" + io::format_double(eps); }

std::size_t pinned_index(const std::vector<double>& s_list) {
  for (std::size_t i = 0; i < s_list.size(); ++i) {
    if (s_list[i] == 2.0) return i;
  }
  return 0;
}

int report_fits(const fs::path& out, const std::vector<double>& s_list,
                const std::vector<std::vector<std::pair<double, double>>>& per_s, const std::string& label,
                std::ostream& os) {
  std::ofstream summary = open_out(out / "rate_fit.txt");
  std::ofstream csv = open_out(out / "rate_fit.csv");
  csv << io::rate_csv_header() << '\n';
  const std::size_t pin = pinned_index(s_list);
  int code = kOk;
  for (std::size_t i = 0; i < s_list.size(); ++i) {
    try {
      const auto fit = asymptotics::fit_rate(per_s[i]);
      io::write_rate_summary(summary, fit, s_list[i], label);
      csv << io::rate_csv_row(fit, s_list[i], label) << '\n';
      if (i == pin) {
        io::write_rate_summary(os, fit, s_list[i], label);
        std::ofstream svg = open_out(out / "rate_plot.svg");
        io::write_rate_plot(svg, fit, "sup error (s = " + io::format_double(s_list[i]) + ") vs eps, " + label);
      }
    } catch (const UsageError& e) {
      summary << "rate fit (" << label << ", s = " << io::format_double(s_list[i]) << "): " << e.what() << '\n';
      if (i == pin) os << "rate fit failed: " << e.what() << '\n';
      code = kFailure;
    }
  }
  return code;
}

int synthetic_sweep(const RunConfig& cfg, const CommandOptions& opt, std::ostream& os) {
  const auto spec = parse_synthetic(*opt.synthetic);
  std::vector<io::SweepRow> rows;
  std::vector<std::vector<std::pair<double, double>>> per_s(cfg.s_list.size());
  for (double eps : cfg.eps_list) {
    const double err = spec.K * std::pow(eps, spec.p);
    for (std::size_t i = 0; i < cfg.s_list.size(); ++i) {
      rows.push_back({eps, cfg.s_list[i], err, err, 0.0, cfg.T});
      per_s[i].emplace_back(eps, err);
    }
  }
  fs::create_directories(opt.out);
  save_config(opt.out, cfg);
  std::ofstream sweep = open_out(opt.out / "sweep.csv");
  io::write_sweep_csv(sweep, rows);
  os << "synthetic sweep: err = " << spec.K << " eps^" << spec.p << '\n';
  return report_fits(opt.out, cfg.s_list, per_s, "synthetic", os);
}

}  // namespace

int cmd_check(const CommandOptions& opt, std::ostream& os) {
  return guarded(os, [&]() -> int {
    RunConfig cfg = load_config(opt.config_path, opt.overrides);
    if (opt.config_path.empty() && cfg.explicit_keys.count("n") == 0) cfg.n = 16;
    if (opt.seed) cfg.seed = *opt.seed;
    cfg.validate();
    std::vector<CheckResult> results;
    results.push_back(identity_battery(cfg.dim, cfg.n, 20, cfg.seed));
    for (auto& r : symmetrizer_battery(1000, cfg.seed, opt.poison_symmetrizer)) results.push_back(r);
    for (auto& r : residual_agreement(cfg.dim, cfg.n, cfg.eps_list, cfg.seed)) results.push_back(r);
    int failures = 0;
    for (const auto& r : results) {
      os << pass_line(r) << '\n';
      failures += r.pass ? 0 : 1;
    }
    os << (failures == 0 ? "all properties pass" : std::to_string(failures) + " propert" +
                                                       (failures == 1 ? "y" : "ies") + " failed")
       << '\n';
    return failures == 0 ? kOk : kFailure;
  });
}

int cmd_run(const CommandOptions& opt, std::ostream& os) {
  return guarded(os, [&]() -> int {
    const RunConfig cfg = configure(opt);
    const double eps = cfg.eps_list.front();
    const auto init = cfg.limit_initial();
    fs::create_directories(opt.out);
    save_config(opt.out, cfg);
    incompressible::RunStatus status;
    double achieved = 0.0;
    std::string message;
    std::vector<compressible::Diagnostics> diags;
    std::size_t snaps = 0;
    if (cfg.system == SystemKind::Full) {
      const auto U0 = asymptotics::well_prepared_init_full(init, eps, cfg.perturbation, cfg.seed);
      const auto tr = compressible::solve_compressible(U0, cfg.T, cfg.scheme_config(), cfg.params(eps),
                                                       cfg.output_times());
      io::write_trajectory(opt.out / "trajectory", tr);
      status = tr.status, achieved = tr.achieved_T, message = tr.message, diags = tr.diagnostics;
      snaps = tr.states.size();
    } else {
      const auto V0 = asymptotics::well_prepared_init_ideal(init, eps, cfg.perturbation, cfg.seed);
      const auto tr = compressible::solve_compressible(V0, cfg.T, cfg.scheme_config(), cfg.law(), eps,
                                                       cfg.output_times());
      io::write_trajectory(opt.out / "trajectory", tr);
      status = tr.status, achieved = tr.achieved_T, message = tr.message, diags = tr.diagnostics;
      snaps = tr.states.size();
    }
    std::ofstream csv = open_out(opt.out / "diagnostics.csv");
    io::write_diagnostics_csv(csv, diags);
    os << "eps " << eps << ": " << snaps << " snapshot" << (snaps == 1 ? "" : "s") << " written to "
       << (opt.out / "trajectory").string() << '\n';
    if (status != incompressible::RunStatus::Completed) {
      os << "run truncated at T = " << achieved << ": " << message << '\n';
      return kBreakdown;
    }
    return kOk;
  });
}

int cmd_limit(const CommandOptions& opt, std::ostream& os) {
  return guarded(os, [&]() -> int {
    const RunConfig cfg = configure(opt);
    const auto init = cfg.limit_initial();
    const auto traj = incompressible::solve_limit(init, cfg.T, cfg.limit_dt, cfg.output_times());
    fs::create_directories(opt.out);
    save_config(opt.out, cfg);
    io::write_trajectory(opt.out / "limit", traj);
    std::ofstream csv = open_out(opt.out / "limit_energy.csv");
    csv << "time,energy,dissipated,max_vel,max_mag\n";
    for (std::size_t i = 0; i < traj.states.size(); ++i) {
      const auto& s = traj.states[i];
      csv << io::format_double(traj.times[i]) << ',' << io::format_double(incompressible::limit_energy(s)) << ','
          << io::format_double(traj.dissipated[i]) << ',' << io::format_double(s.vel.max_magnitude()) << ','
          << io::format_double(s.mag.max_magnitude()) << '\n';
    }
    os << "limit solve: " << traj.states.size() << " snapshots, energy " << incompressible::limit_energy(init)
       << " -> " << incompressible::limit_energy(traj.states.back()) << '\n';
    if (cfg.init_file.empty() && cfg.preset == "taylor-green" && cfg.system == SystemKind::Full) {
      fields::VectorField3 exact = init.vel;
      exact *= std::exp(-2.0 * cfg.mu * traj.times.back());
      const double rel = fields::sobolev_norm(traj.states.back().vel - exact, 0.0) /
                         std::max(fields::sobolev_norm(exact, 0.0), 1e-300);
      os << "taylor-green decay: relative error " << rel << " at t = " << traj.times.back() << '\n';
    }
    if (traj.status != incompressible::RunStatus::Completed) {
      os << "limit solve truncated at T = " << traj.last_good_time << ": " << traj.message << '\n';
      return kBreakdown;
    }
    return kOk;
  });
}

int cmd_sweep(const CommandOptions& opt, std::ostream& os) {
  return guarded(os, [&]() -> int {
    const RunConfig cfg = configure(opt);
    if (!(cfg.T > 0.0)) throw UsageError("sweep needs T > 0");
    if (opt.synthetic) return synthetic_sweep(cfg, opt, os);
    fs::create_directories(opt.out);
    save_config(opt.out, cfg);
    const auto result = run_sweep(cfg, opt.workers, [&](const std::string& m) { os << m << '\n'; });
    io::write_trajectory(opt.out / "limit", result.limit);
    if (result.limit.status != incompressible::RunStatus::Completed) {
      os << "limit solve truncated at T = " << result.limit.last_good_time << '\n';
      return kBreakdown;
    }
    std::vector<io::SweepRow> rows;
    for (const auto& r : result.runs) {
      const fs::path dir = opt.out / eps_dir(r.eps);
      std::ofstream diag = open_out(dir / "diagnostics.csv");
      io::write_diagnostics_csv(diag, r.diagnostics);
      std::ofstream err = open_out(dir / "errors.csv");
      io::write_error_csv(err, r.errors);
      std::ofstream res = open_out(dir / "residuals.csv");
      res << "time";
      for (double s : cfg.s_list) res << ",residual_s" << io::format_double(s);
      res << ",mismatch\n";
      for (std::size_t t = 0; t < r.residual_mismatch.size(); ++t) {
        res << io::format_double(result.limit.times[t]);
        for (const auto& col : r.residual_norms) res << ',' << io::format_double(col[t]);
        res << ',' << io::format_double(r.residual_mismatch[t]) << '\n';
      }
      for (std::size_t i = 0; i < cfg.s_list.size(); ++i) {
        rows.push_back({r.eps, cfg.s_list[i], r.errors.sup[i], r.errors.sup_canonical, r.residual_over_eps[i],
                        r.achieved_T});
      }
    }
    std::ofstream sweep = open_out(opt.out / "sweep.csv");
    io::write_sweep_csv(sweep, rows);

    std::vector<std::vector<std::pair<double, double>>> per_s;
    for (std::size_t i = 0; i < cfg.s_list.size(); ++i) per_s.push_back(error_points(result, i));
    const int fit_code =
        report_fits(opt.out, cfg.s_list, per_s, cfg.system == SystemKind::Full ? "full" : "ideal", os);
    if (!result.all_completed()) {
      for (const auto& r : result.runs) {
        if (r.status != incompressible::RunStatus::Completed) {
          os << "eps " << r.eps << " truncated at T = " << r.achieved_T << ": " << r.message << '\n';
        }
      }
      return kBreakdown;
    }
    return fit_code;
  });
}

int cmd_nondim(const CommandOptions& opt, std::ostream& os) {
  return guarded(os, [&]() -> int {
    std::stringstream text;
    if (!opt.config_path.empty()) {
      std::ifstream f(opt.config_path);
      if (!f) throw UsageError("cannot open " + opt.config_path.string());
      text << f.rdbuf() << '\n';
    }
    for (const auto& o : opt.overrides) text << o << '\n';
    const auto in = scaling::parse_inputs(text);
    const auto dn = scaling::nondimensionalize(in);
    const auto sc = scaling::scaled_coefficients(dn);
    scaling::write_table(os, dn, sc);
    os << scaling::csv_header() << '\n' << scaling::csv_row(dn, sc) << '\n';
    if (opt.out != CommandOptions{}.out) {
      std::ofstream f = open_out(opt.out / "nondim.csv");
      f << scaling::csv_header() << '\n' << scaling::csv_row(dn, sc) << '\n';
    }
    return kOk;
  });
}

}  // namespace lowmach::cli
