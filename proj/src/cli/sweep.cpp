#include "lowmach/cli/sweep.hpp"

#include <atomic>
#include <charconv>
#include <mutex>
#include <regex>
#include <thread>

#include "lowmach/asymptotics/approximation.hpp"
#include "lowmach/asymptotics/residuals.hpp"
#include "lowmach/errors.hpp"

namespace lowmach::cli {

bool SweepResult::all_completed() const {
  if (limit.status != incompressible::RunStatus::Completed) return false;
  for (const auto& r : runs) {
    if (r.status != incompressible::RunStatus::Completed) return false;
  }
  return true;
}

namespace {

template <typename S, typename Res>
void fill(EpsRun& out, const compressible::Trajectory<S>& tr, const Res& rs, asymptotics::ErrorSeries es) {
  out.status = tr.status;
  out.achieved_T = tr.achieved_T;
  out.message = tr.message;
  out.steps = tr.steps;
  out.dt = tr.dt;
  out.diagnostics = tr.diagnostics;
  out.errors = std::move(es);
  for (std::size_t i = 0; i < rs.s_list.size(); ++i) {
    out.residual_over_eps.push_back(rs.max_norm(i) / out.eps);
    out.residual_row_u.push_back(rs.max_row_u(i));
  }
  out.residual_norms = rs.norms;
  out.residual_mismatch = rs.mismatch;
}

void touch(const fields::ScalarField& f) {
  (void)f.values();
  (void)f.spectrum();
}

/// Fills both representations of every shared limit field.
void synchronize(const incompressible::LimitTrajectory& limit) {
  for (const auto& s : limit.states) {
    for (int i = 0; i < 3; ++i) {
      touch(s.vel[i]);
      touch(s.mag[i]);
    }
    touch(s.pressure);
  }
  for (const auto& m : limit.material_dt_pressure) touch(m);
}

EpsRun run_one(const RunConfig& cfg, const incompressible::LimitTrajectory& limit, double eps) {
  EpsRun out;
  out.eps = eps;
  const auto& init = limit.states.front();
  const auto times = cfg.output_times();
  if (cfg.system == SystemKind::Full) {
    const auto p = cfg.params(eps);
    const auto U0 = asymptotics::well_prepared_init_full(init, eps, cfg.perturbation, cfg.seed);
    const auto tr = compressible::solve_compressible(U0, cfg.T, cfg.scheme_config(), p, times);
    const auto approx = asymptotics::build_approx_full(limit, eps);
    fill(out, tr, asymptotics::residual_full(limit, eps, p, cfg.s_list),
         asymptotics::error_series(tr, approx, cfg.s_list, p));
  } else {
    const auto law = cfg.law();
    const auto V0 = asymptotics::well_prepared_init_ideal(init, eps, cfg.perturbation, cfg.seed);
    const auto tr = compressible::solve_compressible(V0, cfg.T, cfg.scheme_config(), law, eps, times);
    const auto approx = asymptotics::build_approx_ideal(limit, eps);
    fill(out, tr, asymptotics::residual_ideal(limit, eps, law, cfg.s_list),
         asymptotics::error_series(tr, approx, cfg.s_list, law, eps));
  }
  return out;
}

}  // namespace

SweepResult run_sweep(const RunConfig& cfg, int workers, const Logger& log) {
  cfg.validate();
  if (workers < 1) throw UsageError("workers must be at least 1");
  SweepResult result;
  result.limit = incompressible::solve_limit(cfg.limit_initial(), cfg.T, cfg.limit_dt, cfg.output_times());
  if (log) log("limit solve: " + std::string(result.limit.status == incompressible::RunStatus::Completed
                                                  ? "completed"
                                                  : "truncated (" + result.limit.message + ")"));
  if (result.limit.status != incompressible::RunStatus::Completed) return result;
  synchronize(result.limit);

  result.runs.resize(cfg.eps_list.size());
  std::atomic<std::size_t> next{0};
  std::mutex log_mutex;
  std::exception_ptr failure;
  auto worker = [&] {
    for (std::size_t i = next++; i < cfg.eps_list.size(); i = next++) {
      try {
        result.runs[i] = run_one(cfg, result.limit, cfg.eps_list[i]);
        if (log) {
          std::lock_guard lock(log_mutex);
          const auto& r = result.runs[i];
          log("eps " + std::to_string(r.eps) + ": " +
              (r.status == incompressible::RunStatus::Completed ? "completed" : "truncated at T = " +
                                                                                   std::to_string(r.achieved_T)) +
              ", " + std::to_string(r.steps) + " steps");
        }
      } catch (...) {
        std::lock_guard lock(log_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int nthreads = std::min<int>(workers, static_cast<int>(cfg.eps_list.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return result;
}

std::vector<std::pair<double, double>> error_points(const SweepResult& r, std::size_t s_index) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& run : r.runs) {
    if (run.status == incompressible::RunStatus::Completed) pts.emplace_back(run.eps, run.errors.sup.at(s_index));
  }
  return pts;
}

SyntheticSpec parse_synthetic(const std::string& spec) {
  static const std::regex re(R"(\s*err\s*=\s*([0-9.eE+-]*)\s*\*?\s*eps(\s*\^\s*([0-9.eE+-]+))?\s*)");
  std::smatch m;
  if (!std::regex_match(spec, m, re)) throw UsageError("synthetic spec must look like err=3eps or err=2eps^2");
  SyntheticSpec s;
  if (m[1].length() > 0) s.K = std::stod(m[1].str());
  if (m[3].matched) s.p = std::stod(m[3].str());
  if (!(s.K > 0.0)) throw UsageError("synthetic constant must be positive");
  return s;
}

}  // namespace lowmach::cli
