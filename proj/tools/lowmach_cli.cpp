#include <iostream>

#include "CLI11.hpp"
#include "lowmach/cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace lowmach::cli;
  CLI::App app{"Low Mach number MHD verification suite"};
  app.require_subcommand(1);
  CommandOptions opt;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config_path, "key = value configuration file");
    sub->add_option("--set", opt.overrides, "override one key (key=value); repeatable")->take_all();
    sub->add_option("--out", opt.out, "output directory");
  };
  auto add_run_opts = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "random seed for initial perturbations and checks");
  };

  auto* check = app.add_subcommand("check", "identity, symmetrizer and residual-agreement properties");
  add_common(check);
  add_run_opts(check);
  check->add_flag("--poison-symmetrizer", opt.poison_symmetrizer, "corrupt Atilde0 (negative control)");

  auto* run = app.add_subcommand("run", "single compressible run at the first eps");
  add_common(run);
  add_run_opts(run);

  auto* limit = app.add_subcommand("limit", "incompressible limit solve");
  add_common(limit);

  auto* sweep = app.add_subcommand("sweep", "eps sweep and convergence-rate fit");
  add_common(sweep);
  add_run_opts(sweep);
  sweep->add_option("--workers", opt.workers, "concurrent eps runs")->check(CLI::PositiveNumber);
  sweep->add_option("--synthetic", opt.synthetic, "bypass the solvers with exact data, e.g. err=3eps");

  auto* nondim = app.add_subcommand("nondim", "dimensionless numbers from physical inputs");
  add_common(nondim);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }
  for (auto* sub : {check, run, sweep}) {
    if (sub->parsed() && sub->count("--seed") > 0) opt.seed = seed;
  }

  if (check->parsed()) return cmd_check(opt, std::cout);
  if (run->parsed()) return cmd_run(opt, std::cout);
  if (limit->parsed()) return cmd_limit(opt, std::cout);
  if (sweep->parsed()) return cmd_sweep(opt, std::cout);
  return cmd_nondim(opt, std::cout);
}
