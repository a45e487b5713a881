#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "lowmach/cli/checks.hpp"
#include "lowmach/cli/commands.hpp"
#include "lowmach/cli/sweep.hpp"
#include "lowmach/errors.hpp"
#include "lowmach/io/trajectory_io.hpp"

using namespace lowmach;
using namespace lowmach::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("lowmach_test_cli_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

CommandOptions small(const fs::path& out, std::vector<std::string> extra = {}) {
  CommandOptions o;
  o.out = out;
  o.overrides = {"n=16", "T=0.1", "out_times=3"};
  for (auto& e : extra) o.overrides.push_back(std::move(e));
  return o;
}

}  // namespace

TEST_CASE("config parsing and validation") {
  std::istringstream in("# sweep\nsystem = full\nn = 32\neps_list = 0.2, 0.1,0.05\nscheme = imex\ncfl=0.25\n");
  RunConfig c = parse_config(in);
  CHECK(c.n == 32);
  CHECK(c.eps_list == std::vector<double>{0.2, 0.1, 0.05});
  CHECK(c.cfl == 0.25);
  CHECK_NOTHROW(c.validate());
  CHECK(c.output_times().size() == 11);
  CHECK(c.output_times().back() == c.T);

  std::istringstream again(c.dump());
  const RunConfig d = parse_config(again);
  CHECK(d.dump() == c.dump());

  RunConfig bad;
  CHECK_THROWS_AS(bad.set("colour", "red"), UsageError);
  CHECK_THROWS_AS(bad.set("n", "sixteen"), UsageError);
  CHECK_THROWS_AS(bad.set_assignment("n16"), UsageError);
  bad.set("n", "24");
  CHECK_THROWS_AS(bad.validate(), UsageError);
  bad = RunConfig{};
  bad.set("eps_list", "0.1,0.2");
  CHECK_THROWS_AS(bad.validate(), UsageError);
  bad = RunConfig{};
  bad.set("eps_list", "1.5");
  CHECK_THROWS_AS(bad.validate(), UsageError);
  bad = RunConfig{};
  bad.set("system", "ideal");
  CHECK_NOTHROW(bad.validate());
  CHECK(bad.effective_scheme() == compressible::Scheme::Rk4Ideal);
  CHECK_FALSE(bad.params(0.1).any_dissipation());
  bad.set("mu", "0.1");
  CHECK_THROWS_AS(bad.validate(), UsageError);
  bad = RunConfig{};
  bad.set("scheme", "rk4-ideal");
  CHECK_THROWS_AS(bad.validate(), UsageError);
  CHECK_THROWS_AS(load_config("/nonexistent/cfg.txt", {}), UsageError);
}

TEST_CASE("synthetic spec") {
  CHECK(parse_synthetic("err=3eps").K == 3.0);
  CHECK(parse_synthetic("err=3*eps").p == 1.0);
  const auto s = parse_synthetic("err = 0.5 eps^2");
  CHECK(s.K == 0.5);
  CHECK(s.p == 2.0);
  CHECK(parse_synthetic("err=eps").K == 1.0);
  CHECK_THROWS_AS(parse_synthetic("3eps"), UsageError);
}

TEST_CASE("property checks") {
  CHECK(identity_battery(fields::DimMode::Full3D, 16, 3, 5).pass);
  const auto ok = symmetrizer_battery(200, 3);
  CHECK(ok[0].pass);
  CHECK(ok[1].pass);
  const auto poisoned = symmetrizer_battery(200, 3, true);
  CHECK_FALSE(poisoned[0].pass);
  for (const auto& r : residual_agreement(fields::DimMode::Slab2p5D, 16, {0.2, 0.05}, 1)) CHECK(r.pass);

  std::ostringstream os;
  CHECK(cmd_check(CommandOptions{}, os) == kOk);
  CHECK(os.str().find("all properties pass") != std::string::npos);
  CommandOptions poison;
  poison.poison_symmetrizer = true;
  std::ostringstream bad;
  CHECK(cmd_check(poison, bad) == kFailure);
  CHECK(bad.str().find("FAIL  symmetrizer symmetry") != std::string::npos);
}

TEST_CASE("run command") {
  const auto out = scratch("run");
  std::ostringstream os;
  CHECK(cmd_run(small(out, {"T=0"}), os) == kOk);
  const auto m = io::read_manifest(out / "trajectory");
  CHECK(m.files.size() == 1);
  CHECK(m.times == std::vector<double>{0.0});
  CHECK(slurp(out / "diagnostics.csv").rfind("time,mass,divH,maxq,maxu,maxH,maxphi,h0,h2,h4\n", 0) == 0);

  CHECK(cmd_run(small(out, {"system=ideal"}), os) == kOk);
  CHECK(io::read_manifest(out / "trajectory").kind == "ideal");

  std::ostringstream err;
  CHECK(cmd_run(small(out, {"n=12"}), err) == kConfigError);
  CHECK(err.str().find("configuration error") != std::string::npos);
  CHECK(cmd_run(small(out, {"scheme=rk4-full", "dt=0.5", "T=3"}), os) == kBreakdown);
  fs::remove_all(out);
}

TEST_CASE("limit command reproduces Taylor-Green decay") {
  const auto out = scratch("limit");
  CommandOptions o;
  o.out = out;
  o.overrides = {"n=32", "T=1", "preset=taylor-green", "mu=0.1", "limit_dt=0.01"};
  std::ostringstream os;
  REQUIRE(cmd_limit(o, os) == kOk);
  const auto text = os.str();
  const auto pos = text.find("relative error ");
  REQUIRE(pos != std::string::npos);
  CHECK(std::stod(text.substr(pos + 15)) <= 1e-6);
  CHECK(fs::exists(out / "limit_energy.csv"));
  CHECK(io::read_manifest(out / "limit").kind == "limit");
  o.overrides.push_back("preset=vortex-street");
  CHECK(cmd_limit(o, os) == kConfigError);
  fs::remove_all(out);
}

TEST_CASE("sweep command") {
  const auto out = scratch("sweep");
  CommandOptions o = small(out);
  o.workers = 2;
  std::ostringstream os;
  REQUIRE(cmd_sweep(o, os) == kOk);
  for (const char* f : {"sweep.csv", "rate_fit.txt", "rate_fit.csv", "rate_plot.svg", "config.txt",
                        "eps_0.2/errors.csv", "eps_0.025/residuals.csv", "eps_0.05/diagnostics.csv"}) {
    CHECK_MESSAGE(fs::exists(out / f), f);
  }
  const std::string first = slurp(out / "sweep.csv");
  CHECK(first.rfind("eps,s,sup_error,sup_error_canonical,max_residual_over_eps,achieved_T\n", 0) == 0);

  // same config and seed gives identical artifacts
  const auto out2 = scratch("sweep2");
  CommandOptions o2 = small(out2);
  o2.workers = 3;
  REQUIRE(cmd_sweep(o2, os) == kOk);
  CHECK(slurp(out2 / "sweep.csv") == first);
  CHECK(slurp(out2 / "eps_0.1/errors.csv") == slurp(out / "eps_0.1/errors.csv"));

  std::ostringstream one;
  CHECK(cmd_sweep(small(out, {"eps_list=0.1"}), one) == kFailure);
  CHECK(one.str().find("insufficient points") != std::string::npos);

  CommandOptions syn = small(out);
  syn.synthetic = "err=3eps";
  std::ostringstream s;
  CHECK(cmd_sweep(syn, s) == kOk);
  CHECK(s.str().find("slope p       1.000") != std::string::npos);
  CHECK(s.str().find("constant K    3.000") != std::string::npos);

  std::ostringstream broken;
  CHECK(cmd_sweep(small(out, {"scheme=rk4-full", "dt=0.5", "T=3"}), broken) == kBreakdown);
  CHECK(broken.str().find("truncated at T = ") != std::string::npos);
  fs::remove_all(out);
  fs::remove_all(out2);
}

TEST_CASE("nondim command") {
  CommandOptions o;
  o.overrides = {"theta0 = 4", "R_gas = 1"};
  std::ostringstream os;
  CHECK(cmd_nondim(o, os) == kOk);
  CHECK(os.str().find("Mach M                0.5") != std::string::npos);
  std::ostringstream ones;
  CHECK(cmd_nondim(CommandOptions{}, ones) == kOk);
  CHECK(ones.str().find("Reynolds R            1\n") != std::string::npos);
  o.overrides = {"u0 = -1"};
  std::ostringstream bad;
  CHECK(cmd_nondim(o, bad) == kConfigError);
}
