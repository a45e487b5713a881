#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "lowmach/errors.hpp"
#include "lowmach/scaling/nondim.hpp"

using namespace lowmach;
using namespace lowmach::scaling;

TEST_CASE("all-ones inputs") {
  PhysicalInputs in;
  in.H0 = 1.0;
  const auto dn = nondimensionalize(in);
  CHECK(dn.reynolds == 1.0);
  CHECK(dn.sound_speed == 1.0);
  CHECK(dn.mach == 1.0);
  CHECK(dn.prandtl == 2.0);  // c_p = c_V + R_gas
  CHECK(dn.magnetic_reynolds == 1.0);
  CHECK(dn.gamma == 2.0);
  CHECK(dn.cowling == doctest::Approx(1.0 / (4.0 * std::numbers::pi)).epsilon(1e-15));
}

TEST_CASE("sound speed and Mach number") {
  PhysicalInputs in;
  in.R_gas = 1.0;
  in.theta0 = 4.0;
  in.u0 = 1.0;
  auto dn = nondimensionalize(in);
  CHECK(dn.sound_speed == 2.0);
  CHECK(dn.mach == 0.5);
  in.u0 = 0.3;
  CHECK(nondimensionalize(in).mach == doctest::Approx(0.3 * 0.5).epsilon(1e-15));
}

TEST_CASE("formulas against hand evaluation") {
  PhysicalInputs in{2.0, 3.0, 5.0, 7.0, 0.5, 0.11, 0.02, 0.13, 0.17, 0.4, 1.5, 2.0};
  const auto dn = nondimensionalize(in);
  CHECK(dn.reynolds == doctest::Approx(2.0 * 3.0 * 5.0 / 0.11));
  CHECK(dn.sound_speed == doctest::Approx(std::sqrt(0.4 * 7.0)));
  CHECK(dn.prandtl == doctest::Approx(1.9 * 0.11 / 0.17));
  CHECK(dn.magnetic_reynolds == doctest::Approx(15.0 / 0.13));
  CHECK(dn.cowling == doctest::Approx(2.0 * 0.25 / (4 * std::numbers::pi * 2.0) / 9.0));
  CHECK(dn.gamma == doctest::Approx(1.9 / 1.5));

  // rescaling numerator and denominator jointly leaves each number fixed
  PhysicalInputs in2 = in;
  in2.rho0 *= 3.0;
  in2.mu *= 3.0;
  in2.kappa *= 3.0;
  in2.perm *= 3.0;
  in2.lambda *= 3.0;
  const auto d2 = nondimensionalize(in2);
  CHECK(d2.reynolds == doctest::Approx(dn.reynolds));
  CHECK(d2.prandtl == doctest::Approx(dn.prandtl));
  CHECK(d2.cowling == doctest::Approx(dn.cowling));
  CHECK(d2.lambda_ratio == doctest::Approx(dn.lambda_ratio));
  PhysicalInputs in3 = in;
  in3.R_gas *= 2.0;
  in3.theta0 /= 2.0;
  in3.cV *= 2.0;
  const auto d3 = nondimensionalize(in3);
  CHECK(d3.mach == doctest::Approx(dn.mach));
  CHECK(d3.gamma == doctest::Approx(dn.gamma));
}

TEST_CASE("zero field gives zero Cowling number") {
  PhysicalInputs in;
  in.H0 = 0.0;
  const auto dn = nondimensionalize(in);
  CHECK(dn.cowling == 0.0);
  CHECK(scaled_coefficients(dn).cowling_ignored);
}

TEST_CASE("scaled coefficients") {
  DimensionlessNumbers dn;
  dn.reynolds = dn.magnetic_reynolds = dn.prandtl = 1.0;
  dn.gamma = 5.0 / 3.0;
  dn.mach = 0.1;
  dn.cowling = 1.0;
  auto sc = scaled_coefficients(dn);
  CHECK(sc.params.kappa == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
  CHECK(sc.params.eps == 0.1);
  CHECK_FALSE(sc.cowling_ignored);
  dn.cowling = 0.7;
  dn.reynolds = 40.0;
  dn.magnetic_reynolds = 20.0;
  dn.prandtl = 0.5;
  dn.lambda_ratio = -0.5;
  sc = scaled_coefficients(dn);
  CHECK(sc.cowling_ignored);
  CHECK(sc.params.mu == 1.0 / 40.0);
  CHECK(sc.params.lambda == -0.5 / 40.0);
  CHECK(sc.params.nu == 1.0 / 20.0);
  CHECK(sc.params.kappa == doctest::Approx((5.0 / 3.0) / 20.0));
  CHECK(sc.params.gamma == 5.0 / 3.0);
}

TEST_CASE("input validation") {
  PhysicalInputs in;
  in.u0 = 0.0;
  CHECK_THROWS_AS(nondimensionalize(in), UsageError);
  in = PhysicalInputs{};
  in.lambda = -1.0;
  CHECK_THROWS_AS(nondimensionalize(in), UsageError);
  in = PhysicalInputs{};
  in.H0 = -1.0;
  CHECK_THROWS_AS(nondimensionalize(in), UsageError);
}

TEST_CASE("key = value parsing") {
  std::istringstream ok("# reference state\nrho0 = 2\n  u0=0.5   # slow\n\ntheta0 = 4\nR_gas = 1\n");
  const auto in = parse_inputs(ok);
  CHECK(in.rho0 == 2.0);
  CHECK(in.u0 == 0.5);
  CHECK(in.theta0 == 4.0);
  CHECK(in.mu == 1.0);
  CHECK(nondimensionalize(in).mach == 0.25);
  std::istringstream unknown("rho = 1\n");
  CHECK_THROWS_AS(parse_inputs(unknown), UsageError);
  std::istringstream bad("mu = abc\n");
  CHECK_THROWS_AS(parse_inputs(bad), UsageError);
  std::istringstream noeq("mu 1\n");
  CHECK_THROWS_AS(parse_inputs(noeq), UsageError);
  CHECK_THROWS_AS(read_inputs("/nonexistent/inputs.txt"), UsageError);
}

TEST_CASE("table and csv output") {
  const auto dn = nondimensionalize(PhysicalInputs{});
  const auto sc = scaled_coefficients(dn);
  std::ostringstream os;
  write_table(os, dn, sc);
  CHECK(os.str().find("Mach M") != std::string::npos);
  CHECK(os.str().find("Cowling") != std::string::npos);
  const std::string row = csv_row(dn, sc);
  const std::string head = csv_header();
  CHECK(std::count(row.begin(), row.end(), ',') == std::count(head.begin(), head.end(), ','));
  CHECK(row.rfind("1,1,2,1,0,2,1,1,1,0,1,1,1", 0) == 0);
}
