#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lowmach/asymptotics/rates.hpp"
#include "lowmach/compressible/solver.hpp"

namespace lowmach::io {

/// time, mass, divH, maxq, maxu, maxH, maxphi, h0, h2, h4
void write_diagnostics_csv(std::ostream& os, const std::vector<compressible::Diagnostics>& rows);

struct SweepRow {
  double eps = 0.0;
  double s = 0.0;
  double sup_error = 0.0;
  double sup_error_canonical = 0.0;
  double max_residual_over_eps = 0.0;
  double achieved_T = 0.0;
};
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

/// time followed by one error column per Sobolev index and the canonical norm.
void write_error_csv(std::ostream& os, const asymptotics::ErrorSeries& e);

/// Human-readable fit summary.
void write_rate_summary(std::ostream& os, const asymptotics::RateFit& fit, double s, const std::string& label);
std::string rate_csv_header();
/// label, s, points, slope, K, max_residual
std::string rate_csv_row(const asymptotics::RateFit& fit, double s, const std::string& label);

/// Shortest decimal text that reads back to the same double.
std::string format_double(double v);

}  // namespace lowmach::io
