#include "lowmach/io/csv.hpp"

#include <charconv>
#include <cstdio>
#include <ostream>

namespace lowmach::io {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_diagnostics_csv(std::ostream& os, const std::vector<compressible::Diagnostics>& rows) {
  os << "time,mass,divH,maxq,maxu,maxH,maxphi,h0,h2,h4\n";
  for (const auto& d : rows) {
    os << format_double(d.time) << ',' << format_double(d.mass) << ',' << format_double(d.divH) << ','
       << format_double(d.maxq) << ',' << format_double(d.maxu) << ',' << format_double(d.maxH) << ','
       << format_double(d.maxphi) << ',' << format_double(d.h0) << ',' << format_double(d.h2) << ','
       << format_double(d.h4) << '\n';
  }
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "eps,s,sup_error,sup_error_canonical,max_residual_over_eps,achieved_T\n";
  for (const auto& r : rows) {
    os << format_double(r.eps) << ',' << format_double(r.s) << ',' << format_double(r.sup_error) << ','
       << format_double(r.sup_error_canonical) << ',' << format_double(r.max_residual_over_eps) << ','
       << format_double(r.achieved_T) << '\n';
  }
}

void write_error_csv(std::ostream& os, const asymptotics::ErrorSeries& e) {
  os << "time";
  for (double s : e.s_list) os << ",err_s" << format_double(s);
  os << ",err_canonical\n";
  for (std::size_t t = 0; t < e.times.size(); ++t) {
    os << format_double(e.times[t]);
    for (const auto& col : e.errors) os << ',' << format_double(col[t]);
    os << ',' << format_double(e.canonical[t]) << '\n';
  }
}

void write_rate_summary(std::ostream& os, const asymptotics::RateFit& fit, double s, const std::string& label) {
  os << "rate fit (" << label << ", s = " << format_double(s) << ")\n";
  os << "  points        " << fit.eps.size() << '\n';
  char line[128];
  for (std::size_t i = 0; i < fit.eps.size(); ++i) {
    std::snprintf(line, sizeof line, "  eps %-8g  error %.6e  error/eps %.6g\n", fit.eps[i], fit.error[i],
                  fit.error[i] / fit.eps[i]);
    os << line;
  }
  std::snprintf(line, sizeof line, "  slope p       %.3f\n  constant K    %.3f\n  max residual  %.3e\n", fit.slope,
                fit.K, fit.max_residual);
  os << line;
}

std::string rate_csv_header() { return "label,s,points,slope,K,max_residual"; }

std::string rate_csv_row(const asymptotics::RateFit& fit, double s, const std::string& label) {
  return label + ',' + format_double(s) + ',' + std::to_string(fit.eps.size()) + ',' + format_double(fit.slope) +
         ',' + format_double(fit.K) + ',' + format_double(fit.max_residual);
}

}  // namespace lowmach::io
