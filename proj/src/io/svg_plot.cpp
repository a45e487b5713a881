#include "lowmach/io/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

namespace lowmach::io {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

}  // namespace

void write_rate_plot(std::ostream& os, const asymptotics::RateFit& fit, const std::string& title) {
  constexpr double W = 560, Hgt = 420, left = 70, right = 20, top = 40, bottom = 50;
  double x0 = std::log10(*std::min_element(fit.eps.begin(), fit.eps.end()));
  double x1 = std::log10(*std::max_element(fit.eps.begin(), fit.eps.end()));
  double y0 = std::log10(*std::min_element(fit.error.begin(), fit.error.end()));
  double y1 = std::log10(*std::max_element(fit.error.begin(), fit.error.end()));
  const double ref_anchor_x = std::log10(fit.eps.front()), ref_anchor_y = std::log10(fit.error.front());
  y0 = std::min(y0, ref_anchor_y - (ref_anchor_x - x0));
  const double padx = std::max(0.05, 0.08 * (x1 - x0)), pady = std::max(0.05, 0.08 * (y1 - y0));
  x0 -= padx, x1 += padx, y0 -= pady, y1 += pady;
  auto px = [&](double lx) { return left + (lx - x0) / (x1 - x0) * (W - left - right); };
  auto py = [&](double ly) { return Hgt - bottom - (ly - y0) / (y1 - y0) * (Hgt - top - bottom); };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << Hgt << "\" viewBox=\"0 0 "
     << W << ' ' << Hgt << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << escape(title) << "</text>\n";
  os << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << W - left - right << "\" height=\""
     << Hgt - top - bottom << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int d = static_cast<int>(std::ceil(x0)); d <= static_cast<int>(std::floor(x1)); ++d) {
    os << "<text x=\"" << num(px(d)) << "\" y=\"" << Hgt - bottom + 16 << "\" text-anchor=\"middle\">1e" << d
       << "</text>\n";
  }
  for (int d = static_cast<int>(std::ceil(y0)); d <= static_cast<int>(std::floor(y1)); ++d) {
    os << "<text x=\"" << left - 6 << "\" y=\"" << num(py(d) + 4) << "\" text-anchor=\"end\">1e" << d
       << "</text>\n";
  }
  os << "<text x=\"" << W / 2 << "\" y=\"" << Hgt - 12 << "\" text-anchor=\"middle\">eps</text>\n";
  os << "<text x=\"16\" y=\"" << Hgt / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << Hgt / 2
     << ")\">sup error</text>\n";

  auto line = [&](double a, double b, const char* style) {
    const double lx0 = x0 + padx, lx1 = x1 - padx;
    os << "<line x1=\"" << num(px(lx0)) << "\" y1=\"" << num(py(a * lx0 + b)) << "\" x2=\"" << num(px(lx1))
       << "\" y2=\"" << num(py(a * lx1 + b)) << "\" " << style << "/>\n";
  };
  line(fit.slope, std::log10(fit.K), "stroke=\"#1f77b4\" stroke-width=\"2\"");
  line(1.0, ref_anchor_y - ref_anchor_x, "stroke=\"gray\" stroke-dasharray=\"6 4\"");
  for (std::size_t i = 0; i < fit.eps.size(); ++i) {
    os << "<circle cx=\"" << num(px(std::log10(fit.eps[i]))) << "\" cy=\"" << num(py(std::log10(fit.error[i])))
       << "\" r=\"4\" fill=\"#d62728\"/>\n";
  }
  const double lx = left + 10, ly = top + 18;
  os << "<text x=\"" << lx << "\" y=\"" << ly << "\" fill=\"#1f77b4\">fit: slope " << num(fit.slope) << ", K "
     << num(fit.K) << "</text>\n";
  os << "<text x=\"" << lx << "\" y=\"" << ly + 16 << "\" fill=\"gray\">reference slope 1</text>\n";
  os << "</svg>\n";
}

}  // namespace lowmach::io
