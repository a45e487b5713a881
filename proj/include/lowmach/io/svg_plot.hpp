#pragma once

#include <iosfwd>
#include <string>

#include "lowmach/asymptotics/rates.hpp"

namespace lowmach::io {

/// Log-log chart of the measured errors against eps with the fitted line and
/// a slope-1 reference through the largest-eps point.
void write_rate_plot(std::ostream& os, const asymptotics::RateFit& fit, const std::string& title);

}  // namespace lowmach::io
