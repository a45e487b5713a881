#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lowmach/cli/config.hpp"

namespace lowmach::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kConfigError = 2, kBreakdown = 3 };

struct CommandOptions {
  std::filesystem::path config_path;
  std::vector<std::string> overrides;
  std::optional<std::uint64_t> seed;
  int workers = 1;
  std::filesystem::path out = "lowmach_out";
  std::optional<std::string> synthetic;
  bool poison_symmetrizer = false;
};

/// Each command returns an ExitCode; UsageError maps to kConfigError.
int cmd_check(const CommandOptions& opt, std::ostream& os);
int cmd_run(const CommandOptions& opt, std::ostream& os);
int cmd_limit(const CommandOptions& opt, std::ostream& os);
int cmd_sweep(const CommandOptions& opt, std::ostream& os);
int cmd_nondim(const CommandOptions& opt, std::ostream& os);

}  // namespace lowmach::cli
