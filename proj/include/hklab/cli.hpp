#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hklab {

/// Defaults shared by the subcommands; a key=value config file (--config)
/// seeds these, explicit flags win, and HKLAB_WORKERS sits in between for the
/// worker count.
struct RunConfig {
  RunConfig();

  unsigned max_n;
  unsigned max_degree;
  unsigned direct_mode_ceiling;
  unsigned worker_count;       // >= 1 once configured; flags may pass 0 = auto
  std::string output_format;   // text | json | csv
  bool extended_j0;
};

/// Parses `key=value` lines ('#' comments, blank lines ignored) into a
/// RunConfig.  Unknown keys, malformed values, and invariant violations
/// (zero ceilings or worker count) throw std::invalid_argument.
RunConfig parse_config_file(const std::string& path);

/// Dispatches one command line (without the program name).  Returns 0 on
/// success / all-pass, 1 when a verification ran and failed, 2 on usage
/// errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hklab
