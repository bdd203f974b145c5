#pragma once

#include "tn/config.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace tn {

struct CliConfig {
  Config caps;
  bool json = false;
};

/// Reads a JSON config file with keys max_vars, max_degree, max_dnf,
/// projection and output ("text" | "json"). Unknown keys are errors.
CliConfig load_config_file(const std::string& path);

/// Runs one command. args excludes the program name. config_path is the
/// TN_CONFIG value or empty. Returns 0, 1 (domain error) or 2 (internal error).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const std::string& config_path = {});

}  // namespace tn
