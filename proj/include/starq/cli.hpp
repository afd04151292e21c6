#pragma once

#include <string>
#include <vector>

namespace starq {

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// Exit codes: 0 success / property holds, 1 validation or property
// failure, 2 parse error, 64 usage error.
CommandResult run_command(const std::vector<std::string>& argv);

}  // namespace starq
