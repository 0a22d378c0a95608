#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace css {

enum ExitCode : int {
  kExitOk = 0,
  kExitMalformed = 1,
  kExitInvariant = 2,
  kExitRelationFalse = 3,
  kExitCounterexamples = 4,
};

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace css
