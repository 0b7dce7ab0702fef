#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace addsep::cli {

enum Exit : int {
  kOk = 0,
  kCounterexample = 1,
  kUsage = 2,
  kGuardrail = 3,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace addsep::cli
