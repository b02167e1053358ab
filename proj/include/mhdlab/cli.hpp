#pragma once

#include <string>
#include <vector>

namespace mhdlab {

// Command-line surface on argv-style arguments (program name excluded).
// Returns the process exit status: 0 on success, 1 on runtime failures
// such as a blowup trip (the message carries the trip time), 2 on unknown
// flags or configuration violations (the message names the field).
int run_cli(std::vector<std::string> args);

}  // namespace mhdlab
