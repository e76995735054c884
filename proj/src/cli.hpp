#pragma once

// Command-line frontend, callable in-process.

#include <string>
#include <vector>

namespace twobridge {

// Parses and executes one command line (`args` excludes the program name)
// and returns the process exit code:
//   0  success
//   1  internal error (I/O, overflow, unexpected failure)
//   2  malformed input (notation, PD file, unknown command)
//   3  the input describes a link where a knot is required
//   4  a mathematically guaranteed identity failed to hold
int run_command(const std::vector<std::string>& args);

}  // namespace twobridge
