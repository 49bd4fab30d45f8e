#pragma once

#include <iosfwd>

namespace filbert::cli {

// Full command-line front end. Returns the process exit code:
//   0  success / every check passed
//   1  a verification, scan disagreement, or certificate violation occurred
//      (the report is still fully written)
//   2  usage error (diagnostic and flag grammar go to err)
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace filbert::cli
