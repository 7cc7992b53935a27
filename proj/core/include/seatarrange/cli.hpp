#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seat::cli {

// Exit codes shared by both entry points:
//   0  success, or a feasible decision
//   1  infeasible decision (no stable / envy-free arrangement, failed selftest)
//   2  usage, schema, or argument error
//   3  search or input-size budget exceeded
int run(int argc, const char* const* argv);

// Same surface with injectable streams; `args` excludes the program name.
// Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seat::cli
