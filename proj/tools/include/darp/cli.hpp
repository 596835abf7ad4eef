#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace darp::cli {

/// Entry point of the `darp` tool: solve, bench, convert, oracle, validate,
/// generate. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace darp::cli
