#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace colorlab::tools {

/// Bad flags or input data; the CLI exits with status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

/// Runs the colorlab command line. args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace colorlab::tools
