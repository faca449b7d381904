#pragma once

#include <iosfwd>

namespace ngroup::cli {

/// Process exit codes.
enum ExitCode : int {
  ok = 0,
  violation = 1,     // a verification failed: the build is wrong
  usage = 2,         // unknown subcommand or bad flags
  parse_error = 3,   // malformed map, spec, class or group file
  cap_exceeded = 4,
  bad_input = 5,     // input well-formed but outside an operation's domain
  internal = 6,
};

int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ngroup::cli
