// The posmon command line.
//
//   posmon [--json] [--cap N] <subcommand> ...
//
// Exit codes: 0 completed (boolean answers are part of the output), 2 usage
// or parse error, 3 cap exceeded (undecided), 4 precondition violated.

#ifndef POSMON_CLI_HPP_
#define POSMON_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "presentation.hpp"

namespace posmon::cli {

  inline constexpr int exit_ok           = 0;
  inline constexpr int exit_usage        = 2;
  inline constexpr int exit_cap          = 3;
  inline constexpr int exit_precondition = 4;

  // A presentation source: a presentation file; "gmn:M,N" for G_{M,N}; or,
  // when no such file exists, a built-in fixture named by the last path
  // component (so "fixtures/M6" works from any directory).
  Presentation load_presentation(std::string const& source);

  // args excludes the program name.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace posmon::cli

#endif  // POSMON_CLI_HPP_
