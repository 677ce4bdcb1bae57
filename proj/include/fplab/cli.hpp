// fplab - factorpower semigroups and their simple modules
//
// The command line front end, callable in-process so that tests can run it
// without spawning the executable.

#ifndef FPLAB_CLI_HPP_
#define FPLAB_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace fplab::cli {

  //! Exit statuses.
  inline constexpr int kOk              = 0;
  inline constexpr int kFailure         = 1;  //!< failed check or computation error
  inline constexpr int kUsage           = 2;  //!< bad command, flag or input
  inline constexpr int kBudgetExceeded  = 3;

  //! Runs one command. args excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace fplab::cli

#endif  // FPLAB_CLI_HPP_
