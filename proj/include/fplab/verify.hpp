// fplab - factorpower semigroups and their simple modules
//
// The self-check suite behind `fplab verify`: every structural invariant of
// the library, each evaluated at small degree by an independent brute force
// computation.

#ifndef FPLAB_VERIFY_HPP_
#define FPLAB_VERIFY_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fplab/limits.hpp"

namespace fplab {

  struct CheckResult {
    std::string name;
    bool        ok = false;
    std::string detail;
  };

  struct Check {
    std::string                                   name;
    std::function<bool(std::string& detail)>      run;
  };

  //! The checks in a fixed order. Nothing runs until Check::run is called.
  std::vector<Check> verify_checks(Limits const& limits, std::uint64_t seed);

  //! Runs every check; exceptions count as failures with their message as
  //! detail. on_result is called after each check.
  std::vector<CheckResult>
  run_verify(Limits const&                                  limits,
             std::uint64_t                                  seed,
             std::function<void(CheckResult const&)> const& on_result = {});

}  // namespace fplab

#endif  // FPLAB_VERIFY_HPP_
