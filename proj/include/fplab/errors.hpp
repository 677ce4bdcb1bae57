// fplab - factorpower semigroups and their simple modules
//
// Exception types thrown across the library. The CLI maps them onto exit
// codes: ValidationError -> 2, SizeLimitError -> 3, everything else -> 1.

#ifndef FPLAB_ERRORS_HPP_
#define FPLAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace fplab {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Malformed or inconsistent input (non-bijective permutation, degree
  //! mismatch, subgroup not contained in the group, ...).
  class ValidationError : public Error {
   public:
    using Error::Error;
  };

  //! A configured budget would be exceeded.
  class SizeLimitError : public Error {
   public:
    using Error::Error;
  };

  //! A floating point construction failed its tolerance check.
  class NumericalError : public Error {
   public:
    using Error::Error;
  };

  //! Two computations that must agree did not.
  class InconsistencyError : public Error {
   public:
    using Error::Error;
  };

}  // namespace fplab

#endif  // FPLAB_ERRORS_HPP_
