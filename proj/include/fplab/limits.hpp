// fplab - factorpower semigroups and their simple modules
//
// Budgets for the exhaustive computations. Every sweep in the library checks
// the relevant field before it starts and throws SizeLimitError instead of
// running away.

#ifndef FPLAB_LIMITS_HPP_
#define FPLAB_LIMITS_HPP_

#include <cstddef>
#include <string>

namespace fplab {

  struct Limits {
    //! Maximum order of a group enumerated from generators.
    std::size_t group_order = 100000;
    //! Maximum |G| for the 2^|G| subset sweep enumerating FP+(G, M).
    std::size_t enumerate_order = 24;
    //! Maximum n = k * m accepted by foulkes_check.
    std::size_t foulkes_degree = 12;
    //! Maximum n for explicit Specht matrices.
    std::size_t specht_degree = 8;
    //! Maximum n for explicit enumeration of F*_n.
    std::size_t fstar_degree = 7;
    //! Maximum n for the FP+(S_n) / F*_n correspondence check.
    std::size_t correspond_degree = 4;
    //! Maximum order of a block-permuting subgroup iterated elementwise.
    std::size_t normalizer_order = 1000000;

    //! Defaults overridden by FPLAB_GROUP_CAP, FPLAB_ENUMERATE_CAP,
    //! FPLAB_FOULKES_N, FPLAB_SPECHT_N, FPLAB_FSTAR_N, FPLAB_CORRESPOND_N and
    //! FPLAB_NORMALIZER_CAP when those are set.
    static Limits from_env();

    //! Set a field by its short name ("group", "enumerate", "foulkes",
    //! "specht", "fstar", "correspond", "normalizer"). Throws
    //! ValidationError on an unknown name or a zero value.
    void set(std::string const& name, std::size_t value);
  };

}  // namespace fplab

#endif  // FPLAB_LIMITS_HPP_
