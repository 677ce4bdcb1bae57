// fplab - factorpower semigroups and their simple modules
//
// The monoid F*_n of pairs (rho, coset S_rho sigma), with rho an equivalence
// relation on n points and S_rho its Young subgroup, multiplied by
//
//   (rho, sigma) (rho', sigma') = (rho v sigma(rho'), sigma sigma').

#ifndef FPLAB_DUALSYM_HPP_
#define FPLAB_DUALSYM_HPP_

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "fplab/exact.hpp"
#include "fplab/limits.hpp"
#include "fplab/partitions.hpp"
#include "fplab/permgroup.hpp"

namespace fplab {

  //! Lexicographically smallest element of the coset S_rho sigma.
  Permutation canonical_coset_rep(SetPartition const& rho,
                                  Permutation const&  sigma);

  class FStarElement {
   public:
    FStarElement() = default;
    //! Replaces sigma by the canonical representative of S_rho sigma.
    FStarElement(SetPartition rho, Permutation const& sigma);

    static FStarElement identity(std::size_t n);

    SetPartition const& rho() const noexcept {
      return rho_;
    }
    Permutation const& sigma() const noexcept {
      return sigma_;
    }
    std::size_t degree() const noexcept {
      return rho_.degree();
    }
    bool is_idempotent() const;

    //! "{1,2}{3} | 132".
    std::string to_string() const;

    auto operator<=>(FStarElement const&) const = default;

   private:
    SetPartition rho_;
    Permutation  sigma_;
  };

  FStarElement fstar_multiply(FStarElement const& a, FStarElement const& b);

  //! All elements, sorted. Throws SizeLimitError when n > limits.fstar_degree.
  std::vector<FStarElement> fstar_enumerate(std::size_t n, Limits const& limits = {});

  //! |F*_n| by running through every (rho, sigma) and counting canonical
  //! pairs, without storing them.
  BigInt fstar_count(std::size_t n, Limits const& limits = {});

  struct DualDClass {
    IntegerPartition shape;
    BigInt           count_idempotents;  //!< n_lambda
    BigInt           group_order;        //!< |G_lambda| = prod_i k_i!
  };

  //! Closed formulas, one entry per lambda in IntegerPartition::all(n).
  //! Throws ValidationError when n > 30.
  std::vector<DualDClass> fstar_classes(std::size_t n);

  struct FStarStructure {
    std::size_t             n = 0;
    std::vector<DualDClass> classes;
    //! sum_lambda n_lambda^2 |G_lambda|.
    BigInt semisimple_dimension;
    //! Set when the brute force pass ran: per shape, the number of
    //! idempotents and the size of one H-class, in the order of classes.
    bool                     brute_forced = false;
    std::vector<std::size_t> brute_idempotents;
    std::vector<std::size_t> brute_group_orders;
    std::size_t              brute_element_count = 0;
    //! Brute force agrees with the formulas (true when it did not run).
    bool ok = true;
  };

  //! Formulas always; brute force over fstar_enumerate(n) when
  //! n <= brute_force_degree (and within limits.fstar_degree).
  FStarStructure fstar_structure(std::size_t   n,
                                 std::size_t   brute_force_degree = 5,
                                 Limits const& limits             = {});

  struct CorrespondenceRow {
    IntegerPartition shape;
    std::size_t      fp_idempotents    = 0;
    std::size_t      fstar_idempotents = 0;
    std::size_t      fp_group_order    = 0;
    std::size_t      fstar_group_order = 0;
    bool             isomorphic        = false;
    //! Simple dimensions n_lambda * dim X over the simples X of the
    //! maximal subgroup, sorted.
    std::vector<std::size_t> simple_dims;
    bool                     ok = false;
  };

  struct CorrespondenceReport {
    std::size_t                    n = 0;
    std::vector<CorrespondenceRow> rows;
    bool                           ok = false;
  };

  //! Matches the D-classes of FP+(S_n) (computed from idempotents) with
  //! those of F*_n (brute force) shape by shape. Throws SizeLimitError when
  //! n > limits.correspond_degree.
  CorrespondenceReport correspondence_check(std::size_t n, Limits const& limits = {});

}  // namespace fplab

#endif  // FPLAB_DUALSYM_HPP_
