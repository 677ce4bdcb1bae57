// fplab - factorpower semigroups and their simple modules
//
// Exact symmetric group combinatorics: irreducible characters, Kostka
// numbers, Specht modules, and multiplicities of Specht modules in modules
// induced from block-permuting subgroups N = prod_i S_i wr S_{k_i}.

#ifndef FPLAB_SYMFUNC_HPP_
#define FPLAB_SYMFUNC_HPP_

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fplab/exact.hpp"
#include "fplab/limits.hpp"
#include "fplab/partitions.hpp"
#include "fplab/permgroup.hpp"

namespace fplab {

  BigInt factorial(std::size_t n);

  //! Order of the centralizer of an element of cycle type mu:
  //! prod_i i^{m_i} m_i!.
  BigInt centralizer_order(IntegerPartition const& mu);

  //! Value of the irreducible character chi^shape on the class of the
  //! given cycle type (Murnaghan-Nakayama rule). Throws ValidationError
  //! when the sizes differ.
  BigInt mn_character(IntegerPartition const& shape,
                      IntegerPartition const& cycle_type);

  //! Number of semistandard tableaux of shape lambda and content mu.
  BigInt kostka(IntegerPartition const& lambda, IntegerPartition const& mu);

  //! Hook length formula.
  BigInt specht_dim(IntegerPartition const& shape);

  //! A tuple (l_1, ..., l_n) with l_i a partition of k_i, labelling simple
  //! modules of S_{k_1} x ... x S_{k_n}. Component i-1 belongs to blocks of
  //! size i.
  class MultiPartition {
   public:
    MultiPartition() = default;
    explicit MultiPartition(std::vector<IntegerPartition> components);

    //! Each l_i = (k_i), i.e. the trivial module.
    static MultiPartition trivial(std::vector<std::size_t> const& k);

    //! "<size>=<partition>;..." such as "1=2,1;2=1". Sizes that are not
    //! mentioned get the trivial partition; "triv" or "" means all
    //! trivial. Throws ValidationError when a component does not partition
    //! the matching k_i.
    static MultiPartition parse(std::string_view                text,
                                std::vector<std::size_t> const& k);

    //! Every label for the given k, as a Cartesian product in which the
    //! component of the smallest block size varies slowest and each
    //! component runs through IntegerPartition::all.
    static std::vector<MultiPartition> all(std::vector<std::size_t> const& k);

    std::vector<IntegerPartition> const& components() const noexcept {
      return components_;
    }
    IntegerPartition const& operator[](std::size_t i) const {
      return components_[i];
    }
    //! k_i = |l_i|.
    std::vector<std::size_t> sizes() const;

    //! Product of the Specht dimensions.
    BigInt dim() const;

    //! Sizes with k_i = 0 are omitted: "1=2,1;2=1". All sizes empty: "0".
    std::string to_string() const;

    auto operator<=>(MultiPartition const&) const = default;

   private:
    std::vector<IntegerPartition> components_;
  };

  //! |N| for the block-permuting group of a set partition of this shape.
  BigInt block_group_order(IntegerPartition const& shape);

  //! Multiplicities of every Specht module S^lambda in every induced module
  //! Ind_N^{S_n}(S^l), where N permutes the blocks of a set partition of
  //! the given shape and S^l is inflated from N/S_rho.
  struct InducedTable {
    IntegerPartition              shape;
    std::vector<IntegerPartition> lambdas;  //!< IntegerPartition::all(n)
    std::vector<MultiPartition>   labels;   //!< MultiPartition::all(k)
    //! mult[a][b] is the multiplicity of lambdas[a] in labels[b].
    std::vector<std::vector<BigInt>> mult;
  };

  //! Frobenius sums over the explicit elements of N. Throws SizeLimitError
  //! when |N| > limits.normalizer_order and InconsistencyError when a sum is
  //! not divisible by |N|.
  InducedTable induced_table(IntegerPartition const& shape,
                             Limits const&           limits = {});
  //! Same computation on the serial reference kernel.
  InducedTable induced_table_serial(IntegerPartition const& shape,
                                    Limits const&           limits = {});

  //! Multiplicity of S^lambda in Ind_N^{S_n}(S^l). Throws ValidationError
  //! when lambda, rho and l do not fit together.
  BigInt induced_multiplicity(IntegerPartition const& lambda,
                              SetPartition const&     rho,
                              MultiPartition const&   l,
                              Limits const&           limits = {});

  struct FoulkesRow {
    IntegerPartition lambda;
    BigInt           mult_km;  //!< in the module for k blocks of size m
    BigInt           mult_mk;  //!< in the module for m blocks of size k
    bool             ok = false;
  };

  struct FoulkesReport {
    std::size_t             k = 0;
    std::size_t             m = 0;
    std::vector<FoulkesRow> rows;
    bool                    ok = false;
  };

  //! Compares the trivial-label induced modules of k blocks of size m and m
  //! blocks of size k, k < m, for every lambda of n = k * m. Throws
  //! ValidationError unless 0 < k < m and SizeLimitError when n exceeds
  //! limits.foulkes_degree or either |N| exceeds limits.normalizer_order.
  FoulkesReport foulkes_check(std::size_t   k,
                              std::size_t   m,
                              Limits const& limits = {});

  //! Young's natural representation: integer matrices in the basis of
  //! standard polytabloids, standard tableaux ordered by their row words.
  struct SpechtRep {
    IntegerPartition shape;
    std::size_t      dim = 0;
    //! Images of the adjacent transpositions (1 2), (2 3), ..., (n-1 n).
    std::vector<IntMatrix> generators;
  };

  //! Throws SizeLimitError when shape.size() > limits.specht_degree.
  SpechtRep specht_matrices(IntegerPartition const& shape,
                            Limits const&           limits = {});

  //! Matrix of an arbitrary permutation of degree shape.size() in Young's
  //! natural representation. Results are cached; the cache is thread safe.
  IntMatrix specht_matrix(IntegerPartition const& shape,
                          Permutation const&      pi,
                          Limits const&           limits = {});

}  // namespace fplab

#endif  // FPLAB_SYMFUNC_HPP_
