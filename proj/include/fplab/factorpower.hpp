// fplab - factorpower semigroups and their simple modules
//
// The factorpower FP+(G, M) of a permutation group G acting on the points
// M = {0, ..., n-1}. A non-empty subset A of G is identified with the
// array of its point images (A_0, ..., A_{n-1}), A_m = {a(m) : a in A}, and
// that array is the canonical form stored by FpElement.
//
// Multiplication of classes is the image of subset multiplication:
// column m of a * b is the union of the columns a_x over x in b_m.

#ifndef FPLAB_FACTORPOWER_HPP_
#define FPLAB_FACTORPOWER_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fplab/limits.hpp"
#include "fplab/partitions.hpp"
#include "fplab/permgroup.hpp"

namespace fplab {

  //! Largest degree an FpElement can hold (one 32-bit set per column).
  inline constexpr std::size_t kMaxDegree = 32;

  //! A relation on n points stored column by column: bit x of column(m) is
  //! set when x lies in A_m. Values produced by the library are always
  //! elements of FP+(G, M); values parsed from text are arbitrary relations
  //! until is_member accepts them.
  class FpElement {
   public:
    FpElement() = default;
    //! The empty relation of the given degree.
    explicit FpElement(std::size_t degree);

    static FpElement from_columns(std::vector<std::uint32_t> const& columns);

    //! Class of the single permutation g: column m is {g(m)}.
    static FpElement from_permutation(Permutation const& g);

    //! Rows-of-bits text, row m listing A_m: "110/011/001".
    static FpElement parse_rows(std::string_view text);
    //! Array of arrays of 1-based points: [[1,2],[2,3],[3]].
    static FpElement parse_json(std::string_view text);

    std::size_t degree() const noexcept {
      return degree_;
    }
    std::uint32_t column(std::size_t m) const {
      return columns_[m];
    }
    bool contains(std::size_t m, std::size_t x) const {
      return (columns_[m] >> x) & 1U;
    }
    void insert(std::size_t m, std::size_t x) {
      columns_[m] |= std::uint32_t{1} << x;
    }
    void set_column(std::size_t m, std::uint32_t bits) {
      columns_[m] = bits;
    }
    //! True when every column is non-empty.
    bool has_full_support() const noexcept;

    //! Column m of the result is the union of a_x over x in b_m.
    FpElement operator*(FpElement const& b) const;

    std::string to_rows() const;
    std::string to_json() const;

    auto operator<=>(FpElement const&) const = default;

   private:
    std::size_t                            degree_ = 0;
    std::array<std::uint32_t, kMaxDegree> columns_{};
  };

  struct FpElementHash {
    std::size_t operator()(FpElement const& e) const noexcept;
  };

  //! Columns {a(m) : a in subset}. Throws ValidationError when the subset
  //! is empty or contains a permutation outside G.
  FpElement canonical_from_subset(PermutationGroup const&         G,
                                  std::vector<Permutation> const& subset);

  //! The largest subset of G in the class of e: {g : g(m) in e_m for all m}.
  std::vector<Permutation> saturate(PermutationGroup const& G,
                                    FpElement const&        e);

  //! Whether the relation is an element of FP+(G, M). Dispatches to the
  //! matching test when G is the full symmetric group of its degree and to
  //! the saturation test otherwise. Throws ValidationError on a degree
  //! mismatch.
  bool is_member(PermutationGroup const& G, FpElement const& relation);
  //! Regenerate the columns from the saturated subset and compare.
  bool is_member_saturation(PermutationGroup const& G,
                            FpElement const&        relation);
  //! Valid only for the full symmetric group: every true cell (m, x) must
  //! extend to a perfect matching inside the relation.
  bool is_member_matching(FpElement const& relation);

  inline FpElement multiply(FpElement const& a, FpElement const& b) {
    return a * b;
  }

  //! The anti-involution: class of {g^-1 : g in saturate(G, a)}.
  FpElement star(PermutationGroup const& G, FpElement const& a);

  //! Every element of FP+(G, M), sorted. Sweeps all 2^|G| subsets, so
  //! throws SizeLimitError when |G| > limits.enumerate_order.
  std::vector<FpElement> enumerate(PermutationGroup const& G,
                                   Limits const&           limits = {});

  struct IdempotentInfo {
    SetPartition     partition;
    PermutationGroup subgroup;
    FpElement        element;
  };

  //! One idempotent per orbit-maximal subgroup, found by sweeping set
  //! partitions. Sorted by shape (largest shape first in reverse
  //! lexicographic order, so the full partition comes first for S_n) and
  //! then by partition.
  std::vector<IdempotentInfo> idempotents(PermutationGroup const& G);

  enum class GreenRelation { L, R, H, D };

  //! L: a = g b; R: a = b g; H: both; D: a = g b g' for units g, g'.
  bool green_related(PermutationGroup const& G,
                     FpElement const&        a,
                     FpElement const&        b,
                     GreenRelation           rel);

  struct DClassInfo {
    //! epsilon_1, ..., epsilon_k; epsilon_i belongs to g_i^-1 H g_i.
    std::vector<IdempotentInfo> idempotents;
    //! g_1 = identity, ..., g_k: lexicographically minimal representatives
    //! of the right cosets N g of the normalizer.
    std::vector<Permutation> conjugators;
    PermutationGroup         normalizer;
    //! N/H on left coset representatives.
    GroupTable       maximal_subgroup;
    IntegerPartition shape;

    std::size_t k() const noexcept {
      return idempotents.size();
    }
    PermutationGroup const& subgroup() const {
      return idempotents.front().subgroup;
    }
    FpElement const& apex() const {
      return idempotents.front().element;
    }
  };

  DClassInfo dclass_of(PermutationGroup const& G, IdempotentInfo const& e);

  //! One D-class per conjugacy class of orbit-maximal subgroups, in the
  //! order of their first idempotent in idempotents(G). The representative
  //! idempotent of each class is that first one.
  std::vector<DClassInfo> dclasses(PermutationGroup const& G);

  //! Product in the trace of D (the D-class with a zero adjoined):
  //! std::nullopt stands for zero. Throws ValidationError when a or b is
  //! outside D.
  std::optional<FpElement> trace_product(PermutationGroup const& G,
                                         DClassInfo const&       D,
                                         FpElement const&        a,
                                         FpElement const&        b);

  struct UnitsAndKernel {
    //! Elements acting trivially on the points.
    PermutationGroup kernel;
    //! G/K on left coset representatives; isomorphic to the group of units.
    GroupTable units;
    //! The image of the action, which replaces G in every other
    //! computation.
    PermutationGroup faithful;
  };

  UnitsAndKernel units_and_kernel(GroupAction const& action,
                                  Limits const&      limits = {});
  UnitsAndKernel units_and_kernel(PermutationGroup const& G);

}  // namespace fplab

#endif  // FPLAB_FACTORPOWER_HPP_
