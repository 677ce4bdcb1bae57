// fplab - factorpower semigroups and their simple modules
//
// Finite permutation groups stored by full enumeration of their elements.
// Points are 0-based internally and 1-based in every text format.
//
// Composition is right to left: (a * b)(m) = a(b(m)). All orderings of
// permutations are lexicographic on the image sequence, which makes coset
// representatives and every printed table reproducible.

#ifndef FPLAB_PERMGROUP_HPP_
#define FPLAB_PERMGROUP_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fplab/limits.hpp"
#include "fplab/partitions.hpp"

namespace fplab {

  using Point = std::uint8_t;

  class Permutation {
   public:
    Permutation() = default;

    //! Throws ValidationError unless images is a bijection of
    //! {0,...,images.size()-1}.
    explicit Permutation(std::vector<Point> images);

    static Permutation identity(std::size_t degree);

    //! Cycle notation with 1-based points, e.g. "(1 2)(3 4)" or "()".
    //! Points inside a cycle may be separated by spaces or commas.
    static Permutation from_cycles(std::size_t degree, std::string_view text);

    std::size_t degree() const noexcept {
      return images_.size();
    }
    Point operator[](std::size_t m) const {
      return images_[m];
    }
    std::span<Point const> images() const noexcept {
      return images_;
    }

    Permutation operator*(Permutation const& rhs) const;
    Permutation inverse() const;
    bool        is_identity() const noexcept;

    //! Cycle lengths including fixed points.
    IntegerPartition cycle_type() const;

    //! "(1 2)(3 4)"; the identity prints as "()".
    std::string to_cycles() const;
    //! Images of 1..n as digits (or comma separated when n > 9): "132".
    std::string to_one_line() const;

    auto operator<=>(Permutation const&) const = default;

   private:
    std::vector<Point> images_;
  };

  struct PermutationHash {
    std::size_t operator()(Permutation const& p) const noexcept;
  };

  class SetPartition;

  class PermutationGroup {
   public:
    PermutationGroup() = default;

    std::size_t degree() const noexcept {
      return degree_;
    }
    std::size_t order() const noexcept {
      return elements_.size();
    }
    //! Sorted lexicographically; the identity is always first.
    std::vector<Permutation> const& elements() const noexcept {
      return elements_;
    }
    std::vector<Permutation> const& generators() const noexcept {
      return generators_;
    }
    Permutation const& operator[](std::size_t i) const {
      return elements_[i];
    }

    std::optional<std::size_t> index_of(Permutation const& p) const;
    bool                       contains(Permutation const& p) const {
      return index_of(p).has_value();
    }
    bool is_subgroup_of(PermutationGroup const& other) const;

    //! True when the group is the full symmetric group on its points.
    bool is_full_symmetric() const noexcept;

    bool operator==(PermutationGroup const& other) const {
      return degree_ == other.degree_ && elements_ == other.elements_;
    }

    //! Closure of a set that is already known to be a subgroup: elements are
    //! sorted and a small generating set is chosen greedily, then checked by
    //! re-closure.
    static PermutationGroup from_elements(std::size_t              degree,
                                          std::vector<Permutation> elements);

   private:
    friend PermutationGroup generate_group(std::size_t,
                                           std::vector<Permutation> const&,
                                           Limits const&);

    std::size_t              degree_ = 0;
    std::vector<Permutation> elements_;
    std::vector<Permutation> generators_;
  };

  //! Closure of the generators under composition. Throws SizeLimitError when
  //! the closure exceeds limits.group_order and ValidationError when a
  //! generator has the wrong degree.
  PermutationGroup generate_group(std::size_t                     degree,
                                  std::vector<Permutation> const& generators,
                                  Limits const&                   limits = {});

  PermutationGroup symmetric_group(std::size_t n, Limits const& limits = {});
  PermutationGroup cyclic_group(std::size_t n);
  //! Dihedral group of order 2n acting on the vertices of an n-gon, n >= 3.
  PermutationGroup dihedral_group(std::size_t n);
  PermutationGroup trivial_group(std::size_t degree);

  //! Group DSL: "S<n>", "C<n>", "D<n>", or an explicit generator list
  //! "[<degree>:]<gen>;<gen>;..." with each generator in cycle notation,
  //! e.g. "(1 2)(3 4);(1 3)" or "4:(1 2)". Without a degree prefix the
  //! degree is the largest point mentioned.
  PermutationGroup parse_group(std::string_view spec, Limits const& limits = {});

  //! An equivalence relation on {0,...,n-1}. Block ids are normalized to
  //! appear in order of their minimal elements, starting at 0, so two
  //! partitions are equal iff their block_of sequences are equal.
  class SetPartition {
   public:
    SetPartition() = default;
    explicit SetPartition(std::vector<std::size_t> block_of);

    static SetPartition discrete(std::size_t n);
    static SetPartition full(std::size_t n);
    static SetPartition from_blocks(std::size_t                                  n,
                                    std::vector<std::vector<std::size_t>> const& blocks);
    //! "{1,2}{3}" with 1-based points.
    static SetPartition parse(std::string_view text);
    //! Consecutive blocks of the given sizes, in the order given.
    static SetPartition from_shape(IntegerPartition const& shape);
    //! All set partitions of an n-set, as restricted growth strings in
    //! lexicographic order.
    static std::vector<SetPartition> all(std::size_t n);

    std::size_t degree() const noexcept {
      return block_of_.size();
    }
    std::size_t block_count() const noexcept {
      return count_;
    }
    std::size_t block_of(std::size_t m) const {
      return block_of_[m];
    }
    std::vector<std::size_t> const& block_ids() const noexcept {
      return block_of_;
    }
    bool same_block(std::size_t a, std::size_t b) const {
      return block_of_[a] == block_of_[b];
    }
    //! Blocks in id order, each sorted.
    std::vector<std::vector<std::size_t>> blocks() const;
    //! Block sizes, sorted into a partition of degree().
    IntegerPartition shape() const;

    //! Smallest equivalence relation containing both.
    SetPartition join(SetPartition const& other) const;
    //! Blocks g(B).
    SetPartition image(Permutation const& g) const;
    //! True when every block of this partition lies inside a block of
    //! other.
    bool refines(SetPartition const& other) const;

    std::string to_string() const;

    auto operator<=>(SetPartition const&) const = default;

   private:
    std::vector<std::size_t> block_of_;
    std::size_t              count_ = 0;
  };

  //! Group law on a finite set of labels (cosets). Element 0 is the
  //! identity.
  struct GroupTable {
    std::vector<std::vector<std::size_t>> table;
    //! Canonical (lexicographically minimal) coset representative of each
    //! element.
    std::vector<Permutation> labels;

    std::size_t order() const noexcept {
      return table.size();
    }
    std::size_t multiply(std::size_t a, std::size_t b) const {
      return table[a][b];
    }
    std::size_t identity() const noexcept {
      return 0;
    }
    std::size_t inverse(std::size_t a) const;
    //! Exhaustive check of associativity, identity and inverses.
    bool is_group_law() const;
  };

  //! Searches for an isomorphism by mapping a generating set of a onto
  //! elements of b with matching orders.
  bool are_isomorphic(GroupTable const& a, GroupTable const& b);

  SetPartition orbits(PermutationGroup const& group);

  //! {g : g(m) lies in the block of m for every m}.
  PermutationGroup block_stabilizer(PermutationGroup const& group,
                                    SetPartition const&     partition);

  //! {g : g sub g^-1 = sub}. Throws ValidationError unless sub is contained
  //! in group.
  PermutationGroup normalizer(PermutationGroup const& group,
                              PermutationGroup const& sub);

  enum class CosetSide { left, right };

  //! One representative per coset gH (left) or Hg (right), each the
  //! lexicographically minimal element of its coset, listed in increasing
  //! order. The identity is always the first representative.
  std::vector<Permutation> cosets(PermutationGroup const& group,
                                  PermutationGroup const& sub,
                                  CosetSide               side);

  //! Table of normalizer/sub on left coset representatives. Throws
  //! ValidationError unless sub is a normal subgroup.
  GroupTable quotient_table(PermutationGroup const& normalizer,
                            PermutationGroup const& sub);

  //! Conjugacy classes as sets of element indices; classes are ordered by
  //! their smallest index and each class is sorted.
  std::vector<std::vector<std::size_t>>
  conjugacy_classes(PermutationGroup const& group);

  //! h^-1 * sub * h, elementwise.
  PermutationGroup conjugate(PermutationGroup const& sub, Permutation const& h);

  //! A group together with a (possibly non-faithful) action on `points`
  //! points. action[i] is the image of group[i].
  struct GroupAction {
    PermutationGroup         group;
    std::size_t              points = 0;
    std::vector<Permutation> action;

    //! The image of the action, a faithful permutation group on the points.
    PermutationGroup image(Limits const& limits = {}) const;
  };

  //! Extends generator images to a homomorphism. Throws ValidationError when
  //! the images do not define one.
  GroupAction make_action(PermutationGroup const&         group,
                          std::size_t                     points,
                          std::vector<Permutation> const& generator_images);

}  // namespace fplab

#endif  // FPLAB_PERMGROUP_HPP_
