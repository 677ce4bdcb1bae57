// fplab - factorpower semigroups and their simple modules
//
// Integer partitions lambda |- n, shared by the semigroup modules (D-class
// shapes) and the symmetric function module.

#ifndef FPLAB_PARTITIONS_HPP_
#define FPLAB_PARTITIONS_HPP_

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fplab {

  class IntegerPartition {
   public:
    //! The empty partition of 0.
    IntegerPartition() = default;

    //! Parts are sorted into weakly decreasing order; zero parts are
    //! dropped.
    explicit IntegerPartition(std::vector<std::size_t> parts);

    //! "4,2,1"; "0" or "" is the empty partition.
    static IntegerPartition parse(std::string_view text);

    //! Every partition of n, in reverse lexicographic order: (n) first,
    //! (1,...,1) last.
    static std::vector<IntegerPartition> all(std::size_t n);

    std::size_t size() const noexcept {
      return size_;
    }
    std::size_t length() const noexcept {
      return parts_.size();
    }
    std::size_t operator[](std::size_t i) const {
      return parts_[i];
    }
    std::vector<std::size_t> const& parts() const noexcept {
      return parts_;
    }

    //! k_i = number of parts equal to i, for i = 1..size(); entry i-1.
    std::vector<std::size_t> multiplicities() const;

    IntegerPartition conjugate() const;

    //! "4,2,1"; the empty partition prints as "0".
    std::string to_string() const;

    //! Lexicographic on parts. Note that all() lists partitions in
    //! decreasing order of this comparison.
    auto operator<=>(IntegerPartition const&) const = default;

   private:
    std::vector<std::size_t> parts_;
    std::size_t              size_ = 0;
  };

}  // namespace fplab

#endif  // FPLAB_PARTITIONS_HPP_
