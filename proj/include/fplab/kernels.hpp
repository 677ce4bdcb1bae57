// fplab - factorpower semigroups and their simple modules
//
// The hot loops of the library, each in two versions: an OpenMP kernel
// (kernels_omp.cpp) used by the public API, and a plain serial reference
// (kernels_serial.cpp) written as directly as possible. The test suite
// checks that both agree and bench/ compares their speed.

#ifndef FPLAB_KERNELS_HPP_
#define FPLAB_KERNELS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "fplab/exact.hpp"
#include "fplab/factorpower.hpp"
#include "fplab/partitions.hpp"
#include "fplab/permgroup.hpp"

namespace fplab::kernels {

  // Subset sweep: the classes of all non-empty subsets of G, sorted and
  // deduplicated. No cap is checked here.
  std::vector<FpElement> enumerate_parallel(PermutationGroup const& G);
  std::vector<FpElement> enumerate_serial(PermutationGroup const& G);

  // Indices i with elements[i] * elements[i] == elements[i], ascending.
  std::vector<std::size_t>
  idempotent_census_parallel(std::vector<FpElement> const& elements);
  std::vector<std::size_t>
  idempotent_census_serial(std::vector<FpElement> const& elements);

  //! Key of a class count: the cycle type of w in S_n, followed by the
  //! cycle type of the induced permutation of the blocks of each size (in
  //! order of block size, sizes with no blocks skipped).
  using ClassKey = std::vector<IntegerPartition>;
  using ClassCounts = std::map<ClassKey, std::uint64_t>;

  //! Counts the elements of the block-permuting group N of a set partition
  //! with the given shape (blocks laid out consecutively, larger blocks
  //! first) by ClassKey. The caller checks |N| against the budget.
  ClassCounts block_class_counts_parallel(IntegerPartition const& shape);
  ClassCounts block_class_counts_serial(IntegerPartition const& shape);

}  // namespace fplab::kernels

#endif  // FPLAB_KERNELS_HPP_
