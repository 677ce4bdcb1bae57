// fplab - factorpower semigroups and their simple modules

#include <algorithm>
#include <numeric>
#include <set>

#include "fplab/errors.hpp"
#include "fplab/kernels.hpp"

namespace fplab::kernels {

  std::vector<FpElement> enumerate_serial(PermutationGroup const& G) {
    std::size_t const g = G.order();
    if (g > 40) {
      throw SizeLimitError("subset sweep over more than 2^40 subsets");
    }
    std::set<FpElement> seen;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g); ++mask) {
      std::vector<Permutation> subset;
      for (std::size_t j = 0; j < g; ++j) {
        if ((mask >> j) & 1U) {
          subset.push_back(G[j]);
        }
      }
      seen.insert(canonical_from_subset(G, subset));
    }
    return {seen.begin(), seen.end()};
  }

  std::vector<std::size_t>
  idempotent_census_serial(std::vector<FpElement> const& elements) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (elements[i] * elements[i] == elements[i]) {
        out.push_back(i);
      }
    }
    return out;
  }

  namespace {

    // All elements of S_k as permutations of {0, ..., k-1}.
    std::vector<Permutation> symmetric_elements(std::size_t k) {
      std::vector<Point> p(k);
      std::iota(p.begin(), p.end(), Point{0});
      std::vector<Permutation> out;
      do {
        out.emplace_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      return out;
    }

  }  // namespace

  ClassCounts block_class_counts_serial(IntegerPartition const& shape) {
    std::size_t const n = shape.size();
    auto const        k = shape.multiplicities();

    // Blocks of the partition, largest first, laid out consecutively.
    std::vector<std::vector<std::size_t>> blocks;
    std::size_t                           next = 0;
    for (auto part : shape.parts()) {
      std::vector<std::size_t> block(part);
      std::iota(block.begin(), block.end(), next);
      next += part;
      blocks.push_back(std::move(block));
    }
    auto const partition = SetPartition::from_shape(shape);

    // N is the set of elements of S_n mapping blocks onto blocks. Filtering
    // all of S_n keeps this independent of the wreath product indexing but
    // limits it to small n.
    ClassCounts counts;
    for (auto const& w : symmetric_elements(n)) {
      std::vector<std::size_t> block_image(blocks.size());
      bool                     ok = true;
      for (std::size_t b = 0; b < blocks.size() && ok; ++b) {
        block_image[b] = partition.block_of(w[blocks[b].front()]);
        for (auto m : blocks[b]) {
          if (partition.block_of(w[m]) != block_image[b]) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) {
        continue;
      }
      ClassKey key;
      key.push_back(w.cycle_type());
      std::size_t first = 0;
      for (std::size_t i = n; i >= 1; --i) {
        std::size_t const count = k[i - 1];
        if (count == 0) {
          continue;
        }
        std::vector<Point> images(count);
        for (std::size_t b = 0; b < count; ++b) {
          images[b] = static_cast<Point>(block_image[first + b] - first);
        }
        key.push_back(Permutation(images).cycle_type());
        first += count;
      }
      ++counts[key];
    }
    return counts;
  }

}  // namespace fplab::kernels
