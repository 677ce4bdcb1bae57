// fplab - factorpower semigroups and their simple modules

#include <omp.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

#include "fplab/errors.hpp"
#include "fplab/kernels.hpp"

namespace fplab::kernels {

  namespace {

    // Splits the 2^g subset range into a low half and a high half so that
    // the class of a subset is the bitwise or of two table lookups.
    struct SplitTables {
      std::size_t low_bits  = 0;
      std::size_t high_bits = 0;
    };

    SplitTables split(std::size_t g) {
      SplitTables s;
      s.low_bits  = g / 2;
      s.high_bits = g - s.low_bits;
      return s;
    }

    template <typename T, typename Or>
    std::vector<T> subset_table(std::vector<T> const& singles,
                                std::size_t           offset,
                                std::size_t           bits,
                                T const&              empty,
                                Or                    bit_or) {
      std::vector<T> table(std::size_t{1} << bits, empty);
      for (std::size_t mask = 1; mask < table.size(); ++mask) {
        auto low   = static_cast<std::size_t>(std::countr_zero(mask));
        table[mask] = bit_or(table[mask & (mask - 1)], singles[offset + low]);
      }
      return table;
    }

    std::vector<FpElement> enumerate_packed(PermutationGroup const& G) {
      std::size_t const n = G.degree();
      std::size_t const g = G.order();

      std::vector<std::uint64_t> singles(g, 0);
      for (std::size_t j = 0; j < g; ++j) {
        for (std::size_t m = 0; m < n; ++m) {
          singles[j] |= std::uint64_t{1} << (m * n + G[j][m]);
        }
      }
      auto const s     = split(g);
      auto       bor   = [](std::uint64_t a, std::uint64_t b) { return a | b; };
      auto const low   = subset_table<std::uint64_t>(singles, 0, s.low_bits, 0, bor);
      auto const high  = subset_table<std::uint64_t>(singles, s.low_bits, s.high_bits, 0, bor);
      auto const hsize = static_cast<std::int64_t>(high.size());

      std::vector<std::uint64_t> keys;
      if (n * n <= 24) {
        std::size_t const          words = ((std::size_t{1} << (n * n)) + 63) / 64;
        std::vector<std::uint64_t> seen(words, 0);
#pragma omp parallel
        {
          std::vector<std::uint64_t> local(words, 0);
#pragma omp for schedule(static)
          for (std::int64_t hi = 0; hi < hsize; ++hi) {
            auto const h = high[static_cast<std::size_t>(hi)];
            for (std::size_t lo = (hi == 0 ? 1 : 0); lo < low.size(); ++lo) {
              auto const key = h | low[lo];
              local[key >> 6] |= std::uint64_t{1} << (key & 63);
            }
          }
#pragma omp critical(fplab_enumerate_merge)
          for (std::size_t w = 0; w < words; ++w) {
            seen[w] |= local[w];
          }
        }
        for (std::size_t w = 0; w < words; ++w) {
          for (auto bits = seen[w]; bits != 0; bits &= bits - 1) {
            keys.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
          }
        }
      } else {
        std::unordered_set<std::uint64_t> seen;
#pragma omp parallel
        {
          std::unordered_set<std::uint64_t> local;
#pragma omp for schedule(static)
          for (std::int64_t hi = 0; hi < hsize; ++hi) {
            auto const h = high[static_cast<std::size_t>(hi)];
            for (std::size_t lo = (hi == 0 ? 1 : 0); lo < low.size(); ++lo) {
              local.insert(h | low[lo]);
            }
          }
#pragma omp critical(fplab_enumerate_merge)
          seen.insert(local.begin(), local.end());
        }
        keys.assign(seen.begin(), seen.end());
      }

      std::uint64_t const    column_mask = (std::uint64_t{1} << n) - 1;
      std::vector<FpElement> out;
      out.reserve(keys.size());
      for (auto key : keys) {
        FpElement e(n);
        for (std::size_t m = 0; m < n; ++m) {
          e.set_column(m, static_cast<std::uint32_t>((key >> (m * n)) & column_mask));
        }
        out.push_back(e);
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    std::vector<FpElement> enumerate_generic(PermutationGroup const& G) {
      std::size_t const      n = G.degree();
      std::size_t const      g = G.order();
      std::vector<FpElement> singles;
      singles.reserve(g);
      for (auto const& p : G.elements()) {
        singles.push_back(FpElement::from_permutation(p));
      }
      auto bor = [n](FpElement a, FpElement const& b) {
        for (std::size_t m = 0; m < n; ++m) {
          a.set_column(m, a.column(m) | b.column(m));
        }
        return a;
      };
      auto const s     = split(g);
      FpElement  empty(n);
      auto const low   = subset_table<FpElement>(singles, 0, s.low_bits, empty, bor);
      auto const high  = subset_table<FpElement>(singles, s.low_bits, s.high_bits, empty, bor);
      auto const hsize = static_cast<std::int64_t>(high.size());

      std::unordered_set<FpElement, FpElementHash> seen;
#pragma omp parallel
      {
        std::unordered_set<FpElement, FpElementHash> local;
#pragma omp for schedule(static)
        for (std::int64_t hi = 0; hi < hsize; ++hi) {
          auto const& h = high[static_cast<std::size_t>(hi)];
          for (std::size_t lo = (hi == 0 ? 1 : 0); lo < low.size(); ++lo) {
            local.insert(bor(h, low[lo]));
          }
        }
#pragma omp critical(fplab_enumerate_merge)
        seen.insert(local.begin(), local.end());
      }
      std::vector<FpElement> out(seen.begin(), seen.end());
      std::sort(out.begin(), out.end());
      return out;
    }

  }  // namespace

  std::vector<FpElement> enumerate_parallel(PermutationGroup const& G) {
    if (G.order() > 40) {
      throw SizeLimitError("subset sweep over more than 2^40 subsets");
    }
    if (G.degree() <= 8) {
      return enumerate_packed(G);
    }
    return enumerate_generic(G);
  }

  std::vector<std::size_t>
  idempotent_census_parallel(std::vector<FpElement> const& elements) {
    std::vector<std::size_t> out;
    auto const               size = static_cast<std::int64_t>(elements.size());
#pragma omp parallel
    {
      std::vector<std::size_t> local;
#pragma omp for schedule(static) nowait
      for (std::int64_t i = 0; i < size; ++i) {
        auto const& e = elements[static_cast<std::size_t>(i)];
        if (e * e == e) {
          local.push_back(static_cast<std::size_t>(i));
        }
      }
#pragma omp critical(fplab_census_merge)
      out.insert(out.end(), local.begin(), local.end());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  namespace {

    std::vector<std::vector<Point>> all_permutations(std::size_t k) {
      std::vector<Point> p(k);
      std::iota(p.begin(), p.end(), Point{0});
      std::vector<std::vector<Point>> out;
      do {
        out.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      return out;
    }

    IntegerPartition cycle_type_of(std::vector<std::size_t> const& images,
                                   std::vector<char>&              seen) {
      std::size_t const n = images.size();
      std::fill(seen.begin(), seen.begin() + static_cast<std::ptrdiff_t>(n), 0);
      std::vector<std::size_t> lengths;
      for (std::size_t m = 0; m < n; ++m) {
        if (seen[m]) {
          continue;
        }
        std::size_t len = 0;
        for (std::size_t x = m; !seen[x]; x = images[x]) {
          seen[x] = 1;
          ++len;
        }
        lengths.push_back(len);
      }
      return IntegerPartition(std::move(lengths));
    }

    // One factor S_i wr S_k of the block-permuting group.
    struct WreathFactor {
      std::size_t                     block_size = 0;
      std::size_t                     blocks     = 0;
      std::size_t                     offset     = 0;
      std::vector<std::vector<Point>> top;     // S_k
      std::vector<std::vector<Point>> bottom;  // S_i
      std::uint64_t                   order = 0;
    };

  }  // namespace

  ClassCounts block_class_counts_parallel(IntegerPartition const& shape) {
    std::size_t const n = shape.size();
    auto const        k = shape.multiplicities();

    std::vector<WreathFactor> factors;
    std::size_t               offset = 0;
    for (std::size_t i = n; i >= 1; --i) {
      if (k[i - 1] == 0) {
        continue;
      }
      WreathFactor f;
      f.block_size = i;
      f.blocks     = k[i - 1];
      f.offset     = offset;
      f.top        = all_permutations(f.blocks);
      f.bottom     = all_permutations(i);
      f.order      = f.top.size();
      for (std::size_t b = 0; b < f.blocks; ++b) {
        f.order *= f.bottom.size();
      }
      offset += i * f.blocks;
      factors.push_back(std::move(f));
    }
    std::uint64_t total = 1;
    for (auto const& f : factors) {
      total *= f.order;
    }

    ClassCounts counts;
    auto const  size = static_cast<std::int64_t>(total);
#pragma omp parallel
    {
      ClassCounts              local;
      std::vector<std::size_t> images(n);
      std::vector<std::size_t> top_images;
      std::vector<char>        seen(n);
      ClassKey                 key(factors.size() + 1);
#pragma omp for schedule(static)
      for (std::int64_t idx = 0; idx < size; ++idx) {
        auto rest = static_cast<std::uint64_t>(idx);
        for (std::size_t fi = 0; fi < factors.size(); ++fi) {
          auto const& f = factors[fi];
          auto const& pi = f.top[rest % f.top.size()];
          rest /= f.top.size();
          for (std::size_t b = 0; b < f.blocks; ++b) {
            auto const& tau = f.bottom[rest % f.bottom.size()];
            rest /= f.bottom.size();
            std::size_t const from = f.offset + b * f.block_size;
            std::size_t const to   = f.offset + pi[b] * f.block_size;
            for (std::size_t p = 0; p < f.block_size; ++p) {
              images[from + p] = to + tau[p];
            }
          }
          top_images.assign(pi.begin(), pi.end());
          std::vector<char> top_seen(f.blocks);
          key[fi + 1] = cycle_type_of(top_images, top_seen);
        }
        key[0] = cycle_type_of(images, seen);
        ++local[key];
      }
#pragma omp critical(fplab_class_merge)
      for (auto const& [kk, c] : local) {
        counts[kk] += c;
      }
    }
    return counts;
  }

}  // namespace fplab::kernels
