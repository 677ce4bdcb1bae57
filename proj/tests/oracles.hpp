// Naive reference computations used by the tests. Nothing here calls into
// the library: permutations are plain image vectors, relations are column
// bitmasks, characters come from the Jacobi-Trudi determinant over
// permutation characters, and Kostka numbers from filling tableaux.

#ifndef FPLAB_TESTS_ORACLES_HPP_
#define FPLAB_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>
#include <utility>
#include <vector>

namespace oracle {

  using Perm = std::vector<int>;
  using Cols = std::vector<std::uint32_t>;  // bit x of column m: x in A_m
  using Part = std::vector<int>;            // weakly decreasing

  inline std::vector<Perm> all_perms(int n) {
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<Perm> out;
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }

  //! (a b)(m) = a(b(m)).
  inline Perm compose(Perm const& a, Perm const& b) {
    Perm c(b.size());
    for (std::size_t m = 0; m < b.size(); ++m) {
      c[m] = a[static_cast<std::size_t>(b[m])];
    }
    return c;
  }

  inline Perm inverse(Perm const& a) {
    Perm c(a.size());
    for (std::size_t m = 0; m < a.size(); ++m) {
      c[static_cast<std::size_t>(a[m])] = static_cast<int>(m);
    }
    return c;
  }

  inline Part cycle_type(Perm const& p) {
    std::vector<bool> seen(p.size());
    Part              out;
    for (std::size_t m = 0; m < p.size(); ++m) {
      if (seen[m]) {
        continue;
      }
      int len = 0;
      for (auto x = m; !seen[x]; x = static_cast<std::size_t>(p[x])) {
        seen[x] = true;
        ++len;
      }
      out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
  }

  inline Cols columns_of(std::vector<Perm> const& subset, int n) {
    Cols c(static_cast<std::size_t>(n), 0);
    for (auto const& g : subset) {
      for (std::size_t m = 0; m < g.size(); ++m) {
        c[m] |= 1U << g[m];
      }
    }
    return c;
  }

  //! Every class of a non-empty subset of G, by depth-first search over
  //! subsets. Sorted.
  inline std::vector<Cols> enumerate_fp(std::vector<Perm> const& G, int n) {
    std::set<Cols>                           seen;
    std::unordered_set<std::uint64_t>        packed;  // n <= 8 with 8-bit columns
    bool const                               pack = n <= 8;
    std::function<void(std::size_t, Cols&, bool)> dfs = [&](std::size_t i, Cols& c, bool any) {
      if (i == G.size()) {
        if (!any) {
          return;
        }
        if (pack) {
          std::uint64_t key = 0;
          for (std::size_t m = 0; m < c.size(); ++m) {
            key |= static_cast<std::uint64_t>(c[m]) << (8 * m);
          }
          packed.insert(key);
        } else {
          seen.insert(c);
        }
        return;
      }
      dfs(i + 1, c, any);
      Cols saved = c;
      for (std::size_t m = 0; m < c.size(); ++m) {
        c[m] |= 1U << G[i][m];
      }
      dfs(i + 1, c, true);
      c = saved;
    };
    Cols start(static_cast<std::size_t>(n), 0);
    dfs(0, start, false);
    for (auto key : packed) {
      Cols c(static_cast<std::size_t>(n));
      for (std::size_t m = 0; m < c.size(); ++m) {
        c[m] = static_cast<std::uint32_t>((key >> (8 * m)) & 0xFF);
      }
      seen.insert(c);
    }
    return {seen.begin(), seen.end()};
  }

  inline std::vector<Perm> saturate(std::vector<Perm> const& G, Cols const& c) {
    std::vector<Perm> out;
    for (auto const& g : G) {
      bool inside = true;
      for (std::size_t m = 0; m < g.size() && inside; ++m) {
        inside = (c[m] >> g[m]) & 1U;
      }
      if (inside) {
        out.push_back(g);
      }
    }
    return out;
  }

  //! Class of the subset product {x y : x in A, y in B} of saturations.
  inline Cols multiply(std::vector<Perm> const& G, Cols const& a, Cols const& b) {
    auto const        A = saturate(G, a);
    auto const        B = saturate(G, b);
    std::vector<Perm> prod;
    for (auto const& x : A) {
      for (auto const& y : B) {
        prod.push_back(compose(x, y));
      }
    }
    return columns_of(prod, static_cast<int>(a.size()));
  }

  //! Set partitions as restricted growth strings.
  inline std::vector<std::vector<int>> set_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int>              rgs(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int blocks) {
      if (i == n) {
        out.push_back(rgs);
        return;
      }
      for (int b = 0; b <= blocks; ++b) {
        rgs[static_cast<std::size_t>(i)] = b;
        rec(i + 1, std::max(blocks, b + 1));
      }
    };
    if (n == 0) {
      out.push_back({});
    } else {
      rec(0, 0);
    }
    return out;
  }

  inline Part block_shape(std::vector<int> const& rgs) {
    std::map<int, int> sizes;
    for (int b : rgs) {
      ++sizes[b];
    }
    Part out;
    for (auto [b, s] : sizes) {
      out.push_back(s);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
  }

  //! g maps every block of rgs onto a block.
  inline bool permutes_blocks(Perm const& g, std::vector<int> const& rgs) {
    for (std::size_t a = 0; a < g.size(); ++a) {
      for (std::size_t b = 0; b < g.size(); ++b) {
        if ((rgs[a] == rgs[b]) != (rgs[static_cast<std::size_t>(g[a])] == rgs[static_cast<std::size_t>(g[b])])) {
          return false;
        }
      }
    }
    return true;
  }

  inline std::vector<Part> partitions(int n) {
    std::vector<Part>             out;
    Part                          cur;
    std::function<void(int, int)> rec = [&](int left, int max) {
      if (left == 0) {
        out.push_back(cur);
        return;
      }
      for (int p = std::min(left, max); p >= 1; --p) {
        cur.push_back(p);
        rec(left - p, p);
        cur.pop_back();
      }
    };
    rec(n, n);
    return out;
  }

  inline long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) {
      f *= i;
    }
    return f;
  }

  //! Ways to put each cycle into one row so that row r receives exactly
  //! rows[r] points: the permutation character of a composition.
  inline long long fixed_rows(std::vector<int> rows, Part const& cycles, std::size_t i = 0) {
    if (i == cycles.size()) {
      return std::all_of(rows.begin(), rows.end(), [](int r) { return r == 0; }) ? 1 : 0;
    }
    long long total = 0;
    for (auto& r : rows) {
      if (r >= cycles[i]) {
        r -= cycles[i];
        total += fixed_rows(rows, cycles, i + 1);
        r += cycles[i];
      }
    }
    return total;
  }

  //! Irreducible character by the Jacobi-Trudi determinant.
  inline long long chi(Part const& lambda, Part const& nu) {
    int const ell = static_cast<int>(lambda.size());
    if (ell == 0) {
      return 1;
    }
    std::vector<int> w(static_cast<std::size_t>(ell));
    std::iota(w.begin(), w.end(), 0);
    long long total = 0;
    do {
      int inversions = 0;
      for (int a = 0; a < ell; ++a) {
        for (int b = a + 1; b < ell; ++b) {
          inversions += w[static_cast<std::size_t>(a)] > w[static_cast<std::size_t>(b)];
        }
      }
      std::vector<int> rows;
      bool             valid = true;
      for (int i = 0; i < ell && valid; ++i) {
        int r = lambda[static_cast<std::size_t>(i)] - i + w[static_cast<std::size_t>(i)];
        valid = r >= 0;
        rows.push_back(r);
      }
      if (valid) {
        total += (inversions % 2 ? -1 : 1) * fixed_rows(rows, nu);
      }
    } while (std::next_permutation(w.begin(), w.end()));
    return total;
  }

  inline long long dim(Part const& lambda) {
    int n = std::accumulate(lambda.begin(), lambda.end(), 0);
    return chi(lambda, Part(static_cast<std::size_t>(n), 1));
  }

  //! Semistandard tableaux of shape lambda and content mu, filled row by
  //! row, left to right.
  inline long long kostka(Part const& lambda, Part const& mu) {
    std::vector<std::vector<int>> t;
    for (int len : lambda) {
      t.emplace_back(static_cast<std::size_t>(len), 0);
    }
    std::vector<int>                      left(mu.begin(), mu.end());
    std::function<long long(std::size_t, std::size_t)> fill = [&](std::size_t r,
                                                                  std::size_t c) -> long long {
      if (r == t.size()) {
        return 1;
      }
      if (c == t[r].size()) {
        return fill(r + 1, 0);
      }
      long long total = 0;
      for (std::size_t v = 0; v < left.size(); ++v) {
        if (left[v] == 0) {
          continue;
        }
        int value = static_cast<int>(v) + 1;
        if (c > 0 && t[r][c - 1] > value) {
          continue;
        }
        if (r > 0 && t[r - 1][c] >= value) {
          continue;
        }
        t[r][c] = value;
        --left[v];
        total += fill(r, c + 1);
        ++left[v];
      }
      t[r][c] = 0;
      return total;
    };
    return fill(0, 0);
  }

  //! |F*_n| as the number of distinct pairs (rho, coset S_rho sigma), with
  //! the coset stored as a sorted list of permutations.
  inline std::size_t fstar_size(int n) {
    auto const                                             G = all_perms(n);
    std::set<std::pair<std::vector<int>, std::vector<Perm>>> seen;
    for (auto const& rgs : set_partitions(n)) {
      std::vector<Perm> young;
      for (auto const& y : G) {
        bool keeps = true;
        for (std::size_t m = 0; m < y.size() && keeps; ++m) {
          keeps = rgs[m] == rgs[static_cast<std::size_t>(y[m])];
        }
        if (keeps) {
          young.push_back(y);
        }
      }
      for (auto const& sigma : G) {
        std::vector<Perm> coset;
        for (auto const& y : young) {
          coset.push_back(compose(y, sigma));
        }
        std::sort(coset.begin(), coset.end());
        seen.emplace(rgs, std::move(coset));
      }
    }
    return seen.size();
  }

  //! Multiplicity of chi^lambda in the permutation character of S_n on set
  //! partitions of the given block shape.
  inline long long set_partition_multiplicity(Part const& lambda, Part const& shape) {
    int const  n = std::accumulate(shape.begin(), shape.end(), 0);
    auto const G = all_perms(n);
    std::vector<std::vector<int>> targets;
    for (auto const& rgs : set_partitions(n)) {
      if (block_shape(rgs) == shape) {
        targets.push_back(rgs);
      }
    }
    long long sum = 0;
    for (auto const& g : G) {
      long long fixed = 0;
      for (auto const& rgs : targets) {
        fixed += permutes_blocks(g, rgs);
      }
      sum += chi(lambda, cycle_type(g)) * fixed;
    }
    return sum / factorial(n);
  }

  //! Character of the block permutation induced by nu (which must permute
  //! the blocks of rgs): the product over block sizes i of chi^{labels[i]}
  //! at the cycle type of nu on the blocks of size i.
  inline long long block_label_character(Perm const&                 nu,
                                         std::vector<int> const&     rgs,
                                         std::map<int, Part> const& labels) {
    std::map<int, std::vector<int>> members;  // block id -> points
    for (std::size_t m = 0; m < rgs.size(); ++m) {
      members[rgs[m]].push_back(static_cast<int>(m));
    }
    long long value = 1;
    for (auto const& [size, label] : labels) {
      std::vector<int> blocks;
      for (auto const& [b, pts] : members) {
        if (static_cast<int>(pts.size()) == size) {
          blocks.push_back(b);
        }
      }
      Perm on_blocks(blocks.size());
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        int image = rgs[static_cast<std::size_t>(nu[static_cast<std::size_t>(members[blocks[i]].front())])];
        on_blocks[i] = static_cast<int>(std::find(blocks.begin(), blocks.end(), image) - blocks.begin());
      }
      if (!blocks.empty()) {
        value *= chi(label, cycle_type(on_blocks));
      }
    }
    return value;
  }

  //! Character at g of the module induced from the block-permuting
  //! subgroup N of rgs, with N acting through block_label_character.
  inline long long induced_character(Perm const&                 g,
                                     std::vector<int> const&     rgs,
                                     std::map<int, Part> const& labels) {
    auto const G     = all_perms(static_cast<int>(g.size()));
    long long  sum   = 0;
    long long  order = 0;
    for (auto const& x : G) {
      if (permutes_blocks(x, rgs)) {
        ++order;
      }
      auto conj = compose(inverse(x), compose(g, x));
      if (permutes_blocks(conj, rgs)) {
        sum += block_label_character(conj, rgs, labels);
      }
    }
    return sum / order;
  }

}  // namespace oracle

#endif  // FPLAB_TESTS_ORACLES_HPP_
