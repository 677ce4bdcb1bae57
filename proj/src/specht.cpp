// fplab - factorpower semigroups and their simple modules
//
// Young's natural representation. A tabloid is packed into 64 bits with
// four bits per value holding the row of that value, so n <= 16.

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "fplab/errors.hpp"
#include "fplab/symfunc.hpp"

namespace fplab {

  namespace {

    struct ColumnTerm {
      std::vector<std::uint8_t> row_of_cell;
      int                       sign = 1;
    };

    struct ShapeData {
      IntegerPartition shape;
      // cells in row-major order: (row, column)
      std::vector<std::pair<std::size_t, std::size_t>> cells;
      // standard tableaux as the value (0-based) in each cell
      std::vector<std::vector<std::size_t>> tableaux;
      std::vector<ColumnTerm>               terms;
      std::unordered_map<std::uint64_t, std::size_t> standard_index;
      IntMatrix                                      a_inverse;
    };

    std::uint64_t tabloid_of(std::vector<std::size_t> const& values,
                             ColumnTerm const&               term) {
      std::uint64_t key = 0;
      for (std::size_t c = 0; c < values.size(); ++c) {
        key |= std::uint64_t{term.row_of_cell[c]} << (4 * values[c]);
      }
      return key;
    }

    // Coefficients of the standard tabloids in the polytabloid of a
    // tableau given by its cell values.
    std::vector<std::int64_t> standard_coefficients(ShapeData const&                d,
                                                    std::vector<std::size_t> const& values) {
      std::vector<std::int64_t> b(d.tableaux.size(), 0);
      for (auto const& term : d.terms) {
        auto it = d.standard_index.find(tabloid_of(values, term));
        if (it != d.standard_index.end()) {
          b[it->second] += term.sign;
        }
      }
      return b;
    }

    std::unique_ptr<ShapeData> build_shape(IntegerPartition const& shape) {
      auto d   = std::make_unique<ShapeData>();
      d->shape = shape;
      std::size_t const n = shape.size();
      for (std::size_t i = 0; i < shape.length(); ++i) {
        for (std::size_t j = 0; j < shape[i]; ++j) {
          d->cells.emplace_back(i, j);
        }
      }
      std::vector<std::size_t> row_start(shape.length(), 0);
      for (std::size_t i = 1; i < shape.length(); ++i) {
        row_start[i] = row_start[i - 1] + shape[i - 1];
      }

      // Standard tableaux by depth first search on the row of each value,
      // trying rows in increasing order: lexicographic in the row word.
      std::vector<std::size_t> filled(shape.length(), 0);
      std::vector<std::size_t> values(n);
      std::function<void(std::size_t)> place = [&](std::size_t v) {
        if (v == n) {
          d->tableaux.push_back(values);
          return;
        }
        for (std::size_t i = 0; i < shape.length(); ++i) {
          if (filled[i] < shape[i] && (i == 0 || filled[i - 1] > filled[i])) {
            values[row_start[i] + filled[i]] = v;
            ++filled[i];
            place(v + 1);
            --filled[i];
          }
        }
      };
      place(0);

      // Column group: all products of permutations of the columns.
      auto const conj = shape.conjugate();
      std::vector<std::vector<std::vector<std::uint8_t>>> column_perms(conj.length());
      std::vector<std::vector<int>>                       column_signs(conj.length());
      for (std::size_t j = 0; j < conj.length(); ++j) {
        std::vector<std::uint8_t> p(conj[j]);
        std::iota(p.begin(), p.end(), std::uint8_t{0});
        do {
          int sign = 1;
          for (std::size_t a = 0; a < p.size(); ++a) {
            for (std::size_t b = a + 1; b < p.size(); ++b) {
              if (p[a] > p[b]) {
                sign = -sign;
              }
            }
          }
          column_perms[j].push_back(p);
          column_signs[j].push_back(sign);
        } while (std::next_permutation(p.begin(), p.end()));
      }
      std::vector<std::size_t> choice(conj.length(), 0);
      while (true) {
        ColumnTerm term;
        term.row_of_cell.resize(n);
        for (std::size_t c = 0; c < n; ++c) {
          auto [i, j]         = d->cells[c];
          term.row_of_cell[c] = column_perms[j][choice[j]][i];
        }
        for (std::size_t j = 0; j < conj.length(); ++j) {
          term.sign *= column_signs[j][choice[j]];
        }
        d->terms.push_back(std::move(term));
        std::size_t j = 0;
        for (; j < conj.length(); ++j) {
          if (++choice[j] < column_perms[j].size()) {
            break;
          }
          choice[j] = 0;
        }
        if (j == conj.length()) {
          break;
        }
      }

      ColumnTerm identity_term;
      for (auto [i, j] : d->cells) {
        identity_term.row_of_cell.push_back(static_cast<std::uint8_t>(i));
      }
      for (std::size_t s = 0; s < d->tableaux.size(); ++s) {
        d->standard_index.emplace(tabloid_of(d->tableaux[s], identity_term), s);
      }

      std::size_t const f = d->tableaux.size();
      QMatrix           a(f, f);
      for (std::size_t s = 0; s < f; ++s) {
        auto b = standard_coefficients(*d, d->tableaux[s]);
        for (std::size_t j = 0; j < f; ++j) {
          a(j, s) = Rational(b[j]);
        }
      }
      auto const inv = inverse(a);
      d->a_inverse   = IntMatrix(f, f);
      for (std::size_t i = 0; i < f; ++i) {
        for (std::size_t j = 0; j < f; ++j) {
          auto const& x = inv(i, j);
          if (denominator(x) != 1) {
            throw InconsistencyError("standard tabloid matrix is not unimodular");
          }
          d->a_inverse(i, j) = static_cast<std::int64_t>(numerator(x));
        }
      }
      return d;
    }

    ShapeData const& shape_data(IntegerPartition const& shape) {
      static std::mutex                                               mutex;
      static std::map<IntegerPartition, std::unique_ptr<ShapeData>> cache;
      std::lock_guard lock(mutex);
      auto&           slot = cache[shape];
      if (!slot) {
        slot = build_shape(shape);
      }
      return *slot;
    }

    void check_budget(IntegerPartition const& shape, Limits const& limits) {
      if (shape.size() > limits.specht_degree || shape.size() > 16) {
        throw SizeLimitError("explicit Specht matrices for n = "
                             + std::to_string(shape.size())
                             + " exceed the cap of "
                             + std::to_string(std::min<std::size_t>(limits.specht_degree, 16))
                             + " (budget \"specht\")");
      }
    }

  }  // namespace

  IntMatrix specht_matrix(IntegerPartition const& shape,
                          Permutation const&      pi,
                          Limits const&           limits) {
    check_budget(shape, limits);
    if (pi.degree() != shape.size()) {
      throw ValidationError("permutation degree does not match the shape");
    }
    static std::mutex                                                   mutex;
    static std::map<std::pair<IntegerPartition, Permutation>, IntMatrix> cache;
    auto key = std::make_pair(shape, pi);
    {
      std::lock_guard lock(mutex);
      if (auto it = cache.find(key); it != cache.end()) {
        return it->second;
      }
    }
    auto const&       d = shape_data(shape);
    std::size_t const f = d.tableaux.size();
    IntMatrix         b(f, f);
    for (std::size_t s = 0; s < f; ++s) {
      std::vector<std::size_t> values(d.tableaux[s].size());
      for (std::size_t c = 0; c < values.size(); ++c) {
        values[c] = pi[d.tableaux[s][c]];
      }
      auto coeff = standard_coefficients(d, values);
      for (std::size_t j = 0; j < f; ++j) {
        b(j, s) = coeff[j];
      }
    }
    IntMatrix out = d.a_inverse * b;
    std::lock_guard lock(mutex);
    cache.emplace(std::move(key), out);
    return out;
  }

  SpechtRep specht_matrices(IntegerPartition const& shape, Limits const& limits) {
    check_budget(shape, limits);
    SpechtRep rep;
    rep.shape         = shape;
    std::size_t const n = shape.size();
    rep.dim           = shape_data(shape).tableaux.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      std::vector<Point> images(n);
      std::iota(images.begin(), images.end(), Point{0});
      std::swap(images[i], images[i + 1]);
      rep.generators.push_back(specht_matrix(shape, Permutation(images), limits));
    }
    return rep;
  }

}  // namespace fplab
