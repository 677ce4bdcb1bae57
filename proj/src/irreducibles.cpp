// fplab - factorpower semigroups and their simple modules

#include "fplab/irreducibles.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fplab/errors.hpp"

namespace fplab {

  namespace {

    using Eigen::MatrixXcd;

    // Clusters of a sorted spectrum, as [begin, end) index ranges.
    std::vector<std::pair<Eigen::Index, Eigen::Index>>
    clusters(Eigen::VectorXd const& ev) {
      double const scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
      double const gap   = 1e-6 * scale;
      std::vector<std::pair<Eigen::Index, Eigen::Index>> out;
      Eigen::Index                                       start = 0;
      for (Eigen::Index i = 1; i <= ev.size(); ++i) {
        if (i == ev.size() || ev[i] - ev[i - 1] > gap) {
          out.emplace_back(start, i);
          start = i;
        }
      }
      return out;
    }

    std::vector<std::vector<std::size_t>> table_classes(GroupTable const& t) {
      std::size_t const                     g = t.order();
      std::vector<bool>                     seen(g, false);
      std::vector<std::vector<std::size_t>> out;
      std::vector<std::size_t>              inv(g);
      for (std::size_t a = 0; a < g; ++a) {
        inv[a] = t.inverse(a);
      }
      for (std::size_t a = 0; a < g; ++a) {
        if (seen[a]) {
          continue;
        }
        std::vector<std::size_t> cls;
        for (std::size_t x = 0; x < g; ++x) {
          auto c = t.multiply(t.multiply(x, a), inv[x]);
          if (!seen[c]) {
            seen[c] = true;
            cls.push_back(c);
          }
        }
        out.push_back(std::move(cls));
      }
      return out;
    }

    std::optional<std::vector<GroupIrreducible>>
    attempt(GroupTable const& t, std::mt19937_64& rng) {
      std::size_t const g = t.order();
      auto const        n = static_cast<Eigen::Index>(g);
      std::normal_distribution<double> normal;
      auto random_complex = [&] { return Complex(normal(rng), normal(rng)); };

      // left regular: e_b -> e_{ab}; right: e_b -> e_{ba}
      auto left = [&](std::size_t a) {
        MatrixXcd m = MatrixXcd::Zero(n, n);
        for (std::size_t b = 0; b < g; ++b) {
          m(static_cast<Eigen::Index>(t.multiply(a, b)), static_cast<Eigen::Index>(b)) = 1.0;
        }
        return m;
      };
      auto right = [&](std::size_t a) {
        MatrixXcd m = MatrixXcd::Zero(n, n);
        for (std::size_t b = 0; b < g; ++b) {
          m(static_cast<Eigen::Index>(t.multiply(b, a)), static_cast<Eigen::Index>(b)) = 1.0;
        }
        return m;
      };

      auto const classes = table_classes(t);
      MatrixXcd  z       = MatrixXcd::Zero(n, n);
      for (auto const& cls : classes) {
        MatrixXcd sum = MatrixXcd::Zero(n, n);
        for (auto a : cls) {
          sum += left(a);
        }
        Complex const c = random_complex();
        z += c * sum + std::conj(c) * sum.adjoint();
      }
      Eigen::SelfAdjointEigenSolver<MatrixXcd> central(z);
      auto const blocks = clusters(central.eigenvalues());
      if (blocks.size() != classes.size()) {
        return std::nullopt;
      }

      MatrixXcd y = MatrixXcd::Zero(n, n);
      for (std::size_t a = 0; a < g; ++a) {
        MatrixXcd     r = right(a);
        Complex const c = random_complex();
        y += c * r + std::conj(c) * r.adjoint();
      }

      std::vector<MatrixXcd> lefts;
      for (std::size_t a = 0; a < g; ++a) {
        lefts.push_back(left(a));
      }

      std::vector<GroupIrreducible> out;
      for (auto [begin, end] : blocks) {
        auto const size = static_cast<std::size_t>(end - begin);
        auto const d    = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(size))));
        if (d * d != size) {
          return std::nullopt;
        }
        MatrixXcd q  = central.eigenvectors().middleCols(begin, end - begin);
        MatrixXcd yw = q.adjoint() * y * q;
        Eigen::SelfAdjointEigenSolver<MatrixXcd> split(yw);
        auto const parts = clusters(split.eigenvalues());
        for (auto [pb, pe] : parts) {
          if (static_cast<std::size_t>(pe - pb) != d) {
            return std::nullopt;
          }
        }
        MatrixXcd basis = q * split.eigenvectors().leftCols(static_cast<Eigen::Index>(d));

        GroupIrreducible irr;
        irr.dim = d;
        for (std::size_t a = 0; a < g; ++a) {
          MatrixXcd m = basis.adjoint() * lefts[a] * basis;
          irr.matrices.push_back(from_eigen(m));
          irr.character.push_back(m.trace());
        }
        out.push_back(std::move(irr));
      }
      return out;
    }

    std::vector<std::pair<long long, long long>> rounded(std::vector<Complex> const& chi) {
      std::vector<std::pair<long long, long long>> out;
      for (auto c : chi) {
        out.emplace_back(std::llround(c.real() * 1e6), std::llround(c.imag() * 1e6));
      }
      return out;
    }

  }  // namespace

  std::vector<GroupIrreducible> numeric_irreducibles(GroupTable const& table,
                                                     std::uint64_t     seed) {
    std::mt19937_64 rng(seed);
    for (int tries = 0; tries < 8; ++tries) {
      auto result = attempt(table, rng);
      if (!result) {
        continue;
      }
      std::stable_sort(result->begin(), result->end(), [](auto const& a, auto const& b) {
        if (a.dim != b.dim) {
          return a.dim < b.dim;
        }
        return rounded(a.character) > rounded(b.character);
      });
      return std::move(*result);
    }
    throw NumericalError("could not split the regular representation of a group of order "
                         + std::to_string(table.order()));
  }

}  // namespace fplab
