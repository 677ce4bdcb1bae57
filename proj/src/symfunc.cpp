// fplab - factorpower semigroups and their simple modules

#include "fplab/symfunc.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "fplab/errors.hpp"
#include "fplab/kernels.hpp"

namespace fplab {

  BigInt factorial(std::size_t n) {
    BigInt f = 1;
    for (std::size_t i = 2; i <= n; ++i) {
      f *= i;
    }
    return f;
  }

  BigInt centralizer_order(IntegerPartition const& mu) {
    BigInt z    = 1;
    auto   mult = mu.multiplicities();
    for (std::size_t i = 1; i <= mult.size(); ++i) {
      for (std::size_t j = 0; j < mult[i - 1]; ++j) {
        z *= i;
      }
      z *= factorial(mult[i - 1]);
    }
    return z;
  }

  ////////////////////////////////////////////////////////////////////////
  // Murnaghan-Nakayama
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using Beta = std::vector<std::size_t>;  // strictly decreasing

    Beta beta_set(IntegerPartition const& shape) {
      Beta        b(shape.length());
      std::size_t len = shape.length();
      for (std::size_t i = 0; i < len; ++i) {
        b[i] = shape[i] + (len - 1 - i);
      }
      return b;
    }

    // Removes the parts of `cycles` from position `next` on. The beta set
    // keeps its length; a zero entry at the bottom stands for an empty row.
    BigInt mn_recursive(Beta const&                     beta,
                        std::vector<std::size_t> const& cycles,
                        std::size_t                     next,
                        std::map<std::pair<Beta, std::size_t>, BigInt>& memo) {
      if (next == cycles.size()) {
        return 1;
      }
      auto key = std::make_pair(beta, next);
      if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
      }
      std::size_t const r = cycles[next];
      BigInt            total = 0;
      for (std::size_t i = 0; i < beta.size(); ++i) {
        if (beta[i] < r) {
          continue;
        }
        std::size_t const target = beta[i] - r;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) {
          continue;
        }
        std::size_t between = 0;
        for (auto x : beta) {
          between += x > target && x < beta[i];
        }
        Beta nb = beta;
        nb[i]   = target;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        BigInt v = mn_recursive(nb, cycles, next + 1, memo);
        if (between % 2 == 1) {
          total -= v;
        } else {
          total += v;
        }
      }
      memo.emplace(std::move(key), total);
      return total;
    }
  }  // namespace

  BigInt mn_character(IntegerPartition const& shape,
                      IntegerPartition const& cycle_type) {
    if (shape.size() != cycle_type.size()) {
      throw ValidationError("character of " + shape.to_string()
                            + " evaluated on cycle type "
                            + cycle_type.to_string() + " of a different size");
    }
    thread_local std::map<std::pair<Beta, std::vector<std::size_t>>, BigInt>
                  cache;
    auto const    beta = beta_set(shape);
    auto          key  = std::make_pair(beta, cycle_type.parts());
    if (auto it = cache.find(key); it != cache.end()) {
      return it->second;
    }
    std::map<std::pair<Beta, std::size_t>, BigInt> memo;
    auto value = mn_recursive(beta, cycle_type.parts(), 0, memo);
    cache.emplace(std::move(key), value);
    return value;
  }

  ////////////////////////////////////////////////////////////////////////
  // Kostka numbers and dimensions
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Removes horizontal strips of sizes mu[count-1], mu[count-2], ...
    BigInt kostka_recursive(std::vector<std::size_t> const& lambda,
                            std::vector<std::size_t> const& mu,
                            std::size_t                     count,
                            std::map<std::pair<std::vector<std::size_t>, std::size_t>, BigInt>& memo) {
      if (count == 0) {
        return std::all_of(lambda.begin(), lambda.end(),
                           [](auto x) { return x == 0; })
                   ? 1
                   : 0;
      }
      auto key = std::make_pair(lambda, count);
      if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
      }
      std::size_t const strip = mu[count - 1];
      BigInt            total = 0;
      std::vector<std::size_t> nu(lambda.size());
      // Choose nu_i in [lambda_{i+1}, lambda_i] with sum(lambda - nu) = strip.
      std::function<void(std::size_t, std::size_t)> choose
          = [&](std::size_t i, std::size_t left) {
              if (i == lambda.size()) {
                if (left == 0) {
                  total += kostka_recursive(nu, mu, count - 1, memo);
                }
                return;
              }
              std::size_t const lo = i + 1 < lambda.size() ? lambda[i + 1] : 0;
              for (std::size_t v = lambda[i]; v + 1 > lo; --v) {
                std::size_t const take = lambda[i] - v;
                if (take > left) {
                  break;
                }
                nu[i] = v;
                choose(i + 1, left - take);
                if (v == 0) {
                  break;
                }
              }
            };
      choose(0, strip);
      memo.emplace(std::move(key), total);
      return total;
    }
  }  // namespace

  BigInt kostka(IntegerPartition const& lambda, IntegerPartition const& mu) {
    if (lambda.size() != mu.size()) {
      throw ValidationError("Kostka number of partitions of different sizes");
    }
    std::map<std::pair<std::vector<std::size_t>, std::size_t>, BigInt> memo;
    return kostka_recursive(lambda.parts(), mu.parts(), mu.length(), memo);
  }

  BigInt specht_dim(IntegerPartition const& shape) {
    auto   conj = shape.conjugate();
    BigInt hooks = 1;
    for (std::size_t i = 0; i < shape.length(); ++i) {
      for (std::size_t j = 0; j < shape[i]; ++j) {
        hooks *= (shape[i] - j - 1) + (conj[j] - i - 1) + 1;
      }
    }
    return factorial(shape.size()) / hooks;
  }

  ////////////////////////////////////////////////////////////////////////
  // MultiPartition
  ////////////////////////////////////////////////////////////////////////

  MultiPartition::MultiPartition(std::vector<IntegerPartition> components)
      : components_(std::move(components)) {}

  MultiPartition MultiPartition::trivial(std::vector<std::size_t> const& k) {
    std::vector<IntegerPartition> c;
    for (auto ki : k) {
      c.emplace_back(std::vector<std::size_t>{ki});
    }
    return MultiPartition(std::move(c));
  }

  MultiPartition MultiPartition::parse(std::string_view                text,
                                       std::vector<std::size_t> const& k) {
    auto out = trivial(k);
    if (text.empty() || text == "triv") {
      return out;
    }
    while (!text.empty()) {
      auto semi  = text.find(';');
      auto piece = text.substr(0, semi);
      text.remove_prefix(semi == std::string_view::npos ? text.size() : semi + 1);
      auto eq = piece.find('=');
      if (eq == std::string_view::npos) {
        throw ValidationError("label component \"" + std::string(piece)
                              + "\" must look like size=partition");
      }
      std::size_t size = 0;
      for (char c : piece.substr(0, eq)) {
        if (c < '0' || c > '9') {
          throw ValidationError("bad block size in label \"" + std::string(piece)
                                + "\"");
        }
        size = size * 10 + static_cast<std::size_t>(c - '0');
      }
      if (size == 0 || size > k.size() || k[size - 1] == 0) {
        throw ValidationError("label names block size "
                              + std::to_string(size)
                              + " but the partition has no such blocks");
      }
      auto l = IntegerPartition::parse(piece.substr(eq + 1));
      if (l.size() != k[size - 1]) {
        throw ValidationError("label component for size "
                              + std::to_string(size) + " must partition "
                              + std::to_string(k[size - 1]));
      }
      out.components_[size - 1] = std::move(l);
    }
    return out;
  }

  std::vector<MultiPartition>
  MultiPartition::all(std::vector<std::size_t> const& k) {
    std::vector<std::vector<IntegerPartition>> choices;
    for (auto ki : k) {
      choices.push_back(IntegerPartition::all(ki));
    }
    std::vector<MultiPartition> out;
    std::vector<std::size_t>    idx(k.size(), 0);
    while (true) {
      std::vector<IntegerPartition> c;
      for (std::size_t i = 0; i < k.size(); ++i) {
        c.push_back(choices[i][idx[i]]);
      }
      out.emplace_back(std::move(c));
      std::size_t i = k.size();
      while (i > 0) {
        --i;
        if (++idx[i] < choices[i].size()) {
          break;
        }
        idx[i] = 0;
        if (i == 0) {
          return out;
        }
      }
      if (k.empty()) {
        return out;
      }
    }
  }

  std::vector<std::size_t> MultiPartition::sizes() const {
    std::vector<std::size_t> s;
    for (auto const& c : components_) {
      s.push_back(c.size());
    }
    return s;
  }

  BigInt MultiPartition::dim() const {
    BigInt d = 1;
    for (auto const& c : components_) {
      d *= specht_dim(c);
    }
    return d;
  }

  std::string MultiPartition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < components_.size(); ++i) {
      if (components_[i].size() == 0) {
        continue;
      }
      if (!s.empty()) {
        s += ';';
      }
      s += std::to_string(i + 1) + "=" + components_[i].to_string();
    }
    return s.empty() ? "0" : s;
  }

  ////////////////////////////////////////////////////////////////////////
  // Induced modules
  ////////////////////////////////////////////////////////////////////////

  BigInt block_group_order(IntegerPartition const& shape) {
    auto   k     = shape.multiplicities();
    BigInt order = 1;
    for (std::size_t i = 1; i <= k.size(); ++i) {
      order *= factorial(k[i - 1]);
      for (std::size_t j = 0; j < k[i - 1]; ++j) {
        order *= factorial(i);
      }
    }
    return order;
  }

  namespace {
    void check_block_budget(IntegerPartition const& shape, Limits const& limits) {
      auto order = block_group_order(shape);
      if (order > limits.normalizer_order) {
        throw SizeLimitError("the block-permuting group of shape "
                             + shape.to_string() + " has order "
                             + order.str() + ", above the cap of "
                             + std::to_string(limits.normalizer_order)
                             + " (budget \"normalizer\")");
      }
    }

    kernels::ClassCounts const& cached_counts(IntegerPartition const& shape) {
      static std::mutex                                      mutex;
      static std::map<IntegerPartition, kernels::ClassCounts> cache;
      {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(shape); it != cache.end()) {
          return it->second;
        }
      }
      auto counts = kernels::block_class_counts_parallel(shape);
      std::lock_guard lock(mutex);
      return cache.emplace(shape, std::move(counts)).first->second;
    }

    InducedTable frobenius(IntegerPartition const&     shape,
                           kernels::ClassCounts const& counts) {
      InducedTable t;
      t.shape   = shape;
      auto k    = shape.multiplicities();
      t.lambdas = IntegerPartition::all(shape.size());
      t.labels  = MultiPartition::all(k);

      std::vector<std::size_t> sizes;  // block sizes present, descending
      for (std::size_t i = k.size(); i >= 1; --i) {
        if (k[i - 1] != 0) {
          sizes.push_back(i);
        }
      }
      BigInt order = 0;
      for (auto const& [key, c] : counts) {
        order += c;
      }

      // chi^l on each class key, then the Frobenius sum per lambda.
      std::vector<std::vector<BigInt>> label_values(t.labels.size());
      for (std::size_t b = 0; b < t.labels.size(); ++b) {
        for (auto const& [key, c] : counts) {
          BigInt v = c;
          for (std::size_t j = 0; j < sizes.size(); ++j) {
            v *= mn_character(t.labels[b][sizes[j] - 1], key[j + 1]);
          }
          label_values[b].push_back(std::move(v));
        }
      }
      t.mult.assign(t.lambdas.size(), std::vector<BigInt>(t.labels.size()));
      for (std::size_t a = 0; a < t.lambdas.size(); ++a) {
        std::vector<BigInt> chi;
        for (auto const& [key, c] : counts) {
          chi.push_back(mn_character(t.lambdas[a], key[0]));
        }
        for (std::size_t b = 0; b < t.labels.size(); ++b) {
          BigInt sum = 0;
          for (std::size_t q = 0; q < chi.size(); ++q) {
            sum += chi[q] * label_values[b][q];
          }
          if (sum % order != 0 || sum < 0) {
            throw InconsistencyError("Frobenius sum for " + t.lambdas[a].to_string()
                                     + " is not a non-negative multiple of |N|");
          }
          t.mult[a][b] = sum / order;
        }
      }
      return t;
    }
  }  // namespace

  InducedTable induced_table(IntegerPartition const& shape, Limits const& limits) {
    check_block_budget(shape, limits);
    return frobenius(shape, cached_counts(shape));
  }

  InducedTable induced_table_serial(IntegerPartition const& shape,
                                    Limits const&           limits) {
    check_block_budget(shape, limits);
    return frobenius(shape, kernels::block_class_counts_serial(shape));
  }

  BigInt induced_multiplicity(IntegerPartition const& lambda,
                              SetPartition const&     rho,
                              MultiPartition const&   l,
                              Limits const&           limits) {
    auto const shape = rho.shape();
    if (lambda.size() != shape.size()) {
      throw ValidationError("lambda partitions " + std::to_string(lambda.size())
                            + " but rho has " + std::to_string(shape.size())
                            + " points");
    }
    if (l.sizes() != shape.multiplicities()) {
      throw ValidationError("label " + l.to_string()
                            + " does not match the block sizes of "
                            + rho.to_string());
    }
    auto t = induced_table(shape, limits);
    auto a = std::find(t.lambdas.begin(), t.lambdas.end(), lambda) - t.lambdas.begin();
    auto b = std::find(t.labels.begin(), t.labels.end(), l) - t.labels.begin();
    return t.mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }

  FoulkesReport foulkes_check(std::size_t k, std::size_t m, Limits const& limits) {
    if (k == 0 || k >= m) {
      throw ValidationError("foulkes_check needs 0 < k < m");
    }
    std::size_t const n = k * m;
    if (n > limits.foulkes_degree) {
      throw SizeLimitError("n = k*m = " + std::to_string(n)
                           + " exceeds the cap of "
                           + std::to_string(limits.foulkes_degree)
                           + " (budget \"foulkes\")");
    }
    IntegerPartition const km(std::vector<std::size_t>(k, m));
    IntegerPartition const mk(std::vector<std::size_t>(m, k));
    auto const             t1 = induced_table(km, limits);
    auto const             t2 = induced_table(mk, limits);
    auto const             l1 = MultiPartition::trivial(km.multiplicities());
    auto const             l2 = MultiPartition::trivial(mk.multiplicities());
    auto const b1 = static_cast<std::size_t>(
        std::find(t1.labels.begin(), t1.labels.end(), l1) - t1.labels.begin());
    auto const b2 = static_cast<std::size_t>(
        std::find(t2.labels.begin(), t2.labels.end(), l2) - t2.labels.begin());

    FoulkesReport r;
    r.k  = k;
    r.m  = m;
    r.ok = true;
    for (std::size_t a = 0; a < t1.lambdas.size(); ++a) {
      FoulkesRow row;
      row.lambda  = t1.lambdas[a];
      row.mult_km = t1.mult[a][b1];
      row.mult_mk = t2.mult[a][b2];
      row.ok      = row.mult_km <= row.mult_mk;
      r.ok        = r.ok && row.ok;
      r.rows.push_back(std::move(row));
    }
    return r;
  }

}  // namespace fplab
