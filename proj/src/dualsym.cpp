// fplab - factorpower semigroups and their simple modules

#include "fplab/dualsym.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "fplab/errors.hpp"
#include "fplab/factorpower.hpp"
#include "fplab/symfunc.hpp"

namespace fplab {

  Permutation canonical_coset_rep(SetPartition const& rho,
                                  Permutation const&  sigma) {
    std::size_t const n = sigma.degree();
    if (rho.degree() != n) {
      throw ValidationError("partition and permutation degrees differ");
    }
    // x may go to any unused point in the block of sigma(x); the smallest
    // one gives the lexicographic minimum.
    std::vector<char>  used(n, 0);
    std::vector<Point> images(n);
    for (std::size_t x = 0; x < n; ++x) {
      auto const block = rho.block_of(sigma[x]);
      for (std::size_t y = 0; y < n; ++y) {
        if (!used[y] && rho.block_of(y) == block) {
          used[y]   = 1;
          images[x] = static_cast<Point>(y);
          break;
        }
      }
    }
    return Permutation(std::move(images));
  }

  FStarElement::FStarElement(SetPartition rho, Permutation const& sigma)
      : rho_(std::move(rho)), sigma_(canonical_coset_rep(rho_, sigma)) {}

  FStarElement FStarElement::identity(std::size_t n) {
    return FStarElement(SetPartition::discrete(n), Permutation::identity(n));
  }

  bool FStarElement::is_idempotent() const {
    return fstar_multiply(*this, *this) == *this;
  }

  std::string FStarElement::to_string() const {
    return rho_.to_string() + " | " + sigma_.to_one_line();
  }

  FStarElement fstar_multiply(FStarElement const& a, FStarElement const& b) {
    if (a.degree() != b.degree()) {
      throw ValidationError("multiplying elements of different degrees");
    }
    return FStarElement(a.rho().join(b.rho().image(a.sigma())),
                        a.sigma() * b.sigma());
  }

  namespace {
    void check_fstar_budget(std::size_t n, Limits const& limits) {
      if (n > limits.fstar_degree) {
        throw SizeLimitError("enumerating F*_" + std::to_string(n)
                             + " exceeds the cap of n = "
                             + std::to_string(limits.fstar_degree)
                             + " (budget \"fstar\")");
      }
    }

    std::vector<Permutation> all_permutations(std::size_t n) {
      std::vector<Point> p(n);
      std::iota(p.begin(), p.end(), Point{0});
      std::vector<Permutation> out;
      do {
        out.emplace_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      return out;
    }
  }  // namespace

  std::vector<FStarElement> fstar_enumerate(std::size_t n, Limits const& limits) {
    check_fstar_budget(n, limits);
    auto const                perms = all_permutations(n);
    std::vector<FStarElement> out;
    for (auto const& rho : SetPartition::all(n)) {
      for (auto const& sigma : perms) {
        if (canonical_coset_rep(rho, sigma) == sigma) {
          out.emplace_back(rho, sigma);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  BigInt fstar_count(std::size_t n, Limits const& limits) {
    check_fstar_budget(n, limits);
    auto const         perms      = all_permutations(n);
    auto const         partitions = SetPartition::all(n);
    auto const         size       = static_cast<std::int64_t>(partitions.size());
    unsigned long long total      = 0;
#pragma omp parallel for reduction(+ : total) schedule(dynamic)
    for (std::int64_t i = 0; i < size; ++i) {
      auto const& rho = partitions[static_cast<std::size_t>(i)];
      for (auto const& sigma : perms) {
        total += canonical_coset_rep(rho, sigma) == sigma;
      }
    }
    return BigInt(total);
  }

  std::vector<DualDClass> fstar_classes(std::size_t n) {
    if (n > 30) {
      throw ValidationError("the F*_n class formulas are limited to n <= 30");
    }
    std::vector<DualDClass> out;
    for (auto const& lambda : IntegerPartition::all(n)) {
      auto   k     = lambda.multiplicities();
      BigInt denom = 1;
      BigInt group = 1;
      for (std::size_t i = 1; i <= k.size(); ++i) {
        auto kf = factorial(k[i - 1]);
        denom *= kf;
        group *= kf;
        for (std::size_t j = 0; j < k[i - 1]; ++j) {
          denom *= factorial(i);
        }
      }
      out.push_back({lambda, factorial(n) / denom, group});
    }
    return out;
  }

  namespace {
    // Brute force Green structure of a finite monoid given by its sorted
    // element list.
    struct FStarTable {
      std::vector<FStarElement>            elements;
      std::map<FStarElement, std::size_t> index;

      explicit FStarTable(std::vector<FStarElement> elts)
          : elements(std::move(elts)) {
        for (std::size_t i = 0; i < elements.size(); ++i) {
          index.emplace(elements[i], i);
        }
      }

      std::size_t product(std::size_t a, std::size_t b) const {
        return index.at(fstar_multiply(elements[a], elements[b]));
      }

      std::set<std::size_t> right_ideal(std::size_t a) const {
        std::set<std::size_t> out;
        for (std::size_t s = 0; s < elements.size(); ++s) {
          out.insert(product(a, s));
        }
        return out;
      }

      std::set<std::size_t> left_ideal(std::size_t a) const {
        std::set<std::size_t> out;
        for (std::size_t s = 0; s < elements.size(); ++s) {
          out.insert(product(s, a));
        }
        return out;
      }

      // H-class of e, with e first.
      std::vector<std::size_t> h_class(std::size_t e) const {
        auto const               re = right_ideal(e);
        auto const               le = left_ideal(e);
        std::vector<std::size_t> out{e};
        for (auto a : re) {
          if (a == e || le.count(a) == 0) {
            continue;
          }
          if (right_ideal(a).count(e) != 0 && left_ideal(a).count(e) != 0) {
            out.push_back(a);
          }
        }
        return out;
      }

      GroupTable group_table(std::vector<std::size_t> const& members) const {
        std::map<std::size_t, std::size_t> pos;
        for (std::size_t i = 0; i < members.size(); ++i) {
          pos.emplace(members[i], i);
        }
        GroupTable t;
        t.table.assign(members.size(), std::vector<std::size_t>(members.size()));
        for (std::size_t i = 0; i < members.size(); ++i) {
          for (std::size_t j = 0; j < members.size(); ++j) {
            auto it = pos.find(product(members[i], members[j]));
            if (it == pos.end()) {
              throw InconsistencyError("H-class of an idempotent is not closed");
            }
            t.table[i][j] = it->second;
          }
        }
        return t;
      }
    };

    // First idempotent (in element order) of each shape.
    std::map<IntegerPartition, std::pair<std::size_t, std::size_t>>
    idempotents_by_shape(FStarTable const& t) {
      std::map<IntegerPartition, std::pair<std::size_t, std::size_t>> out;
      for (std::size_t i = 0; i < t.elements.size(); ++i) {
        if (!t.elements[i].is_idempotent()) {
          continue;
        }
        auto [it, inserted] = out.emplace(t.elements[i].rho().shape(),
                                          std::make_pair(i, std::size_t{0}));
        ++it->second.second;
      }
      return out;
    }
  }  // namespace

  FStarStructure fstar_structure(std::size_t   n,
                                 std::size_t   brute_force_degree,
                                 Limits const& limits) {
    FStarStructure s;
    s.n                    = n;
    s.classes              = fstar_classes(n);
    s.semisimple_dimension = 0;
    for (auto const& c : s.classes) {
      s.semisimple_dimension += c.count_idempotents * c.count_idempotents * c.group_order;
    }
    if (n > brute_force_degree || n > limits.fstar_degree) {
      return s;
    }
    FStarTable t(fstar_enumerate(n, limits));
    s.brute_forced        = true;
    s.brute_element_count = t.elements.size();
    auto const by_shape   = idempotents_by_shape(t);
    for (auto const& c : s.classes) {
      auto it = by_shape.find(c.shape);
      if (it == by_shape.end()) {
        s.brute_idempotents.push_back(0);
        s.brute_group_orders.push_back(0);
        s.ok = false;
        continue;
      }
      auto [e, count] = it->second;
      auto h          = t.h_class(e);
      s.brute_idempotents.push_back(count);
      s.brute_group_orders.push_back(h.size());
      s.ok = s.ok && BigInt(count) == c.count_idempotents
             && BigInt(h.size()) == c.group_order;
    }
    // Every idempotent is (rho, id).
    for (auto const& x : t.elements) {
      if (x.is_idempotent() && !x.sigma().is_identity()) {
        s.ok = false;
      }
    }
    s.ok = s.ok && BigInt(t.elements.size()) == s.semisimple_dimension;
    return s;
  }

  CorrespondenceReport correspondence_check(std::size_t n, Limits const& limits) {
    if (n > limits.correspond_degree) {
      throw SizeLimitError("correspondence check for n = " + std::to_string(n)
                           + " exceeds the cap of "
                           + std::to_string(limits.correspond_degree)
                           + " (budget \"correspond\")");
    }
    CorrespondenceReport r;
    r.n  = n;
    r.ok = true;
    auto const fp = dclasses(symmetric_group(n, limits));
    FStarTable t(fstar_enumerate(n, limits));
    auto const by_shape = idempotents_by_shape(t);

    for (auto const& D : fp) {
      CorrespondenceRow row;
      row.shape          = D.shape;
      row.fp_idempotents = D.k();
      row.fp_group_order = D.maximal_subgroup.order();
      auto it            = by_shape.find(D.shape);
      if (it != by_shape.end()) {
        auto [e, count]       = it->second;
        auto h                = t.h_class(e);
        row.fstar_idempotents = count;
        row.fstar_group_order = h.size();
        row.isomorphic = are_isomorphic(D.maximal_subgroup, t.group_table(h));
      }
      for (auto const& l : MultiPartition::all(D.shape.multiplicities())) {
        row.simple_dims.push_back(D.k() * l.dim().convert_to<std::size_t>());
      }
      std::sort(row.simple_dims.begin(), row.simple_dims.end());
      row.ok = row.fp_idempotents == row.fstar_idempotents
               && row.fp_group_order == row.fstar_group_order && row.isomorphic;
      r.ok = r.ok && row.ok;
      r.rows.push_back(std::move(row));
    }
    r.ok = r.ok && fp.size() == by_shape.size();
    return r;
  }

}  // namespace fplab
