// fplab - factorpower semigroups and their simple modules

#include "fplab/verify.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fplab/dualsym.hpp"
#include "fplab/errors.hpp"
#include "fplab/factorpower.hpp"
#include "fplab/kernels.hpp"
#include "fplab/permgroup.hpp"
#include "fplab/repcore.hpp"
#include "fplab/symfunc.hpp"

namespace fplab {
  namespace {

    template <typename... Args>
    bool fail(std::string& detail, Args const&... parts) {
      std::ostringstream os;
      (os << ... << parts);
      detail = os.str();
      return false;
    }

    FpElement identity_element(std::size_t n) {
      return FpElement::from_permutation(Permutation::identity(n));
    }

    //! A permutation whose cycles have the given lengths, laid out on
    //! consecutive points.
    Permutation with_cycle_type(IntegerPartition const& mu) {
      std::vector<Point> images(mu.size());
      std::size_t        start = 0;
      for (auto len : mu.parts()) {
        for (std::size_t i = 0; i < len; ++i) {
          images[start + i] = static_cast<Point>(start + (i + 1) % len);
        }
        start += len;
      }
      return Permutation(std::move(images));
    }

    std::vector<PermutationGroup> small_groups() {
      std::vector<PermutationGroup> out;
      for (std::size_t n = 1; n <= 3; ++n) {
        out.push_back(symmetric_group(n));
      }
      out.push_back(cyclic_group(3));
      out.push_back(cyclic_group(4));
      out.push_back(dihedral_group(4));
      return out;
    }

    // ---------------------------------------------------------------- permgroup

    bool group_orders(std::string& d) {
      for (std::size_t n = 1; n <= 5; ++n) {
        if (BigInt(symmetric_group(n).order()) != factorial(n)) {
          return fail(d, "|S", n, "| wrong");
        }
      }
      for (std::size_t n = 2; n <= 6; ++n) {
        if (cyclic_group(n).order() != n) {
          return fail(d, "|C", n, "| wrong");
        }
      }
      for (std::size_t n = 3; n <= 6; ++n) {
        if (dihedral_group(n).order() != 2 * n) {
          return fail(d, "|D", n, "| wrong");
        }
      }
      return true;
    }

    bool stabilizers_and_cosets(std::string& d) {
      for (auto const& G : {symmetric_group(4), dihedral_group(4), cyclic_group(4)}) {
        for (auto const& rho : SetPartition::all(G.degree())) {
          auto H = block_stabilizer(G, rho);
          for (auto const& h : H.elements()) {
            for (std::size_t m = 0; m < G.degree(); ++m) {
              if (!rho.same_block(m, h[m])) {
                return fail(d, "stabilizer of ", rho.to_string(), " moves a point");
              }
            }
          }
          if (!orbits(H).refines(rho)) {
            return fail(d, "orbits do not refine ", rho.to_string());
          }
          if (G.is_full_symmetric() && !(orbits(H) == rho)) {
            return fail(d, "orbits differ from ", rho.to_string(), " in S_n");
          }
          for (auto side : {CosetSide::left, CosetSide::right}) {
            auto                  reps = cosets(G, H, side);
            std::set<Permutation> covered;
            for (auto const& c : reps) {
              for (auto const& h : H.elements()) {
                covered.insert(side == CosetSide::left ? c * h : h * c);
              }
            }
            if (reps.size() * H.order() != G.order() || covered.size() != G.order()) {
              return fail(d, "cosets of the stabilizer of ", rho.to_string(),
                          " do not partition G");
            }
          }
        }
      }
      return true;
    }

    bool quotient_tables(std::string& d) {
      for (auto const& G : {symmetric_group(4), dihedral_group(4)}) {
        for (auto const& D : dclasses(G)) {
          auto const& Q = D.maximal_subgroup;
          if (!Q.is_group_law()) {
            return fail(d, "N/H is not a group for shape ", D.shape.to_string());
          }
          if (Q.order() * D.subgroup().order() != D.normalizer.order()) {
            return fail(d, "|N/H| wrong for shape ", D.shape.to_string());
          }
        }
      }
      return true;
    }

    // ------------------------------------------------------------- factorpower

    bool associativity(std::string& d) {
      for (std::size_t n = 2; n <= 3; ++n) {
        auto E = enumerate(symmetric_group(n));
        for (auto const& a : E) {
          for (auto const& b : E) {
            auto ab = a * b;
            for (auto const& c : E) {
              if (ab * c != a * (b * c)) {
                return fail(d, "(ab)c != a(bc) for a=", a.to_rows(), " b=", b.to_rows(),
                            " c=", c.to_rows());
              }
            }
          }
        }
      }
      return true;
    }

    bool closure(std::string& d) {
      for (auto const& G : small_groups()) {
        auto                E = enumerate(G);
        std::set<FpElement> S(E.begin(), E.end());
        for (auto const& a : E) {
          if (!S.count(star(G, a))) {
            return fail(d, "star leaves FP+ at ", a.to_rows());
          }
          for (auto const& b : E) {
            if (!S.count(a * b)) {
              return fail(d, "product leaves FP+ at ", a.to_rows(), " * ", b.to_rows());
            }
          }
        }
      }
      return true;
    }

    bool anti_involution(std::string& d) {
      auto G = symmetric_group(3);
      auto E = enumerate(G);
      for (auto const& a : E) {
        if (star(G, star(G, a)) != a) {
          return fail(d, "star is not an involution at ", a.to_rows());
        }
        for (auto const& b : E) {
          if (star(G, a * b) != star(G, b) * star(G, a)) {
            return fail(d, "star(ab) != star(b)star(a) at ", a.to_rows(), ", ", b.to_rows());
          }
        }
      }
      for (auto const& e : idempotents(symmetric_group(4))) {
        if (star(symmetric_group(4), e.element) != e.element) {
          return fail(d, "idempotent not fixed by star: ", e.partition.to_string());
        }
      }
      return true;
    }

    bool green_equivalence(std::string& d) {
      auto              G = symmetric_group(3);
      auto              E = enumerate(G);
      std::size_t const N = E.size();
      std::map<FpElement, std::size_t> index;
      for (std::size_t i = 0; i < N; ++i) {
        index[E[i]] = i;
      }
      using Ideal = std::vector<bool>;
      std::vector<Ideal> left(N, Ideal(N)), right(N, Ideal(N)), two(N, Ideal(N));
      for (std::size_t a = 0; a < N; ++a) {
        left[a][a] = right[a][a] = two[a][a] = true;
        for (std::size_t s = 0; s < N; ++s) {
          left[a][index.at(E[s] * E[a])]  = true;
          right[a][index.at(E[a] * E[s])] = true;
          two[a][index.at(E[s] * E[a])]   = true;
          two[a][index.at(E[a] * E[s])]   = true;
          for (std::size_t t = 0; t < N; ++t) {
            two[a][index.at(E[s] * E[a] * E[t])] = true;
          }
        }
      }
      for (std::size_t a = 0; a < N; ++a) {
        for (std::size_t b = 0; b < N; ++b) {
          bool const L = left[a] == left[b];
          bool const R = right[a] == right[b];
          bool       D = false;
          for (std::size_t c = 0; c < N && !D; ++c) {
            D = left[a] == left[c] && right[c] == right[b];
          }
          bool const J = two[a] == two[b];
          if (L != green_related(G, E[a], E[b], GreenRelation::L)
              || R != green_related(G, E[a], E[b], GreenRelation::R)
              || (L && R) != green_related(G, E[a], E[b], GreenRelation::H)
              || D != green_related(G, E[a], E[b], GreenRelation::D)) {
            return fail(d, "criterion disagrees with ideals at ", E[a].to_rows(), ", ",
                        E[b].to_rows());
          }
          if (D != J) {
            return fail(d, "D != J at ", E[a].to_rows(), ", ", E[b].to_rows());
          }
        }
      }
      return true;
    }

    bool idempotent_census(std::string& d) {
      auto groups = small_groups();
      groups.push_back(symmetric_group(4));
      for (auto const& G : groups) {
        auto                E = enumerate(G);
        std::set<FpElement> census;
        for (auto i : kernels::idempotent_census_parallel(E)) {
          census.insert(E[i]);
        }
        std::set<FpElement> listed;
        for (auto const& e : idempotents(G)) {
          listed.insert(e.element);
        }
        if (census != listed) {
          return fail(d, "degree ", G.degree(), ", order ", G.order(), ": census ",
                      census.size(), " vs idempotents ", listed.size());
        }
      }
      return true;
    }

    bool inverse_traces(std::string& d) {
      for (auto const& G : {symmetric_group(3), symmetric_group(4), dihedral_group(4)}) {
        for (auto const& D : dclasses(G)) {
          for (auto const& ei : D.idempotents) {
            for (auto const& ej : D.idempotents) {
              auto p = trace_product(G, D, ei.element, ej.element);
              auto q = trace_product(G, D, ej.element, ei.element);
              if (p != q) {
                return fail(d, "idempotents do not commute in shape ", D.shape.to_string());
              }
              if (ei.partition == ej.partition ? p != ei.element : p.has_value()) {
                return fail(d, "trace product of ", ei.partition.to_string(), " and ",
                            ej.partition.to_string(), " is wrong");
              }
            }
          }
        }
      }
      return true;
    }

    bool units(std::string& d) {
      for (auto const& G : small_groups()) {
        auto const          E  = enumerate(G);
        auto const          id = identity_element(G.degree());
        std::set<FpElement> invertible, singles, perms;
        for (auto const& a : E) {
          for (auto const& b : E) {
            if (a * b == id && b * a == id) {
              invertible.insert(a);
              break;
            }
          }
          if (saturate(G, a).size() == 1) {
            singles.insert(a);
          }
        }
        for (auto const& g : G.elements()) {
          perms.insert(FpElement::from_permutation(g));
        }
        if (invertible != singles || singles != perms) {
          return fail(d, "units mismatch for a group of order ", G.order());
        }
      }
      auto S3      = symmetric_group(3);
      auto natural = units_and_kernel(S3);
      if (natural.kernel.order() != 1 || natural.units.order() != 6) {
        return fail(d, "S3 natural action: wrong kernel");
      }
      std::vector<Permutation> trivial(S3.generators().size(), Permutation::identity(1));
      auto                     collapsed = units_and_kernel(make_action(S3, 1, trivial));
      if (collapsed.kernel.order() != 6 || collapsed.units.order() != 1) {
        return fail(d, "S3 on one point: wrong kernel");
      }
      return true;
    }

    bool dclass_accounting(std::string& d) {
      for (auto const& G : {symmetric_group(3), symmetric_group(4)}) {
        auto E = enumerate(G);
        for (auto const& D : dclasses(G)) {
          std::vector<FpElement> members;
          for (auto const& x : E) {
            if (green_related(G, x, D.apex(), GreenRelation::D)) {
              members.push_back(x);
            }
          }
          std::vector<std::size_t> sizes;
          std::vector<bool>        seen(members.size());
          for (std::size_t i = 0; i < members.size(); ++i) {
            if (seen[i]) {
              continue;
            }
            std::size_t size = 0;
            for (std::size_t j = i; j < members.size(); ++j) {
              if (!seen[j] && green_related(G, members[i], members[j], GreenRelation::H)) {
                seen[j] = true;
                ++size;
              }
            }
            sizes.push_back(size);
          }
          auto const k = D.k();
          if (sizes.size() != k * k) {
            return fail(d, "shape ", D.shape.to_string(), ": ", sizes.size(),
                        " H-classes, expected ", k * k);
          }
          for (auto s : sizes) {
            if (s != D.maximal_subgroup.order()) {
              return fail(d, "shape ", D.shape.to_string(), ": H-class of size ", s);
            }
          }
          if (D.k() * D.normalizer.order() != G.order()) {
            return fail(d, "shape ", D.shape.to_string(), ": k != [G:N]");
          }
        }
      }
      return true;
    }

    FpElement relation_from_bits(std::size_t n, std::uint32_t bits) {
      std::vector<std::uint32_t> columns(n);
      for (std::size_t m = 0; m < n; ++m) {
        columns[m] = (bits >> (m * n)) & ((1U << n) - 1);
      }
      return FpElement::from_columns(columns);
    }

    bool membership(std::string& d) {
      auto groups = small_groups();
      groups.push_back(symmetric_group(4));
      for (auto const& G : groups) {
        auto const          n = G.degree();
        auto                E = enumerate(G);
        std::set<FpElement> S(E.begin(), E.end());
        for (std::uint32_t bits = 0; bits < (1U << (n * n)); ++bits) {
          auto r     = relation_from_bits(n, bits);
          bool truth = S.count(r) > 0;
          if (is_member_saturation(G, r) != truth || is_member(G, r) != truth) {
            return fail(d, "membership wrong for ", r.to_rows());
          }
          if (G.is_full_symmetric() && is_member_matching(r) != truth) {
            return fail(d, "matching test wrong for ", r.to_rows());
          }
        }
      }
      return true;
    }

    // ---------------------------------------------------------------- symfunc

    bool character_orthogonality(std::string& d) {
      for (std::size_t n = 1; n <= 7; ++n) {
        auto shapes = IntegerPartition::all(n);
        for (auto const& a : shapes) {
          for (auto const& b : shapes) {
            Rational sum = 0;
            for (auto const& mu : shapes) {
              sum += Rational(mn_character(a, mu) * mn_character(b, mu), centralizer_order(mu));
            }
            if (sum != Rational(a == b ? 1 : 0)) {
              return fail(d, "<chi_", a.to_string(), ", chi_", b.to_string(), "> = ",
                          to_fraction_string(sum));
            }
          }
        }
        for (auto const& a : shapes) {
          if (mn_character(a, IntegerPartition(std::vector<std::size_t>(n, 1)))
              != specht_dim(a)) {
            return fail(d, "degree of chi_", a.to_string(), " differs from the hook formula");
          }
        }
      }
      return true;
    }

    bool column_sums(std::string& d, Limits const& limits) {
      for (std::size_t n = 1; n <= 8; ++n) {
        for (auto const& shape : IntegerPartition::all(n)) {
          auto table = induced_table(shape, limits);
          for (std::size_t a = 0; a < table.lambdas.size(); ++a) {
            BigInt sum = 0;
            for (std::size_t b = 0; b < table.labels.size(); ++b) {
              if (table.mult[a][b] < 0) {
                return fail(d, "negative multiplicity");
              }
              sum += table.labels[b].dim() * table.mult[a][b];
            }
            if (sum != kostka(table.lambdas[a], shape)) {
              return fail(d, "lambda ", table.lambdas[a].to_string(), ", shape ",
                          shape.to_string(), ": ", sum, " != K = ",
                          kostka(table.lambdas[a], shape));
            }
          }
        }
      }
      return true;
    }

    // Tabloids of shape mu fixed by a permutation with cycle lengths
    // cycles[i..]: every cycle lies inside one row.
    BigInt fixed_tabloids(std::vector<std::size_t> const& cycles,
                          std::size_t                     i,
                          std::vector<std::size_t>&       room) {
      if (i == cycles.size()) {
        return 1;
      }
      BigInt total = 0;
      for (auto& r : room) {
        if (r >= cycles[i]) {
          r -= cycles[i];
          total += fixed_tabloids(cycles, i + 1, room);
          r += cycles[i];
        }
      }
      return total;
    }

    bool permutation_characters(std::string& d) {
      for (std::size_t n = 1; n <= 6; ++n) {
        auto shapes = IntegerPartition::all(n);
        for (auto const& mu : shapes) {
          for (auto const& nu : shapes) {
            BigInt sum = 0;
            for (auto const& lambda : shapes) {
              sum += kostka(lambda, mu) * mn_character(lambda, nu);
            }
            auto room = mu.parts();
            if (sum != fixed_tabloids(nu.parts(), 0, room)) {
              return fail(d, "permutation character of M^", mu.to_string(), " at ",
                          nu.to_string());
            }
          }
        }
      }
      return true;
    }

    bool specht_relations(std::string& d, Limits const& limits) {
      for (std::size_t n = 1; n <= 6; ++n) {
        for (auto const& shape : IntegerPartition::all(n)) {
          auto       rep = specht_matrices(shape, limits);
          auto const I   = IntMatrix::identity(rep.dim);
          auto const& s  = rep.generators;
          if (BigInt(rep.dim) != specht_dim(shape)) {
            return fail(d, "dimension of S^", shape.to_string());
          }
          for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] * s[i] != I) {
              return fail(d, "s_", i + 1, "^2 != 1 on S^", shape.to_string());
            }
            if (i + 1 < s.size() && s[i] * s[i + 1] * s[i] != s[i + 1] * s[i] * s[i + 1]) {
              return fail(d, "braid relation fails on S^", shape.to_string());
            }
            for (std::size_t j = i + 2; j < s.size(); ++j) {
              if (s[i] * s[j] != s[j] * s[i]) {
                return fail(d, "distant generators do not commute on S^", shape.to_string());
              }
            }
          }
          for (auto const& mu : IntegerPartition::all(n)) {
            auto M = specht_matrix(shape, with_cycle_type(mu), limits);
            if (BigInt(M.trace()) != mn_character(shape, mu)) {
              return fail(d, "trace on S^", shape.to_string(), " at ", mu.to_string());
            }
          }
        }
      }
      return true;
    }

    // ---------------------------------------------------------------- kernels

    bool serial_parallel(std::string& d, Limits const& limits) {
      for (auto const& G : small_groups()) {
        auto a = kernels::enumerate_parallel(G);
        auto b = kernels::enumerate_serial(G);
        if (std::set<FpElement>(a.begin(), a.end()) != std::set<FpElement>(b.begin(), b.end())) {
          return fail(d, "enumeration differs for a group of order ", G.order());
        }
        if (kernels::idempotent_census_parallel(a) != kernels::idempotent_census_serial(a)) {
          return fail(d, "idempotent census differs");
        }
      }
      for (std::size_t n = 1; n <= 6; ++n) {
        for (auto const& shape : IntegerPartition::all(n)) {
          if (kernels::block_class_counts_parallel(shape)
              != kernels::block_class_counts_serial(shape)) {
            return fail(d, "block class counts differ for ", shape.to_string());
          }
          if (induced_table(shape, limits).mult != induced_table_serial(shape, limits).mult) {
            return fail(d, "induced tables differ for ", shape.to_string());
          }
        }
      }
      return true;
    }

    // ---------------------------------------------------------------- dualsym

    struct FStarTable {
      std::vector<FStarElement>              elements;
      std::vector<std::vector<std::uint32_t>> product;
    };

    FStarTable fstar_table(std::size_t n, Limits const& limits) {
      FStarTable t;
      t.elements = fstar_enumerate(n, limits);
      std::map<FStarElement, std::uint32_t> index;
      for (std::size_t i = 0; i < t.elements.size(); ++i) {
        index[t.elements[i]] = static_cast<std::uint32_t>(i);
      }
      t.product.assign(t.elements.size(), std::vector<std::uint32_t>(t.elements.size()));
      for (std::size_t a = 0; a < t.elements.size(); ++a) {
        for (std::size_t b = 0; b < t.elements.size(); ++b) {
          t.product[a][b] = index.at(fstar_multiply(t.elements[a], t.elements[b]));
        }
      }
      return t;
    }

    bool fstar_associative_inverse(std::string& d, Limits const& limits, std::uint64_t seed) {
      for (std::size_t n = 1; n <= 4; ++n) {
        auto const  t = fstar_table(n, limits);
        auto const& P = t.product;
        auto const  N = t.elements.size();
        for (std::size_t a = 0; a < N; ++a) {
          for (std::size_t b = 0; b < N; ++b) {
            for (std::size_t c = 0; c < N; ++c) {
              if (P[P[a][b]][c] != P[a][P[b][c]]) {
                return fail(d, "not associative at n=", n);
              }
            }
          }
        }
        std::vector<std::size_t> idem;
        for (std::size_t a = 0; a < N; ++a) {
          if (P[a][a] == a) {
            idem.push_back(a);
          }
        }
        for (auto e : idem) {
          for (auto f : idem) {
            if (P[e][f] != P[f][e]) {
              return fail(d, "idempotents do not commute at n=", n);
            }
          }
        }
        for (std::size_t a = 0; a < N; ++a) {
          std::size_t inverses = 0;
          for (std::size_t b = 0; b < N; ++b) {
            inverses += P[P[a][b]][a] == a && P[P[b][a]][b] == b;
          }
          if (inverses != 1) {
            return fail(d, t.elements[a].to_string(), " has ", inverses, " inverses");
          }
        }
      }
      auto const            E = fstar_enumerate(5, limits);
      std::mt19937_64       rng(seed);
      std::uniform_int_distribution<std::size_t> pick(0, E.size() - 1);
      for (int trial = 0; trial < 20000; ++trial) {
        auto const& a = E[pick(rng)];
        auto const& b = E[pick(rng)];
        auto const& c = E[pick(rng)];
        if (fstar_multiply(fstar_multiply(a, b), c) != fstar_multiply(a, fstar_multiply(b, c))) {
          return fail(d, "not associative at n=5: ", a.to_string(), ", ", b.to_string(), ", ",
                      c.to_string());
        }
      }
      return true;
    }

    bool fstar_counts(std::string& d, Limits const& limits) {
      for (std::size_t n = 1; n <= 5; ++n) {
        auto const E = fstar_enumerate(n, limits);
        BigInt     by_partitions = 0;
        for (auto const& rho : SetPartition::all(n)) {
          BigInt young = 1;
          for (auto const& block : rho.blocks()) {
            young *= factorial(block.size());
          }
          by_partitions += factorial(n) / young;
        }
        auto const  structure = fstar_structure(n, 5, limits);
        std::size_t units     = 0;
        for (auto const& x : E) {
          units += x.rho() == SetPartition::discrete(n);
        }
        if (BigInt(E.size()) != by_partitions || fstar_count(n, limits) != by_partitions
            || structure.semisimple_dimension != by_partitions) {
          return fail(d, "n=", n, ": enumerated ", E.size(), ", sum over partitions ",
                      by_partitions, ", semisimple dimension ", structure.semisimple_dimension);
        }
        if (!structure.ok) {
          return fail(d, "n=", n, ": idempotent and H-class counts disagree with the formulas");
        }
        if (BigInt(units) != factorial(n)) {
          return fail(d, "n=", n, ": ", units, " units");
        }
      }
      return true;
    }

    bool coset_representatives(std::string& d) {
      for (std::size_t n = 1; n <= 4; ++n) {
        auto G = symmetric_group(n);
        for (auto const& rho : SetPartition::all(n)) {
          auto young = block_stabilizer(G, rho);
          for (auto const& sigma : G.elements()) {
            Permutation best = sigma;
            for (auto const& y : young.elements()) {
              best = std::min(best, y * sigma);
            }
            if (canonical_coset_rep(rho, sigma) != best) {
              return fail(d, "coset of ", sigma.to_one_line(), " under ", rho.to_string());
            }
          }
        }
      }
      return true;
    }

    bool correspondence(std::string& d, Limits const& limits) {
      for (std::size_t n = 1; n <= 4; ++n) {
        if (!correspondence_check(n, limits).ok) {
          return fail(d, "n=", n);
        }
      }
      return true;
    }

    // ---------------------------------------------------------------- repcore

    std::vector<FactorPower> symmetric_contexts(Limits const& limits, std::uint64_t seed,
                                                std::size_t max_n) {
      std::vector<FactorPower> out;
      for (std::size_t n = 2; n <= max_n; ++n) {
        out.emplace_back(symmetric_group(n), limits, seed);
      }
      return out;
    }

    bool simple_dimensions(std::string& d, Limits const& limits, std::uint64_t seed) {
      for (auto const& fp : symmetric_contexts(limits, seed, 4)) {
        BigInt structure = 0, squares = 0;
        for (auto const& D : fp.dclasses()) {
          structure += BigInt(D.k() * D.k() * D.maximal_subgroup.order());
        }
        for (auto const& s : fp.simples()) {
          auto const& D = fp.dclasses()[s.dclass];
          auto        L = build_simple<Rational>(fp, s);
          if (L.dim() != s.dim || s.dim != fp.group().order() / D.normalizer.order() * s.label.dim) {
            return fail(d, "dimension of simple ", s.id, " of degree ", fp.group().degree());
          }
          squares += BigInt(s.dim * s.dim);
        }
        auto const n = fp.group().degree();
        if (structure != squares || squares != fstar_count(n, limits)) {
          return fail(d, "degree ", n, ": structure ", structure, ", squares ", squares);
        }
      }
      return true;
    }

    bool multiplicativity(std::string& d, Limits const& limits, std::uint64_t seed) {
      for (auto const& fp : symmetric_contexts(limits, seed, 3)) {
        auto const n = fp.group().degree();
        for (auto const& s : fp.simples()) {
          auto const  L   = build_simple<Rational>(fp, s);
          auto const& dom = L.domain();
          if (L(identity_element(n)) != QMatrix::identity(L.dim())) {
            return fail(d, "identity not mapped to I by simple ", s.id);
          }
          for (std::size_t a = 0; a < dom.size(); ++a) {
            for (std::size_t b = 0; b < dom.size(); ++b) {
              auto ab = *dom.index_of(dom.elements()[a] * dom.elements()[b]);
              if (L.matrix(ab) != L.matrix(a) * L.matrix(b)) {
                return fail(d, "simple ", s.id, " of degree ", n, " is not multiplicative");
              }
            }
          }
        }
      }
      return true;
    }

    bool bimodule_commutation(std::string& d, Limits const& limits, std::uint64_t seed) {
      for (auto const& fp : symmetric_contexts(limits, seed, 4)) {
        for (std::size_t D = 0; D < fp.dclasses().size(); ++D) {
          auto V = vbimodule<Rational>(fp, D);
          for (std::size_t i = 0; i < V.left.domain().size(); ++i) {
            for (auto const& R : V.right) {
              if (V.left.matrix(i) * R != R * V.left.matrix(i)) {
                return fail(d, "left and right actions do not commute, shape ",
                            fp.dclasses()[D].shape.to_string());
              }
            }
          }
        }
      }
      return true;
    }

    bool restriction(std::string& d, Limits const& limits, std::uint64_t seed) {
      for (auto const& fp : symmetric_contexts(limits, seed, 4)) {
        for (auto const& s : fp.simples()) {
          if (!restriction_check(fp, s)) {
            return fail(d, "degree ", fp.group().degree(), ", simple ", s.label.to_string());
          }
        }
      }
      return true;
    }

    bool duality(std::string& d, Limits const& limits, std::uint64_t seed) {
      for (auto const& fp : symmetric_contexts(limits, seed, 4)) {
        for (auto const& s : fp.simples()) {
          if (!dual_check(fp, s, build_simple<Rational>(fp, s))) {
            return fail(d, "degree ", fp.group().degree(), ", simple ", s.label.to_string());
          }
        }
      }
      return true;
    }

    bool unitarity(std::string& d, Limits const& limits, std::uint64_t seed) {
      for (auto const& fp : symmetric_contexts(limits, seed, 3)) {
        for (auto const& s : fp.simples()) {
          auto form = unitarize(fp, s, build_simple<Complex>(fp, s));
          if (form.residual > 1e-9 || form.min_eigenvalue <= 1e-9) {
            return fail(d, "simple ", s.label.to_string(), ": residual ", form.residual,
                        ", smallest eigenvalue ", form.min_eigenvalue);
          }
        }
      }
      return true;
    }

    bool tensor_reducibility(std::string& d, Limits const& limits, std::uint64_t seed) {
      for (auto const& fp : symmetric_contexts(limits, seed, 3)) {
        std::vector<MatrixRep<Rational>> exact;
        std::vector<MatrixRep<Complex>>  numeric;
        for (auto const& s : fp.simples()) {
          exact.push_back(build_simple<Rational>(fp, s));
          numeric.push_back(build_simple<Complex>(fp, s));
        }
        for (std::size_t a = 0; a < exact.size(); ++a) {
          if (multiplicity(exact[a], exact[a], seed) != 1
              || multiplicity(exact[a], direct_sum(exact[a], exact[a]), seed) != 2) {
            return fail(d, "Schur multiplicities wrong for simple ", a);
          }
          for (std::size_t b = 0; b < exact.size(); ++b) {
            auto        q = decompose(fp, tensor(exact[a], exact[b]));
            auto        c = decompose(fp, tensor(numeric[a], numeric[b]));
            std::size_t total = 0;
            for (std::size_t i = 0; i < q.size(); ++i) {
              total += q[i].second * q[i].first.dim;
              if (q[i].second != c[i].second) {
                return fail(d, "exact and floating multiplicities differ for ", a, "x", b);
              }
            }
            if (total != exact[a].dim() * exact[b].dim()) {
              return fail(d, "accounting fails for ", a, "x", b);
            }
          }
        }
      }
      return true;
    }

  }  // namespace

  std::vector<Check> verify_checks(Limits const& limits, std::uint64_t seed) {
    auto with_limits = [limits](bool (*f)(std::string&, Limits const&)) {
      return [limits, f](std::string& d) { return f(d, limits); };
    };
    auto with_seed = [limits, seed](bool (*f)(std::string&, Limits const&, std::uint64_t)) {
      return [limits, seed, f](std::string& d) { return f(d, limits, seed); };
    };
    return {
        {"permgroup.orders", group_orders},
        {"permgroup.stabilizers_cosets", stabilizers_and_cosets},
        {"permgroup.quotient_tables", quotient_tables},
        {"factorpower.associativity", associativity},
        {"factorpower.closure", closure},
        {"factorpower.anti_involution", anti_involution},
        {"factorpower.green", green_equivalence},
        {"factorpower.idempotent_census", idempotent_census},
        {"factorpower.inverse_traces", inverse_traces},
        {"factorpower.units", units},
        {"factorpower.dclass_accounting", dclass_accounting},
        {"factorpower.membership", membership},
        {"symfunc.orthogonality", character_orthogonality},
        {"symfunc.column_sums", with_limits(column_sums)},
        {"symfunc.permutation_characters", permutation_characters},
        {"symfunc.specht_relations", with_limits(specht_relations)},
        {"kernels.serial_parallel", with_limits(serial_parallel)},
        {"dualsym.associative_inverse", with_seed(fstar_associative_inverse)},
        {"dualsym.counts", with_limits(fstar_counts)},
        {"dualsym.coset_representatives", coset_representatives},
        {"dualsym.correspondence", with_limits(correspondence)},
        {"repcore.dimensions", with_seed(simple_dimensions)},
        {"repcore.multiplicativity", with_seed(multiplicativity)},
        {"repcore.bimodule_commutation", with_seed(bimodule_commutation)},
        {"repcore.restriction", with_seed(restriction)},
        {"repcore.duality", with_seed(duality)},
        {"repcore.unitarity", with_seed(unitarity)},
        {"repcore.tensor", with_seed(tensor_reducibility)},
    };
  }

  std::vector<CheckResult>
  run_verify(Limits const&                                  limits,
             std::uint64_t                                  seed,
             std::function<void(CheckResult const&)> const& on_result) {
    std::vector<CheckResult> results;
    for (auto const& check : verify_checks(limits, seed)) {
      CheckResult r;
      r.name = check.name;
      try {
        r.ok = check.run(r.detail);
      } catch (std::exception const& e) {
        r.ok     = false;
        r.detail = e.what();
      }
      if (on_result) {
        on_result(r);
      }
      results.push_back(std::move(r));
    }
    return results;
  }

}  // namespace fplab
