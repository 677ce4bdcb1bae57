#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "fplab/errors.hpp"
#include "fplab/factorpower.hpp"
#include "oracles.hpp"

using namespace fplab;

namespace {

  std::vector<oracle::Perm> to_oracle(PermutationGroup const& G) {
    std::vector<oracle::Perm> out;
    for (auto const& g : G.elements()) {
      oracle::Perm p;
      for (auto x : g.images()) {
        p.push_back(x);
      }
      out.push_back(p);
    }
    return out;
  }

  oracle::Cols to_oracle(FpElement const& e) {
    oracle::Cols c;
    for (std::size_t m = 0; m < e.degree(); ++m) {
      c.push_back(e.column(m));
    }
    return c;
  }

  FpElement from_oracle(oracle::Cols const& c) {
    return FpElement::from_columns(std::vector<std::uint32_t>(c.begin(), c.end()));
  }

  FpElement unit(std::size_t n, char const* cycles) {
    return FpElement::from_permutation(Permutation::from_cycles(n, cycles));
  }

  std::vector<PermutationGroup> groups() {
    return {symmetric_group(1), symmetric_group(2), symmetric_group(3), cyclic_group(2),
            cyclic_group(3),    cyclic_group(4),    dihedral_group(4)};
  }

}  // namespace

TEST_CASE("relation text formats") {
  auto e = FpElement::parse_rows("110/011/001");
  CHECK(e.degree() == 3);
  CHECK(e.contains(0, 0));
  CHECK(e.contains(0, 1));
  CHECK_FALSE(e.contains(0, 2));
  CHECK(e.to_rows() == "110/011/001");
  CHECK(e.to_json() == "[[1,2],[2,3],[3]]");
  CHECK(FpElement::parse_json("[[1,2],[2,3],[3]]") == e);
  CHECK_THROWS_AS(FpElement::parse_rows("11/011/001"), ValidationError);
  CHECK_THROWS_AS(FpElement::parse_rows("120/011/001"), ValidationError);
  CHECK_THROWS_AS(FpElement::parse_json("[[1,4],[2],[3]]"), ValidationError);
}

TEST_CASE("enumeration agrees with the subset sweep oracle") {
  for (auto const& G : groups()) {
    auto const             n    = static_cast<int>(G.degree());
    auto const             mine = enumerate(G);
    std::vector<oracle::Cols> converted;
    for (auto const& e : mine) {
      converted.push_back(to_oracle(e));
    }
    CHECK(converted == oracle::enumerate_fp(to_oracle(G), n));
    CHECK(std::is_sorted(mine.begin(), mine.end()));
  }
  CHECK(enumerate(symmetric_group(1)).size() == 1);
  CHECK(enumerate(symmetric_group(2)).size() == 3);
  CHECK(enumerate(cyclic_group(2)).size() == 3);
  CHECK(enumerate(symmetric_group(3)).size() == 49);
  Limits small;
  small.enumerate_order = 5;
  CHECK_THROWS_AS(enumerate(symmetric_group(3), small), SizeLimitError);
}

TEST_CASE("multiplication is the class of the subset product") {
  for (auto const& G : {symmetric_group(3), dihedral_group(4), cyclic_group(4)}) {
    auto const O = to_oracle(G);
    auto const E = enumerate(G);
    for (auto const& a : E) {
      for (auto const& b : E) {
        REQUIRE(a * b == from_oracle(oracle::multiply(O, to_oracle(a), to_oracle(b))));
      }
    }
  }
  auto S2    = symmetric_group(2);
  auto omega = canonical_from_subset(S2, S2.elements());
  auto id    = unit(2, "()");
  CHECK(omega * omega == omega);
  CHECK(unit(2, "(1 2)") * omega == omega);
  CHECK(id * omega == omega);
  CHECK(omega * id == omega);
}

TEST_CASE("star") {
  auto G = symmetric_group(3);
  auto s = Permutation::from_cycles(3, "(1 2 3)");
  CHECK(star(G, FpElement::from_permutation(s)) == FpElement::from_permutation(s.inverse()));
  auto const O = to_oracle(G);
  for (auto const& a : enumerate(G)) {
    CHECK(star(G, star(G, a)) == a);
    auto                      sat = oracle::saturate(O, to_oracle(a));
    std::vector<oracle::Perm> inv;
    for (auto const& g : sat) {
      inv.push_back(oracle::inverse(g));
    }
    CHECK(star(G, a) == from_oracle(oracle::columns_of(inv, 3)));
  }
  for (auto const& e : idempotents(G)) {
    CHECK(star(G, e.element) == e.element);
  }
}

TEST_CASE("saturation and canonical forms") {
  auto G   = symmetric_group(3);
  auto sat = saturate(G, FpElement::parse_rows("110/110/001"));
  CHECK(sat.size() == 2);
  CHECK(std::find(sat.begin(), sat.end(), Permutation::identity(3)) != sat.end());
  CHECK(std::find(sat.begin(), sat.end(), Permutation::from_cycles(3, "(1 2)")) != sat.end());
  CHECK_THROWS_AS(canonical_from_subset(G, {}), ValidationError);
  CHECK_THROWS_AS(canonical_from_subset(cyclic_group(3), {Permutation::from_cycles(3, "(1 2)")}),
                  ValidationError);
}

TEST_CASE("membership") {
  auto S3 = symmetric_group(3);
  CHECK(is_member(S3, FpElement::parse_rows("100/010/001")));
  CHECK(is_member(S3, FpElement::parse_rows("111/111/111")));
  CHECK_FALSE(is_member(S3, FpElement::parse_rows("110/100/001")));
  CHECK_FALSE(is_member_matching(FpElement::parse_rows("110/100/001")));
  CHECK_FALSE(is_member_saturation(S3, FpElement::parse_rows("110/100/001")));
  CHECK_FALSE(is_member(S3, FpElement::parse_rows("000/010/001")));
  CHECK_THROWS_AS(is_member(S3, FpElement::parse_rows("10/01")), ValidationError);
  CHECK(is_member(cyclic_group(3), FpElement::parse_rows("100/010/001")));
  CHECK(is_member(cyclic_group(3), FpElement::parse_rows("111/111/111")));
  CHECK_FALSE(is_member(cyclic_group(3), FpElement::parse_rows("110/110/001")));

  for (auto const& G : {symmetric_group(3), cyclic_group(3), dihedral_group(4)}) {
    auto const O = to_oracle(G);
    auto const n = G.degree();
    for (std::uint32_t bits = 0; bits < (1U << (n * n)); ++bits) {
      oracle::Cols c(n);
      bool         nonempty = true;
      for (std::size_t m = 0; m < n; ++m) {
        c[m]     = (bits >> (m * n)) & ((1U << n) - 1);
        nonempty = nonempty && c[m] != 0;
      }
      auto sat   = oracle::saturate(O, c);
      bool truth = nonempty && !sat.empty() && oracle::columns_of(sat, static_cast<int>(n)) == c;
      REQUIRE(is_member(G, from_oracle(c)) == truth);
    }
  }
}

TEST_CASE("idempotents") {
  CHECK(idempotents(symmetric_group(2)).size() == 2);
  CHECK(idempotents(symmetric_group(3)).size() == 5);
  CHECK(idempotents(symmetric_group(4)).size() == 15);
  CHECK(idempotents(cyclic_group(3)).size() == 2);
  auto list = idempotents(symmetric_group(3));
  CHECK(list.front().partition.to_string() == "{1,2,3}");
  CHECK(list.back().partition.to_string() == "{1}{2}{3}");
  for (auto const& G : groups()) {
    auto const O = to_oracle(G);
    for (auto const& e : idempotents(G)) {
      CHECK(from_oracle(oracle::multiply(O, to_oracle(e.element), to_oracle(e.element)))
            == e.element);
      CHECK(orbits(e.subgroup) == e.partition);
    }
  }
}

TEST_CASE("Green's relations against principal ideals") {
  for (auto const& G : {cyclic_group(4), dihedral_group(4)}) {
    auto const E = enumerate(G);
    std::map<FpElement, std::set<FpElement>> left, right;
    for (auto const& a : E) {
      left[a].insert(a);
      right[a].insert(a);
      for (auto const& s : E) {
        left[a].insert(s * a);
        right[a].insert(a * s);
      }
    }
    for (auto const& a : E) {
      for (auto const& b : E) {
        CHECK((left[a] == left[b]) == green_related(G, a, b, GreenRelation::L));
        CHECK((right[a] == right[b]) == green_related(G, a, b, GreenRelation::R));
      }
    }
  }
  auto S3 = symmetric_group(3);
  auto e1 = FpElement::parse_rows("110/110/001");
  auto e2 = FpElement::parse_rows("100/011/011");
  CHECK(green_related(S3, e1, e2, GreenRelation::D));
  CHECK_FALSE(green_related(S3, e1, e2, GreenRelation::L));
  CHECK(green_related(S3, unit(3, "(1 2)"), unit(3, "(1 2 3)"), GreenRelation::H));
  for (auto rel : {GreenRelation::L, GreenRelation::R, GreenRelation::H, GreenRelation::D}) {
    CHECK(green_related(S3, e1, e1, rel));
  }
}

TEST_CASE("D-classes") {
  auto S3 = symmetric_group(3);
  auto D3 = dclasses(S3);
  REQUIRE(D3.size() == 3);
  CHECK(D3[1].shape.to_string() == "2,1");
  CHECK(D3[1].k() == 3);
  CHECK(D3[1].maximal_subgroup.order() == 1);
  CHECK(D3[2].k() == 1);
  CHECK(D3[2].maximal_subgroup.order() == 6);
  auto D4 = dclasses(symmetric_group(4));
  REQUIRE(D4.size() == 5);
  CHECK(D4[2].shape.to_string() == "2,2");
  CHECK(D4[2].k() == 3);
  CHECK(D4[2].maximal_subgroup.order() == 2);
  for (auto const& D : D4) {
    CHECK(D.conjugators.front().is_identity());
    for (std::size_t i = 0; i < D.k(); ++i) {
      CHECK(D.idempotents[i].subgroup == conjugate(D.subgroup(), D.conjugators[i]));
    }
  }
}

TEST_CASE("trace products") {
  auto S3 = symmetric_group(3);
  auto D  = dclasses(S3);
  auto e  = D[1].idempotents;
  CHECK(trace_product(S3, D[1], e[0].element, e[0].element) == e[0].element);
  CHECK_FALSE(trace_product(S3, D[1], e[0].element, e[1].element).has_value());
  auto a = unit(3, "(1 2)"), b = unit(3, "(2 3)");
  CHECK(trace_product(S3, D[2], a, b) == a * b);
  CHECK_THROWS_AS(trace_product(S3, D[2], a, e[0].element), ValidationError);
}

TEST_CASE("units and kernels") {
  auto natural = units_and_kernel(symmetric_group(3));
  CHECK(natural.kernel.order() == 1);
  CHECK(natural.units.order() == 6);
  auto S3      = symmetric_group(3);
  auto trivial = make_action(S3, 1, std::vector<Permutation>(S3.generators().size(),
                                                             Permutation::identity(1)));
  auto collapsed = units_and_kernel(trivial);
  CHECK(collapsed.kernel.order() == 6);
  CHECK(collapsed.units.order() == 1);
  CHECK(collapsed.faithful.order() == 1);
  auto parity = units_and_kernel(make_action(cyclic_group(4), 2,
                                             {Permutation::from_cycles(2, "(1 2)")}));
  CHECK(parity.kernel.order() == 2);
  CHECK(parity.units.order() == 2);
}
