#include <random>
#include <vector>

#include "doctest.h"
#include "fplab/errors.hpp"
#include "fplab/repcore.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace fplab;

namespace {

  std::size_t fixed_points(Permutation const& g) {
    std::size_t f = 0;
    for (std::size_t m = 0; m < g.degree(); ++m) {
      f += g[m] == m;
    }
    return f;
  }

  oracle::Perm to_oracle(Permutation const& p) {
    oracle::Perm out;
    for (auto x : p.images()) {
      out.push_back(x);
    }
    return out;
  }

}  // namespace

TEST_CASE("domains") {
  auto S3 = symmetric_group(3);
  auto S4 = symmetric_group(4);
  CHECK(FpDomain::standard(S3).kind() == FpDomain::Kind::full);
  CHECK(FpDomain::standard(S3).size() == 49);
  CHECK(FpDomain::standard(S4).kind() == FpDomain::Kind::generated);
  CHECK(FpDomain::units(S4).size() == 24);
  auto gen = FpDomain::generated(S4);
  for (auto const& e : idempotents(S4)) {
    CHECK(gen.index_of(e.element).has_value());
  }
}

TEST_CASE("bimodule of an L-class") {
  FactorPower fp(symmetric_group(3));
  auto        units = vbimodule<Rational>(fp, 2);
  CHECK(units.left.dim() == 6);
  CHECK(units.right.size() == 6);
  auto V = vbimodule<Rational>(fp, 1);
  CHECK(V.left.dim() == 3);
  for (auto const& g : fp.group().elements()) {
    auto M = V.left(FpElement::from_permutation(g));
    CHECK(M.trace() == Rational(fixed_points(g)));
    for (std::size_t c = 0; c < 3; ++c) {
      Rational col = 0;
      for (std::size_t r = 0; r < 3; ++r) {
        col += M(r, c);
        CHECK((M(r, c) == 0 || M(r, c) == 1));
      }
      CHECK(col == 1);
    }
  }
  CHECK(vbimodule<Rational>(fp, 0).left.dim() == 1);
  auto W = vbimodule<Rational>(fp, 2);
  for (std::size_t i = 0; i < W.left.domain().size(); ++i) {
    for (auto const& R : W.right) {
      CHECK(W.left.matrix(i) * R == R * W.left.matrix(i));
    }
  }
}

TEST_CASE("simple modules of FP+(S_3)") {
  FactorPower fp(symmetric_group(3));
  REQUIRE(fp.simples().size() == 5);
  std::vector<std::size_t> dims;
  for (auto const& s : fp.simples()) {
    dims.push_back(s.dim);
  }
  CHECK(dims == std::vector<std::size_t>{1, 3, 1, 2, 1});

  auto const& tri = fp.find_simple(1, "triv");
  auto        L   = build_simple<Rational>(fp, tri);
  for (auto const& g : fp.group().elements()) {
    CHECK(L(FpElement::from_permutation(g)).trace() == Rational(fixed_points(g)));
  }

  auto const& std2 = fp.find_simple(2, "1=2,1");
  auto        S    = build_simple<Rational>(fp, std2);
  CHECK(S.dim() == 2);
  for (std::size_t i = 0; i < S.domain().size(); ++i) {
    auto const& e = S.domain().elements()[i];
    if (saturate(fp.group(), e).size() > 1) {
      CHECK(S.matrix(i).is_zero());
    } else {
      auto g = saturate(fp.group(), e).front();
      CHECK(S.matrix(i).trace()
            == Rational(oracle::chi({2, 1}, oracle::cycle_type(to_oracle(g)))));
    }
  }

  CHECK_THROWS_AS(fp.find_simple(2, "1=4"), ValidationError);
  CHECK_THROWS_AS(fp.dclass_of_shape(IntegerPartition::parse("4")), ValidationError);
  CHECK(fp.dclass_of_partition(SetPartition::parse("{1}{2,3}")) == 1);
}

TEST_CASE("Schur and decomposition") {
  FactorPower fp(symmetric_group(3));
  for (auto const& s : fp.simples()) {
    auto L = build_simple<Rational>(fp, s);
    CHECK(multiplicity(L, L) == 1);
    CHECK(multiplicity(L, direct_sum(L, L)) == 2);
    auto parts = decompose(fp, L);
    for (auto const& [t, m] : parts) {
      CHECK(m == (t.id == s.id ? 1U : 0U));
    }
  }
  auto V = vbimodule<Rational>(fp, 1).left;
  for (auto const& [t, m] : decompose(fp, V)) {
    CHECK(m == (t.dclass == 1 ? 1U : 0U));
  }
  auto a = build_simple<Rational>(fp, fp.simples()[1]);
  auto b = build_simple<Rational>(fp, fp.simples()[1]);
  std::size_t total = 0, trivial = 0;
  for (auto const& [t, m] : decompose(fp, tensor(a, b))) {
    total += m * t.dim;
    if (t.id == 0) {
      trivial = m;
    }
  }
  CHECK(total == 9);
  CHECK(trivial == 0);
}

TEST_CASE("simple modules of FP+(S_4) are multiplicative") {
  FactorPower     fp(symmetric_group(4));
  std::mt19937_64 rng(7);
  auto const      E = enumerate(fp.group());
  std::uniform_int_distribution<std::size_t> pick(0, E.size() - 1);
  for (auto const& s : fp.simples()) {
    auto L = build_simple<Rational>(fp, s);
    CHECK(L(FpElement::from_permutation(Permutation::identity(4))) == QMatrix::identity(L.dim()));
    for (int t = 0; t < 200; ++t) {
      auto const& a = E[pick(rng)];
      auto const& b = E[pick(rng)];
      REQUIRE(L(a * b) == L(a) * L(b));
    }
  }
}

TEST_CASE("Hermitian forms") {
  FactorPower fp(symmetric_group(3));
  auto        one = unitarize(fp, fp.simples()[0], build_simple<Complex>(fp, fp.simples()[0]));
  CHECK(one.gram.rows() == 1);
  CHECK(std::abs(one.gram(0, 0) - Complex(1, 0)) < 1e-12);
  CHECK(one.residual == 0);
  for (auto const& s : fp.simples()) {
    auto L    = build_simple<Complex>(fp, s);
    auto form = unitarize(fp, s, L);
    CHECK(form.residual <= 1e-9);
    CHECK(form.min_eigenvalue > 1e-9);
    CHECK((form.gram - form.gram.adjoint()).is_zero());
  }
}

TEST_CASE("generic groups") {
  for (auto const& G : {dihedral_group(4), cyclic_group(4), cyclic_group(3)}) {
    FactorPower fp(G);
    CHECK_FALSE(fp.symmetric());
    std::size_t structure = 0, squares = 0;
    for (auto const& D : fp.dclasses()) {
      structure += D.k() * D.k() * D.maximal_subgroup.order();
    }
    for (auto const& s : fp.simples()) {
      squares += s.dim * s.dim;
      CHECK(restriction_check(fp, s));
      auto L = build_simple<Complex>(fp, s);
      CHECK(unitarize(fp, s, L).residual <= 1e-9);
    }
    CHECK(structure == squares);
  }
  // Only the trivial character of C3 is real, so it alone is its own dual.
  FactorPower fp(cyclic_group(3));
  std::size_t self_dual = 0;
  for (auto const& s : fp.simples_of(fp.dclasses().size() - 1)) {
    self_dual += dual_check(fp, s, build_simple<Complex>(fp, s));
  }
  CHECK(self_dual == 1);

  // Characters of C3 multiply like the group Z/3.
  std::vector<MatrixRep<Complex>> L;
  for (auto const& s : fp.simples()) {
    L.push_back(build_simple<Complex>(fp, s));
  }
  for (std::size_t a = 1; a < L.size(); ++a) {
    for (std::size_t b = 1; b < L.size(); ++b) {
      auto const parts = decompose(fp, tensor(L[a], L[b]));
      REQUIRE(parts.size() == L.size());
      std::size_t const expected = 1 + (a - 1 + b - 1) % 3;
      for (auto const& [t, m] : parts) {
        CHECK(m == (t.id == expected ? 1U : 0U));
      }
    }
  }
}

TEST_CASE("JSON export") {
  FactorPower fp(symmetric_group(2));
  auto        L = build_simple<Rational>(fp, fp.simples().back());
  auto        j = nlohmann::json::parse(export_json(L));
  CHECK(j["schema"] == 1);
  CHECK(j["dim"] == L.dim());
  CHECK(j["mode"] == "exact");
  CHECK(j["matrices"].size() == 3);
  auto C = build_simple<Complex>(fp, fp.simples().back());
  CHECK(nlohmann::json::parse(export_json(C))["mode"] == "float");
}
