#include <map>
#include <vector>

#include "doctest.h"
#include "fplab/errors.hpp"
#include "fplab/symfunc.hpp"
#include "oracles.hpp"

using namespace fplab;

namespace {

  oracle::Part to_oracle(IntegerPartition const& p) {
    oracle::Part out;
    for (auto x : p.parts()) {
      out.push_back(static_cast<int>(x));
    }
    return out;
  }

  oracle::Perm to_oracle(Permutation const& p) {
    oracle::Perm out;
    for (auto x : p.images()) {
      out.push_back(x);
    }
    return out;
  }

  IntegerPartition P(char const* text) {
    return IntegerPartition::parse(text);
  }

}  // namespace

TEST_CASE("partitions") {
  for (int n = 0; n <= 10; ++n) {
    auto mine = IntegerPartition::all(static_cast<std::size_t>(n));
    auto ref  = oracle::partitions(n);
    REQUIRE(mine.size() == ref.size());
    for (std::size_t i = 0; i < mine.size(); ++i) {
      CHECK(to_oracle(mine[i]) == ref[i]);
    }
  }
  CHECK(P("2,4,1").to_string() == "4,2,1");
  CHECK(P("3,1").conjugate().to_string() == "2,1,1");
  CHECK(P("2,2,1").multiplicities() == std::vector<std::size_t>{1, 2, 0, 0, 0});
  CHECK_THROWS_AS(P("a,1"), ValidationError);
}

TEST_CASE("characters agree with the Jacobi-Trudi oracle") {
  for (int n = 1; n <= 7; ++n) {
    auto shapes = IntegerPartition::all(static_cast<std::size_t>(n));
    for (auto const& lambda : shapes) {
      for (auto const& nu : shapes) {
        REQUIRE(mn_character(lambda, nu) == oracle::chi(to_oracle(lambda), to_oracle(nu)));
      }
    }
  }
  CHECK(mn_character(P("3"), P("2,1")) == 1);
  CHECK(mn_character(P("1,1,1"), P("3")) == 1);
  CHECK(mn_character(P("2,1"), P("1,1,1")) == 2);
  CHECK_THROWS_AS(mn_character(P("2,1"), P("2")), ValidationError);
}

TEST_CASE("Kostka numbers and dimensions") {
  for (int n = 1; n <= 7; ++n) {
    auto shapes = IntegerPartition::all(static_cast<std::size_t>(n));
    for (auto const& lambda : shapes) {
      for (auto const& mu : shapes) {
        REQUIRE(kostka(lambda, mu) == oracle::kostka(to_oracle(lambda), to_oracle(mu)));
      }
      CHECK(kostka(lambda, lambda) == 1);
    }
  }
  for (int n = 1; n <= 8; ++n) {
    for (auto const& lambda : IntegerPartition::all(static_cast<std::size_t>(n))) {
      CHECK(specht_dim(lambda) == oracle::dim(to_oracle(lambda)));
    }
  }
  CHECK(kostka(P("2,1"), P("1,1,1")) == 2);
  CHECK(specht_dim(P("2,1")) == 2);
  CHECK(specht_dim(P("2,2")) == 2);
  CHECK(specht_dim(P("4,2,1,1")) == 90);
  CHECK(centralizer_order(P("2,2")) == 8);
}

TEST_CASE("multipartition labels") {
  std::vector<std::size_t> k{3, 1};
  auto                     l = MultiPartition::parse("1=2,1;2=1", k);
  CHECK(l.to_string() == "1=2,1;2=1");
  CHECK(l.dim() == 2);
  CHECK(MultiPartition::parse("1=2,1", k) == l);
  CHECK(MultiPartition::parse("triv", k) == MultiPartition::trivial(k));
  CHECK(MultiPartition::parse("", k).to_string() == "1=3;2=1");
  CHECK_THROWS_AS(MultiPartition::parse("1=2", k), ValidationError);
  CHECK_THROWS_AS(MultiPartition::parse("3=1", k), ValidationError);
  CHECK(MultiPartition::all(k).size() == 3);
  CHECK(MultiPartition::all({0, 2}).front().to_string() == "2=2");
}

TEST_CASE("induced multiplicities") {
  auto rho3 = SetPartition::parse("{1,2}{3}");
  auto triv = MultiPartition::trivial({1, 1, 0});
  CHECK(induced_multiplicity(P("2,1"), rho3, triv) == 1);
  CHECK(induced_multiplicity(P("3"), rho3, triv) == 1);
  CHECK(induced_multiplicity(P("1,1,1"), rho3, triv) == 0);

  auto rho6 = SetPartition::parse("{1,2,3}{4,5,6}");
  for (auto const& lambda : IntegerPartition::all(6)) {
    auto m = induced_multiplicity(lambda, rho6, MultiPartition::trivial({0, 0, 2, 0, 0, 0}));
    CHECK(m == oracle::set_partition_multiplicity(to_oracle(lambda), {3, 3}));
    bool const support = lambda == P("6") || lambda == P("4,2");
    CHECK(m == (support ? 1 : 0));
  }
  CHECK_THROWS_AS(induced_multiplicity(P("2,1"), rho6, triv), ValidationError);
  CHECK_THROWS_AS(induced_multiplicity(P("3,3"), rho6, triv), ValidationError);
}

TEST_CASE("induced tables agree with induced characters") {
  for (int n = 1; n <= 5; ++n) {
    for (auto const& shape : IntegerPartition::all(static_cast<std::size_t>(n))) {
      auto const table = induced_table(shape);
      auto const rho   = SetPartition::from_shape(shape);
      std::vector<int> rgs;
      for (auto b : rho.block_ids()) {
        rgs.push_back(static_cast<int>(b));
      }
      auto const perms = oracle::all_perms(n);
      for (std::size_t b = 0; b < table.labels.size(); ++b) {
        std::map<int, oracle::Part> labels;
        for (std::size_t i = 0; i < table.labels[b].components().size(); ++i) {
          auto const& c = table.labels[b][i];
          if (c.size() > 0) {
            labels[static_cast<int>(i) + 1] = to_oracle(c);
          }
        }
        std::vector<long long> induced;
        for (auto const& g : perms) {
          induced.push_back(oracle::induced_character(g, rgs, labels));
        }
        for (std::size_t a = 0; a < table.lambdas.size(); ++a) {
          long long sum = 0;
          for (std::size_t i = 0; i < perms.size(); ++i) {
            sum += oracle::chi(to_oracle(table.lambdas[a]), oracle::cycle_type(perms[i])) * induced[i];
          }
          CHECK(table.mult[a][b] == sum / oracle::factorial(n));
        }
      }
    }
  }
}

TEST_CASE("Foulkes comparisons") {
  CHECK(foulkes_check(1, 2).ok);
  auto r = foulkes_check(2, 3);
  CHECK(r.ok);
  CHECK(r.rows.size() == 11);
  CHECK_THROWS_AS(foulkes_check(3, 2), ValidationError);
  CHECK_THROWS_AS(foulkes_check(0, 2), ValidationError);
  Limits small;
  small.foulkes_degree = 5;
  CHECK_THROWS_AS(foulkes_check(2, 3, small), SizeLimitError);
}

TEST_CASE("Specht matrices") {
  auto trivial = specht_matrices(P("4"));
  for (auto const& g : trivial.generators) {
    CHECK(g == IntMatrix::identity(1));
  }
  auto sign = specht_matrices(P("1,1,1,1"));
  for (auto const& g : sign.generators) {
    CHECK(g(0, 0) == -1);
  }
  auto G = symmetric_group(3);
  for (auto const& g : G.elements()) {
    CHECK(BigInt(specht_matrix(P("2,1"), g).trace()) == mn_character(P("2,1"), g.cycle_type()));
  }
  auto S4 = symmetric_group(4);
  for (auto const& shape : IntegerPartition::all(4)) {
    for (auto const& a : S4.elements()) {
      for (auto const& b : S4.elements()) {
        REQUIRE(specht_matrix(shape, a * b) == specht_matrix(shape, a) * specht_matrix(shape, b));
      }
      CHECK(specht_matrix(shape, a).trace()
            == oracle::chi(to_oracle(shape), oracle::cycle_type(to_oracle(a))));
    }
  }
  Limits small;
  small.specht_degree = 3;
  CHECK_THROWS_AS(specht_matrices(P("2,2"), small), SizeLimitError);
}
