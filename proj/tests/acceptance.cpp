// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit status
// when any criterion fails.

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fplab/cli.hpp"
#include "fplab/dualsym.hpp"
#include "fplab/factorpower.hpp"
#include "fplab/repcore.hpp"
#include "fplab/symfunc.hpp"
#include "oracles.hpp"

using namespace fplab;

namespace {

  template <typename... Args>
  bool fail(std::string& detail, Args const&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    detail = os.str();
    return false;
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

  std::vector<int> to_oracle(SetPartition const& rho) {
    std::vector<int> out;
    for (auto b : rho.block_ids()) {
      out.push_back(static_cast<int>(b));
    }
    return out;
  }

  //! Labels of a simple of FP+(S_n) keyed by block size, as the oracle
  //! expects them.
  std::map<int, oracle::Part> oracle_labels(SimpleModuleDescriptor const& s) {
    std::map<int, oracle::Part> out;
    auto const&                 comps = s.label.partition->components();
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (comps[i].size() > 0) {
        out[static_cast<int>(i) + 1] = to_oracle(comps[i]);
      }
    }
    return out;
  }

  // 1 --------------------------------------------------------------------
  bool idempotent_census(std::string& d) {
    std::size_t const expected[] = {0, 1, 2, 5, 15};
    for (int n = 2; n <= 4; ++n) {
      auto const G    = symmetric_group(static_cast<std::size_t>(n));
      auto const list = idempotents(G);
      if (list.size() != expected[n] || list.size() != oracle::set_partitions(n).size()) {
        return fail(d, "idempotents(S", n, ") has ", list.size(), " entries");
      }
      auto const             perms = oracle::all_perms(n);
      auto const             brute = oracle::enumerate_fp(perms, n);
      std::set<oracle::Cols> census;
      for (auto const& e : brute) {
        if (oracle::multiply(perms, e, e) == e) {
          census.insert(e);
        }
      }
      std::set<oracle::Cols> enumerated;
      for (auto const& e : enumerate(G)) {
        enumerated.insert(to_oracle(e));
      }
      if (enumerated != std::set<oracle::Cols>(brute.begin(), brute.end())) {
        return fail(d, "enumerate(S", n, ") has ", enumerated.size(), " elements, brute force ",
                    brute.size());
      }
      std::set<oracle::Cols> listed;
      for (auto const& e : list) {
        listed.insert(to_oracle(e.element));
      }
      if (census != listed) {
        return fail(d, "brute force census of FP+(S", n, ") finds ", census.size(),
                    " idempotents");
      }
    }
    return true;
  }

  // 2 --------------------------------------------------------------------
  bool green_equivalence(std::string& d) {
    auto const        G     = symmetric_group(3);
    auto const        perms = oracle::all_perms(3);
    auto const        E     = oracle::enumerate_fp(perms, 3);
    std::size_t const N     = E.size();
    std::map<oracle::Cols, std::size_t> index;
    for (std::size_t i = 0; i < N; ++i) {
      index[E[i]] = i;
    }
    std::vector<std::vector<std::size_t>> prod(N, std::vector<std::size_t>(N));
    for (std::size_t a = 0; a < N; ++a) {
      for (std::size_t b = 0; b < N; ++b) {
        prod[a][b] = index.at(oracle::multiply(perms, E[a], E[b]));
      }
    }
    using Ideal = std::vector<bool>;
    std::vector<Ideal> left(N, Ideal(N)), right(N, Ideal(N)), two(N, Ideal(N));
    for (std::size_t a = 0; a < N; ++a) {
      left[a][a] = right[a][a] = two[a][a] = true;
      for (std::size_t s = 0; s < N; ++s) {
        left[a][prod[s][a]]  = true;
        right[a][prod[a][s]] = true;
        two[a][prod[s][a]]   = true;
        two[a][prod[a][s]]   = true;
        for (std::size_t t = 0; t < N; ++t) {
          two[a][prod[prod[s][a]][t]] = true;
        }
      }
    }
    for (std::size_t a = 0; a < N; ++a) {
      auto const x = from_oracle(E[a]);
      for (std::size_t b = 0; b < N; ++b) {
        auto const y = from_oracle(E[b]);
        bool const L = left[a] == left[b];
        bool const R = right[a] == right[b];
        bool       D = false;
        for (std::size_t c = 0; c < N && !D; ++c) {
          D = left[a] == left[c] && right[c] == right[b];
        }
        if (L != green_related(G, x, y, GreenRelation::L)
            || R != green_related(G, x, y, GreenRelation::R)
            || (L && R) != green_related(G, x, y, GreenRelation::H)
            || D != green_related(G, x, y, GreenRelation::D)) {
          return fail(d, "disagreement at ", x.to_rows(), ", ", y.to_rows());
        }
        if (D != (two[a] == two[b])) {
          return fail(d, "D and J differ at ", x.to_rows(), ", ", y.to_rows());
        }
      }
    }
    return true;
  }

  // 3 --------------------------------------------------------------------
  bool inverse_traces(std::string& d) {
    for (int n = 3; n <= 4; ++n) {
      auto const G     = symmetric_group(static_cast<std::size_t>(n));
      auto const perms = oracle::all_perms(n);
      for (auto const& D : dclasses(G)) {
        auto const h = D.subgroup().order();
        for (auto const& ei : D.idempotents) {
          for (auto const& ej : D.idempotents) {
            auto const p = trace_product(G, D, ei.element, ej.element);
            if (p != trace_product(G, D, ej.element, ei.element)) {
              return fail(d, "idempotents do not commute in shape ", D.shape.to_string());
            }
            auto const product = oracle::multiply(perms, to_oracle(ei.element), to_oracle(ej.element));
            if (ei.partition == ej.partition) {
              if (p != ei.element || from_oracle(product) != ei.element) {
                return fail(d, "idempotent ", ei.partition.to_string(), " is not idempotent");
              }
            } else {
              // Every element of D has a saturation of size |H|; the
              // product of two distinct idempotents has a larger one.
              if (p.has_value() || oracle::saturate(perms, product).size() <= h) {
                return fail(d, ei.partition.to_string(), " * ", ej.partition.to_string(),
                            " stays in the D-class");
              }
            }
          }
        }
      }
    }
    return true;
  }

  // 4 --------------------------------------------------------------------
  bool dimension_identity(std::string& d) {
    for (int n = 2; n <= 5; ++n) {
      long long formula = 0;
      for (auto const& lambda : oracle::partitions(n)) {
        std::map<int, int> k;
        for (int part : lambda) {
          ++k[part];
        }
        long long denominator = 1, group = 1;
        for (auto [i, ki] : k) {
          group *= oracle::factorial(ki);
          for (int j = 0; j < ki; ++j) {
            denominator *= oracle::factorial(i);
          }
        }
        long long const n_lambda = oracle::factorial(n) / (group * denominator);
        formula += n_lambda * n_lambda * group;
      }
      auto const brute = static_cast<long long>(oracle::fstar_size(n));
      auto const un    = static_cast<std::size_t>(n);
      if (formula != brute || fstar_count(un) != brute
          || BigInt(fstar_enumerate(un).size()) != brute
          || fstar_structure(un).semisimple_dimension != brute) {
        return fail(d, "n=", n, ": formula ", formula, ", enumeration ", brute);
      }
      if ((n == 2 && brute != 3) || (n == 3 && brute != 16)) {
        return fail(d, "n=", n, ": |F*_n| = ", brute);
      }
    }
    return true;
  }

  // 5 --------------------------------------------------------------------
  bool simple_dimensions(std::string& d) {
    FactorPower              s3(symmetric_group(3));
    std::vector<std::size_t> dims;
    std::size_t              squares = 0;
    for (auto const& s : s3.simples()) {
      dims.push_back(build_simple<Rational>(s3, s).dim());
      squares += dims.back() * dims.back();
    }
    std::sort(dims.begin(), dims.end());
    if (dims != std::vector<std::size_t>{1, 1, 1, 2, 3} || squares != 16) {
      return fail(d, "FP+(S3) dimensions wrong");
    }
    FactorPower s4(symmetric_group(4));
    squares = 0;
    for (auto const& s : s4.simples()) {
      auto const rgs = to_oracle(s4.dclasses()[s.dclass].idempotents.front().partition);
      long long  N   = 0;
      for (auto const& g : oracle::all_perms(4)) {
        N += oracle::permutes_blocks(g, rgs);
      }
      long long dim_x = 1;
      for (auto const& [size, label] : oracle_labels(s)) {
        dim_x *= oracle::dim(label);
      }
      auto const L = build_simple<Rational>(s4, s);
      if (static_cast<long long>(L.dim()) != 24 / N * dim_x) {
        return fail(d, "simple ", s.label.to_string(), " of FP+(S4) has dimension ", L.dim(),
                    ", expected ", 24 / N * dim_x);
      }
      squares += L.dim() * L.dim();
    }
    if (squares != oracle::fstar_size(4)) {
      return fail(d, "sum of squares for FP+(S4) is ", squares);
    }
    return true;
  }

  // 6 --------------------------------------------------------------------
  bool restriction(std::string& d) {
    for (int n = 3; n <= 4; ++n) {
      FactorPower fp(symmetric_group(static_cast<std::size_t>(n)));
      for (auto const& s : fp.simples()) {
        if (!restriction_check(fp, s)) {
          return fail(d, "restriction_check fails for ", s.label.to_string());
        }
        auto const L      = build_simple<Rational>(fp, s);
        auto const rgs    = to_oracle(fp.dclasses()[s.dclass].idempotents.front().partition);
        auto const labels = oracle_labels(s);
        for (auto const& g : fp.group().elements()) {
          auto const expected = oracle::induced_character(to_oracle(g), rgs, labels);
          if (L(FpElement::from_permutation(g)).trace() != Rational(expected)) {
            return fail(d, "character of ", s.label.to_string(), " at ", g.to_cycles());
          }
        }
      }
    }
    return true;
  }

  // 7 --------------------------------------------------------------------
  bool kostka_cross_check(std::string& d) {
    for (int n = 1; n <= 8; ++n) {
      for (auto const& shape : IntegerPartition::all(static_cast<std::size_t>(n))) {
        auto const table = induced_table(shape);
        for (std::size_t a = 0; a < table.lambdas.size(); ++a) {
          BigInt sum = 0;
          for (std::size_t b = 0; b < table.labels.size(); ++b) {
            BigInt dim = 1;
            for (auto const& c : table.labels[b].components()) {
              dim *= oracle::dim(to_oracle(c));
            }
            sum += dim * table.mult[a][b];
          }
          if (sum != oracle::kostka(to_oracle(table.lambdas[a]), to_oracle(shape))) {
            return fail(d, "lambda ", table.lambdas[a].to_string(), ", shape ", shape.to_string());
          }
        }
      }
    }
    return true;
  }

  // 8 --------------------------------------------------------------------
  bool foulkes(std::string& d) {
    for (auto [k, m] : {std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 4}}) {
      if (!foulkes_check(static_cast<std::size_t>(k), static_cast<std::size_t>(m)).ok) {
        return fail(d, "(", k, ",", m, ") fails");
      }
    }
    auto const r = foulkes_check(2, 3);
    for (auto const& row : r.rows) {
      auto const lambda  = to_oracle(row.lambda);
      bool const support = row.lambda == IntegerPartition::parse("6")
                           || row.lambda == IntegerPartition::parse("4,2");
      if ((row.mult_km != 0) != support) {
        return fail(d, "support of the (2,3) module at ", row.lambda.to_string());
      }
      if (row.mult_km != oracle::set_partition_multiplicity(lambda, {3, 3})
          || row.mult_mk != oracle::set_partition_multiplicity(lambda, {2, 2, 2})) {
        return fail(d, "permutation character disagrees at ", row.lambda.to_string());
      }
    }
    return true;
  }

  // 9 --------------------------------------------------------------------
  bool unitarity(std::string& d) {
    FactorPower fp(symmetric_group(3));
    for (auto const& s : fp.simples()) {
      auto const L    = build_simple<Complex>(fp, s);
      auto const form = unitarize(fp, s, L);
      auto const Gm   = form.gram;
      double     residual = 0;
      for (auto const& e : L.domain().elements()) {
        auto const diff = L(e).adjoint() * Gm - Gm * L(star(fp.group(), e));
        for (auto const& x : diff.data()) {
          residual = std::max(residual, std::abs(x));
        }
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(to_eigen(Gm));
      double const smallest = eig.eigenvalues().minCoeff();
      if (residual > 1e-9 || smallest <= 1e-9 || form.residual > 1e-9) {
        return fail(d, s.label.to_string(), ": residual ", residual, ", eigenvalue ", smallest);
      }
    }
    return true;
  }

  // 10 -------------------------------------------------------------------
  bool duality(std::string& d) {
    for (int n = 3; n <= 4; ++n) {
      FactorPower fp(symmetric_group(static_cast<std::size_t>(n)));
      for (auto const& s : fp.simples()) {
        if (!dual_check(fp, s, build_simple<Rational>(fp, s))) {
          return fail(d, "S", n, ", simple ", s.label.to_string());
        }
      }
    }
    return true;
  }

  // 11 -------------------------------------------------------------------
  bool tensor_products(std::string& d) {
    for (int n = 2; n <= 3; ++n) {
      FactorPower                      fp(symmetric_group(static_cast<std::size_t>(n)));
      std::vector<MatrixRep<Rational>> L;
      for (auto const& s : fp.simples()) {
        L.push_back(build_simple<Rational>(fp, s));
        if (multiplicity(L.back(), L.back()) != 1) {
          return fail(d, "multiplicity(L, L) != 1 for ", s.label.to_string());
        }
      }
      for (std::size_t a = 0; a < L.size(); ++a) {
        for (std::size_t b = 0; b < L.size(); ++b) {
          std::size_t total = 0;
          for (auto const& [s, m] : decompose(fp, tensor(L[a], L[b]))) {
            total += m * s.dim;
          }
          if (total != L[a].dim() * L[b].dim()) {
            return fail(d, "S", n, ": ", a, " x ", b, " accounts for ", total);
          }
        }
      }
    }
    return true;
  }

  // 12 -------------------------------------------------------------------
  bool determinism(std::string& d) {
    std::vector<std::vector<std::string>> commands = {
        {"enumerate", "--group", "S3", "--dump"},
        {"idempotents", "--group", "S4"},
        {"dclasses", "--group", "S4"},
        {"simples", "--group", "S4"},
        {"multiplicity", "--lambda", "4,2", "--rho", "{1,2,3}{4,5,6}"},
        {"mult-table", "--rho", "2,2,2"},
        {"foulkes", "--k", "2", "--m", "3"},
        {"fstar", "--n", "4"},
        {"correspond", "--n", "3"},
        {"unitarize", "--group", "S3"},
        {"tensor", "--group", "S3", "--left", "3", "--right", "3"},
        {"verify"},
        {"member", "--group", "S3", "--relation", "110/100/001"},
        {"rep", "--group", "S3", "--shape", "2,1", "--label", "triv"},
    };
    for (auto const& base : commands) {
      for (auto const* format : {"tsv", "json"}) {
        auto args = base;
        args.push_back("--format");
        args.push_back(format);
        std::ostringstream out1, err1, out2, err2;
        int const          s1 = cli::run(args, out1, err1);
        int const          s2 = cli::run(args, out2, err2);
        if (s1 != 0 || s2 != 0) {
          return fail(d, base.front(), " exits with ", s1, " / ", s2, ": ", err1.str());
        }
        if (out1.str() != out2.str() || out1.str().empty()) {
          return fail(d, base.front(), " output differs between runs");
        }
      }
    }
    return true;
  }

}  // namespace

int main() {
  struct Criterion {
    int                               number;
    char const*                       title;
    std::function<bool(std::string&)> run;
  };
  std::vector<Criterion> const criteria = {
      {1, "idempotent census", idempotent_census},
      {2, "Green's relations", green_equivalence},
      {3, "inverse traces", inverse_traces},
      {4, "dimension identity for F*_n", dimension_identity},
      {5, "simple module dimensions", simple_dimensions},
      {6, "restriction to the units", restriction},
      {7, "Kostka cross-check", kostka_cross_check},
      {8, "Foulkes desk cases", foulkes},
      {9, "unitarizability", unitarity},
      {10, "duality", duality},
      {11, "tensor complete reducibility", tensor_products},
      {12, "determinism of CLI output", determinism},
  };
  int failures = 0;
  for (auto const& c : criteria) {
    std::string detail;
    bool        ok = false;
    try {
      ok = c.run(detail);
    } catch (std::exception const& e) {
      detail = e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title;
    if (!ok) {
      std::cout << " (" << detail << ")";
      ++failures;
    }
    std::cout << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
