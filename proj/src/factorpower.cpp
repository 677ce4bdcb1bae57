// fplab - factorpower semigroups and their simple modules

#include "fplab/factorpower.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "json.hpp"

#include "fplab/errors.hpp"
#include "fplab/kernels.hpp"

namespace fplab {

  ////////////////////////////////////////////////////////////////////////
  // FpElement
  ////////////////////////////////////////////////////////////////////////

  FpElement::FpElement(std::size_t degree) : degree_(degree) {
    if (degree > kMaxDegree) {
      throw ValidationError("relations are limited to degree "
                            + std::to_string(kMaxDegree));
    }
  }

  FpElement FpElement::from_columns(std::vector<std::uint32_t> const& columns) {
    FpElement e(columns.size());
    for (std::size_t m = 0; m < columns.size(); ++m) {
      if (columns.size() < 32 && (columns[m] >> columns.size()) != 0) {
        throw ValidationError("column " + std::to_string(m + 1)
                              + " names a point outside the degree");
      }
      e.columns_[m] = columns[m];
    }
    return e;
  }

  FpElement FpElement::from_permutation(Permutation const& g) {
    FpElement e(g.degree());
    for (std::size_t m = 0; m < g.degree(); ++m) {
      e.insert(m, g[m]);
    }
    return e;
  }

  FpElement FpElement::parse_rows(std::string_view text) {
    std::vector<std::string_view> rows;
    while (true) {
      auto slash = text.find('/');
      rows.push_back(text.substr(0, slash));
      if (slash == std::string_view::npos) {
        break;
      }
      text.remove_prefix(slash + 1);
    }
    std::size_t const n = rows.size();
    FpElement         e(n);
    for (std::size_t m = 0; m < n; ++m) {
      if (rows[m].size() != n) {
        throw ValidationError("relation row " + std::to_string(m + 1)
                              + " has length " + std::to_string(rows[m].size())
                              + ", expected " + std::to_string(n));
      }
      for (std::size_t x = 0; x < n; ++x) {
        if (rows[m][x] == '1') {
          e.insert(m, x);
        } else if (rows[m][x] != '0') {
          throw ValidationError("relation rows may only contain 0 and 1");
        }
      }
    }
    return e;
  }

  FpElement FpElement::parse_json(std::string_view text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (nlohmann::json::parse_error const& ex) {
      throw ValidationError(std::string("relation JSON: ") + ex.what());
    }
    if (!j.is_array()) {
      throw ValidationError("relation JSON must be an array of arrays");
    }
    std::size_t const n = j.size();
    FpElement         e(n);
    for (std::size_t m = 0; m < n; ++m) {
      if (!j[m].is_array()) {
        throw ValidationError("relation JSON must be an array of arrays");
      }
      for (auto const& v : j[m]) {
        if (!v.is_number_unsigned() || v.get<std::size_t>() == 0
            || v.get<std::size_t>() > n) {
          throw ValidationError("relation JSON points must be in 1.."
                                + std::to_string(n));
        }
        e.insert(m, v.get<std::size_t>() - 1);
      }
    }
    return e;
  }

  bool FpElement::has_full_support() const noexcept {
    for (std::size_t m = 0; m < degree_; ++m) {
      if (columns_[m] == 0) {
        return false;
      }
    }
    return true;
  }

  FpElement FpElement::operator*(FpElement const& b) const {
    if (b.degree_ != degree_) {
      throw ValidationError("multiplying relations of different degrees");
    }
    FpElement out(degree_);
    for (std::size_t m = 0; m < degree_; ++m) {
      std::uint32_t acc = 0;
      for (auto bits = b.columns_[m]; bits != 0; bits &= bits - 1) {
        acc |= columns_[static_cast<std::size_t>(std::countr_zero(bits))];
      }
      out.columns_[m] = acc;
    }
    return out;
  }

  std::string FpElement::to_rows() const {
    std::string s;
    for (std::size_t m = 0; m < degree_; ++m) {
      if (m > 0) {
        s += '/';
      }
      for (std::size_t x = 0; x < degree_; ++x) {
        s += contains(m, x) ? '1' : '0';
      }
    }
    return s;
  }

  std::string FpElement::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (std::size_t m = 0; m < degree_; ++m) {
      nlohmann::json col = nlohmann::json::array();
      for (std::size_t x = 0; x < degree_; ++x) {
        if (contains(m, x)) {
          col.push_back(x + 1);
        }
      }
      j.push_back(std::move(col));
    }
    return j.dump();
  }

  std::size_t FpElementHash::operator()(FpElement const& e) const noexcept {
    std::size_t h = 1469598103934665603ULL ^ e.degree();
    for (std::size_t m = 0; m < e.degree(); ++m) {
      h = (h ^ e.column(m)) * 1099511628211ULL;
    }
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // Classes of subsets
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void check_degree(PermutationGroup const& G, FpElement const& e) {
      if (e.degree() != G.degree()) {
        throw ValidationError("relation of degree " + std::to_string(e.degree())
                              + " used with a group of degree "
                              + std::to_string(G.degree()));
      }
    }

    bool inside(FpElement const& e, Permutation const& g) {
      for (std::size_t m = 0; m < e.degree(); ++m) {
        if (!e.contains(m, g[m])) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  FpElement canonical_from_subset(PermutationGroup const&         G,
                                  std::vector<Permutation> const& subset) {
    if (subset.empty()) {
      throw ValidationError("the empty subset is not an element of FP+");
    }
    FpElement e(G.degree());
    for (auto const& g : subset) {
      if (!G.contains(g)) {
        throw ValidationError("permutation " + g.to_cycles()
                              + " is not in the group");
      }
      for (std::size_t m = 0; m < G.degree(); ++m) {
        e.insert(m, g[m]);
      }
    }
    return e;
  }

  std::vector<Permutation> saturate(PermutationGroup const& G,
                                    FpElement const&        e) {
    check_degree(G, e);
    std::vector<Permutation> out;
    for (auto const& g : G.elements()) {
      if (inside(e, g)) {
        out.push_back(g);
      }
    }
    return out;
  }

  bool is_member_saturation(PermutationGroup const& G,
                            FpElement const&        relation) {
    check_degree(G, relation);
    if (!relation.has_full_support()) {
      return false;
    }
    auto sat = saturate(G, relation);
    return !sat.empty() && canonical_from_subset(G, sat) == relation;
  }

  namespace {
    // Kuhn's augmenting path algorithm on rows -> columns, with one row and
    // one column removed.
    bool perfect_matching(FpElement const& r,
                          std::size_t      skip_row,
                          std::size_t      skip_col) {
      std::size_t const        n = r.degree();
      std::vector<std::size_t> owner(n, n);  // column -> row
      std::vector<char>        visited(n);

      std::function<bool(std::size_t)> augment = [&](std::size_t row) {
        for (auto bits = r.column(row); bits != 0; bits &= bits - 1) {
          auto x = static_cast<std::size_t>(std::countr_zero(bits));
          if (x == skip_col || visited[x]) {
            continue;
          }
          visited[x] = 1;
          if (owner[x] == n || augment(owner[x])) {
            owner[x] = row;
            return true;
          }
        }
        return false;
      };
      for (std::size_t row = 0; row < n; ++row) {
        if (row == skip_row) {
          continue;
        }
        std::fill(visited.begin(), visited.end(), 0);
        if (!augment(row)) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  bool is_member_matching(FpElement const& relation) {
    if (!relation.has_full_support()) {
      return false;
    }
    for (std::size_t m = 0; m < relation.degree(); ++m) {
      for (auto bits = relation.column(m); bits != 0; bits &= bits - 1) {
        auto x = static_cast<std::size_t>(std::countr_zero(bits));
        if (!perfect_matching(relation, m, x)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_member(PermutationGroup const& G, FpElement const& relation) {
    check_degree(G, relation);
    if (G.is_full_symmetric()) {
      return is_member_matching(relation);
    }
    return is_member_saturation(G, relation);
  }

  FpElement star(PermutationGroup const& G, FpElement const& a) {
    auto sat = saturate(G, a);
    if (sat.empty()) {
      throw ValidationError("relation is not an element of FP+");
    }
    for (auto& g : sat) {
      g = g.inverse();
    }
    return canonical_from_subset(G, sat);
  }

  std::vector<FpElement> enumerate(PermutationGroup const& G,
                                   Limits const&           limits) {
    if (G.order() > limits.enumerate_order) {
      throw SizeLimitError(
          "enumerating FP+ sweeps 2^|G| subsets and |G| = "
          + std::to_string(G.order()) + " exceeds the cap of "
          + std::to_string(limits.enumerate_order)
          + " (budget \"enumerate\"); use the idempotent and character "
            "commands instead");
    }
    if (G.degree() > kMaxDegree) {
      throw ValidationError("relations are limited to degree "
                            + std::to_string(kMaxDegree));
    }
    return kernels::enumerate_parallel(G);
  }

  ////////////////////////////////////////////////////////////////////////
  // Idempotents and Green's relations
  ////////////////////////////////////////////////////////////////////////

  std::vector<IdempotentInfo> idempotents(PermutationGroup const& G) {
    std::vector<IdempotentInfo> out;
    for (auto& rho : SetPartition::all(G.degree())) {
      auto H = block_stabilizer(G, rho);
      if (orbits(H) != rho) {
        continue;
      }
      auto element = canonical_from_subset(G, H.elements());
      out.push_back({std::move(rho), std::move(H), element});
    }
    std::stable_sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      auto sa = a.partition.shape(), sb = b.partition.shape();
      if (sa != sb) {
        return sa > sb;
      }
      return a.partition < b.partition;
    });
    return out;
  }

  namespace {
    // Column m of g * b is g(b_m).
    FpElement left_translate(Permutation const& g, FpElement const& b) {
      FpElement out(b.degree());
      for (std::size_t m = 0; m < b.degree(); ++m) {
        std::uint32_t acc = 0;
        for (auto bits = b.column(m); bits != 0; bits &= bits - 1) {
          acc |= std::uint32_t{1} << g[static_cast<std::size_t>(std::countr_zero(bits))];
        }
        out.set_column(m, acc);
      }
      return out;
    }

    // Column m of b * g is b_{g(m)}.
    FpElement right_translate(FpElement const& b, Permutation const& g) {
      FpElement out(b.degree());
      for (std::size_t m = 0; m < b.degree(); ++m) {
        out.set_column(m, b.column(g[m]));
      }
      return out;
    }

    std::vector<std::size_t> column_sizes(FpElement const& e) {
      std::vector<std::size_t> s(e.degree());
      for (std::size_t m = 0; m < e.degree(); ++m) {
        s[m] = static_cast<std::size_t>(std::popcount(e.column(m)));
      }
      std::sort(s.begin(), s.end());
      return s;
    }
  }  // namespace

  bool green_related(PermutationGroup const& G,
                     FpElement const&        a,
                     FpElement const&        b,
                     GreenRelation           rel) {
    check_degree(G, a);
    check_degree(G, b);
    if (column_sizes(a) != column_sizes(b)) {
      return false;
    }
    auto left = [&] {
      return std::any_of(G.elements().begin(), G.elements().end(),
                         [&](auto const& g) { return left_translate(g, b) == a; });
    };
    auto right = [&] {
      return std::any_of(G.elements().begin(), G.elements().end(),
                         [&](auto const& g) { return right_translate(b, g) == a; });
    };
    switch (rel) {
      case GreenRelation::L:
        return left();
      case GreenRelation::R:
        return right();
      case GreenRelation::H:
        return left() && right();
      case GreenRelation::D:
        for (auto const& g : G.elements()) {
          auto gb = left_translate(g, b);
          for (auto const& h : G.elements()) {
            if (right_translate(gb, h) == a) {
              return true;
            }
          }
        }
        return false;
    }
    return false;
  }

  DClassInfo dclass_of(PermutationGroup const& G, IdempotentInfo const& e) {
    DClassInfo D;
    auto const& H = e.subgroup;
    D.normalizer  = normalizer(G, H);
    D.conjugators = cosets(G, D.normalizer, CosetSide::right);
    for (auto const& g : D.conjugators) {
      auto Hi  = conjugate(H, g);
      auto rho = e.partition.image(g.inverse());
      auto el  = canonical_from_subset(G, Hi.elements());
      D.idempotents.push_back({std::move(rho), std::move(Hi), el});
    }
    D.maximal_subgroup = quotient_table(D.normalizer, H);
    D.shape            = e.partition.shape();
    return D;
  }

  std::vector<DClassInfo> dclasses(PermutationGroup const& G) {
    std::vector<DClassInfo>  out;
    std::set<SetPartition>   covered;
    for (auto const& e : idempotents(G)) {
      if (covered.count(e.partition) != 0) {
        continue;
      }
      auto D = dclass_of(G, e);
      for (auto const& f : D.idempotents) {
        covered.insert(f.partition);
      }
      out.push_back(std::move(D));
    }
    return out;
  }

  std::optional<FpElement> trace_product(PermutationGroup const& G,
                                         DClassInfo const&       D,
                                         FpElement const&        a,
                                         FpElement const&        b) {
    auto const& apex = D.apex();
    if (!green_related(G, a, apex, GreenRelation::D)
        || !green_related(G, b, apex, GreenRelation::D)) {
      throw ValidationError("trace product of elements outside the D-class");
    }
    auto p = a * b;
    if (green_related(G, p, apex, GreenRelation::D)) {
      return p;
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Units
  ////////////////////////////////////////////////////////////////////////

  UnitsAndKernel units_and_kernel(GroupAction const& action,
                                  Limits const&      limits) {
    std::vector<Permutation> kernel;
    for (std::size_t i = 0; i < action.group.order(); ++i) {
      if (action.action[i].is_identity()) {
        kernel.push_back(action.group[i]);
      }
    }
    UnitsAndKernel out;
    out.kernel = PermutationGroup::from_elements(action.group.degree(),
                                                 std::move(kernel));
    out.units    = quotient_table(action.group, out.kernel);
    out.faithful = action.image(limits);
    return out;
  }

  UnitsAndKernel units_and_kernel(PermutationGroup const& G) {
    std::vector<Permutation> gens(G.generators().begin(), G.generators().end());
    return units_and_kernel(make_action(G, G.degree(), gens));
  }

}  // namespace fplab
