// fplab - factorpower semigroups and their simple modules

#include "fplab/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "fplab/errors.hpp"

namespace fplab {

  ////////////////////////////////////////////////////////////////////////
  // Permutation
  ////////////////////////////////////////////////////////////////////////

  Permutation::Permutation(std::vector<Point> images)
      : images_(std::move(images)) {
    if (images_.size() > 255) {
      throw ValidationError("permutation degree above 255");
    }
    std::vector<bool> seen(images_.size(), false);
    for (auto x : images_) {
      if (x >= images_.size() || seen[x]) {
        throw ValidationError("images do not form a bijection");
      }
      seen[x] = true;
    }
  }

  Permutation Permutation::identity(std::size_t degree) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    return Permutation(std::move(images));
  }

  Permutation Permutation::from_cycles(std::size_t degree, std::string_view text) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    std::vector<bool> used(degree, false);

    auto fail = [&](std::string const& why) {
      throw ValidationError("bad cycle notation \"" + std::string(text)
                            + "\": " + why);
    };

    std::size_t i = 0;
    while (i < text.size()) {
      char c = text[i];
      if (c == ' ') {
        ++i;
        continue;
      }
      if (c != '(') {
        fail("expected '('");
      }
      ++i;
      std::vector<std::size_t> cycle;
      std::size_t              value  = 0;
      bool                     digits = false;
      for (; i < text.size() && text[i] != ')'; ++i) {
        char d = text[i];
        if (d >= '0' && d <= '9') {
          value  = value * 10 + static_cast<std::size_t>(d - '0');
          digits = true;
        } else if (d == ' ' || d == ',') {
          if (digits) {
            cycle.push_back(value);
          }
          value  = 0;
          digits = false;
        } else {
          fail(std::string("unexpected character '") + d + "'");
        }
      }
      if (i == text.size()) {
        fail("unterminated cycle");
      }
      ++i;  // ')'
      if (digits) {
        cycle.push_back(value);
      }
      for (auto p : cycle) {
        if (p == 0 || p > degree) {
          fail("point " + std::to_string(p) + " outside 1.."
               + std::to_string(degree));
        }
        if (used[p - 1]) {
          fail("point " + std::to_string(p) + " repeated");
        }
        used[p - 1] = true;
      }
      for (std::size_t j = 0; j < cycle.size(); ++j) {
        images[cycle[j] - 1]
            = static_cast<Point>(cycle[(j + 1) % cycle.size()] - 1);
      }
    }
    return Permutation(std::move(images));
  }

  Permutation Permutation::operator*(Permutation const& rhs) const {
    if (rhs.degree() != degree()) {
      throw ValidationError("composing permutations of different degrees");
    }
    Permutation out;
    out.images_.resize(images_.size());
    for (std::size_t m = 0; m < images_.size(); ++m) {
      out.images_[m] = images_[rhs.images_[m]];
    }
    return out;
  }

  Permutation Permutation::inverse() const {
    Permutation out;
    out.images_.resize(images_.size());
    for (std::size_t m = 0; m < images_.size(); ++m) {
      out.images_[images_[m]] = static_cast<Point>(m);
    }
    return out;
  }

  bool Permutation::is_identity() const noexcept {
    for (std::size_t m = 0; m < images_.size(); ++m) {
      if (images_[m] != m) {
        return false;
      }
    }
    return true;
  }

  IntegerPartition Permutation::cycle_type() const {
    std::vector<bool>        seen(images_.size(), false);
    std::vector<std::size_t> lengths;
    for (std::size_t m = 0; m < images_.size(); ++m) {
      if (seen[m]) {
        continue;
      }
      std::size_t len = 0;
      for (std::size_t x = m; !seen[x]; x = images_[x]) {
        seen[x] = true;
        ++len;
      }
      lengths.push_back(len);
    }
    return IntegerPartition(std::move(lengths));
  }

  std::string Permutation::to_cycles() const {
    std::string       s;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t m = 0; m < images_.size(); ++m) {
      if (seen[m] || images_[m] == m) {
        continue;
      }
      s += '(';
      for (std::size_t x = m; !seen[x]; x = images_[x]) {
        seen[x] = true;
        if (x != m) {
          s += ' ';
        }
        s += std::to_string(x + 1);
      }
      s += ')';
    }
    return s.empty() ? "()" : s;
  }

  std::string Permutation::to_one_line() const {
    std::string s;
    bool const  wide = images_.size() > 9;
    for (std::size_t m = 0; m < images_.size(); ++m) {
      if (wide && m > 0) {
        s += ',';
      }
      s += std::to_string(images_[m] + 1);
    }
    return s;
  }

  std::size_t PermutationHash::operator()(Permutation const& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : p.images()) {
      h = (h ^ x) * 1099511628211ULL;
    }
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // PermutationGroup
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // BFS closure; returns std::nullopt when the cap is exceeded.
    std::optional<std::vector<Permutation>>
    closure(std::size_t                     degree,
            std::vector<Permutation> const& generators,
            std::size_t                     cap) {
      std::unordered_set<Permutation, PermutationHash> seen;
      std::deque<Permutation>                          queue;
      auto id = Permutation::identity(degree);
      seen.insert(id);
      queue.push_back(id);
      while (!queue.empty()) {
        Permutation x = std::move(queue.front());
        queue.pop_front();
        for (auto const& g : generators) {
          Permutation y = x * g;
          if (seen.insert(y).second) {
            if (seen.size() > cap) {
              return std::nullopt;
            }
            queue.push_back(std::move(y));
          }
        }
      }
      std::vector<Permutation> out(seen.begin(), seen.end());
      std::sort(out.begin(), out.end());
      return out;
    }
  }  // namespace

  std::optional<std::size_t>
  PermutationGroup::index_of(Permutation const& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || *it != p) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - elements_.begin());
  }

  bool PermutationGroup::is_subgroup_of(PermutationGroup const& other) const {
    if (degree_ != other.degree_) {
      return false;
    }
    return std::all_of(elements_.begin(), elements_.end(), [&](auto const& x) {
      return other.contains(x);
    });
  }

  bool PermutationGroup::is_full_symmetric() const noexcept {
    std::size_t f = 1;
    for (std::size_t i = 2; i <= degree_; ++i) {
      f *= i;
      if (f > elements_.size()) {
        return false;
      }
    }
    return f == elements_.size();
  }

  PermutationGroup PermutationGroup::from_elements(std::size_t              degree,
                                                   std::vector<Permutation> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty() || !elements.front().is_identity()
        || elements.front().degree() != degree) {
      throw ValidationError("subgroup element list must contain the identity");
    }
    PermutationGroup g;
    g.degree_   = degree;
    g.elements_ = std::move(elements);

    std::vector<Permutation> current{Permutation::identity(degree)};
    for (auto const& x : g.elements_) {
      if (std::binary_search(current.begin(), current.end(), x)) {
        continue;
      }
      g.generators_.push_back(x);
      auto c = closure(degree, g.generators_, g.elements_.size());
      if (!c) {
        throw ValidationError("element list is not closed under composition");
      }
      current = std::move(*c);
    }
    if (current != g.elements_) {
      throw ValidationError("element list is not closed under composition");
    }
    return g;
  }

  PermutationGroup generate_group(std::size_t                     degree,
                                  std::vector<Permutation> const& generators,
                                  Limits const&                   limits) {
    for (auto const& g : generators) {
      if (g.degree() != degree) {
        throw ValidationError("generator " + g.to_cycles() + " has degree "
                              + std::to_string(g.degree()) + ", expected "
                              + std::to_string(degree));
      }
    }
    auto c = closure(degree, generators, limits.group_order);
    if (!c) {
      throw SizeLimitError("group order exceeds the cap of "
                           + std::to_string(limits.group_order)
                           + " elements (budget \"group\")");
    }
    PermutationGroup g;
    g.degree_     = degree;
    g.elements_   = std::move(*c);
    g.generators_ = generators;
    return g;
  }

  PermutationGroup symmetric_group(std::size_t n, Limits const& limits) {
    std::vector<Permutation> gens;
    if (n >= 2) {
      gens.push_back(Permutation::from_cycles(n, "(1 2)"));
      std::vector<Point> shift(n);
      for (std::size_t i = 0; i < n; ++i) {
        shift[i] = static_cast<Point>((i + 1) % n);
      }
      gens.emplace_back(std::move(shift));
    }
    return generate_group(n, gens, limits);
  }

  PermutationGroup cyclic_group(std::size_t n) {
    std::vector<Point> shift(n);
    for (std::size_t i = 0; i < n; ++i) {
      shift[i] = static_cast<Point>((i + 1) % n);
    }
    return generate_group(n, {Permutation(std::move(shift))});
  }

  PermutationGroup dihedral_group(std::size_t n) {
    if (n < 3) {
      throw ValidationError("dihedral group needs n >= 3");
    }
    std::vector<Point> shift(n), flip(n);
    for (std::size_t i = 0; i < n; ++i) {
      shift[i] = static_cast<Point>((i + 1) % n);
      flip[i]  = static_cast<Point>((n - i) % n);
    }
    return generate_group(
        n, {Permutation(std::move(shift)), Permutation(std::move(flip))});
  }

  PermutationGroup trivial_group(std::size_t degree) {
    return generate_group(degree, {});
  }

  PermutationGroup parse_group(std::string_view spec, Limits const& limits) {
    while (!spec.empty() && spec.front() == ' ') {
      spec.remove_prefix(1);
    }
    while (!spec.empty() && spec.back() == ' ') {
      spec.remove_suffix(1);
    }
    if (spec.empty()) {
      throw ValidationError("empty group spec");
    }
    auto family_degree = [&]() -> std::optional<std::size_t> {
      if (spec.size() < 2) {
        return std::nullopt;
      }
      std::size_t n = 0;
      for (char c : spec.substr(1)) {
        if (c < '0' || c > '9') {
          return std::nullopt;
        }
        n = n * 10 + static_cast<std::size_t>(c - '0');
      }
      return n;
    };
    if (spec.front() == 'S' || spec.front() == 'C' || spec.front() == 'D') {
      auto n = family_degree();
      if (!n || *n == 0) {
        throw ValidationError("bad group family \"" + std::string(spec) + "\"");
      }
      if (*n > 255) {
        throw ValidationError("degree above 255");
      }
      switch (spec.front()) {
        case 'S':
          return symmetric_group(*n, limits);
        case 'C':
          return cyclic_group(*n);
        default:
          return dihedral_group(*n);
      }
    }

    std::optional<std::size_t> degree;
    auto colon = spec.find(':');
    if (colon != std::string_view::npos) {
      std::size_t n = 0;
      for (char c : spec.substr(0, colon)) {
        if (c < '0' || c > '9') {
          throw ValidationError("bad degree prefix in \"" + std::string(spec)
                                + "\"");
        }
        n = n * 10 + static_cast<std::size_t>(c - '0');
      }
      degree = n;
      spec.remove_prefix(colon + 1);
    }
    std::vector<std::string_view> pieces;
    while (true) {
      auto semi = spec.find(';');
      pieces.push_back(spec.substr(0, semi));
      if (semi == std::string_view::npos) {
        break;
      }
      spec.remove_prefix(semi + 1);
    }
    if (!degree) {
      std::size_t max_point = 0, value = 0;
      for (auto piece : pieces) {
        for (char c : piece) {
          if (c >= '0' && c <= '9') {
            value = value * 10 + static_cast<std::size_t>(c - '0');
          } else {
            max_point = std::max(max_point, value);
            value     = 0;
          }
        }
        max_point = std::max(max_point, value);
        value     = 0;
      }
      degree = max_point;
    }
    if (*degree == 0 || *degree > 255) {
      throw ValidationError("group degree must be in 1..255");
    }
    std::vector<Permutation> gens;
    for (auto piece : pieces) {
      if (piece.find_first_not_of(' ') == std::string_view::npos) {
        continue;
      }
      gens.push_back(Permutation::from_cycles(*degree, piece));
    }
    return generate_group(*degree, gens, limits);
  }

  ////////////////////////////////////////////////////////////////////////
  // SetPartition
  ////////////////////////////////////////////////////////////////////////

  SetPartition::SetPartition(std::vector<std::size_t> block_of) {
    std::unordered_map<std::size_t, std::size_t> relabel;
    for (auto& b : block_of) {
      auto [it, inserted] = relabel.emplace(b, relabel.size());
      b                   = it->second;
    }
    count_    = relabel.size();
    block_of_ = std::move(block_of);
  }

  SetPartition SetPartition::discrete(std::size_t n) {
    std::vector<std::size_t> b(n);
    std::iota(b.begin(), b.end(), std::size_t{0});
    return SetPartition(std::move(b));
  }

  SetPartition SetPartition::full(std::size_t n) {
    return SetPartition(std::vector<std::size_t>(n, 0));
  }

  SetPartition
  SetPartition::from_blocks(std::size_t                                  n,
                            std::vector<std::vector<std::size_t>> const& blocks) {
    std::vector<std::size_t> b(n, n);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (blocks[i].empty()) {
        throw ValidationError("empty block");
      }
      for (auto m : blocks[i]) {
        if (m >= n || b[m] != n) {
          throw ValidationError("blocks do not partition the point set");
        }
        b[m] = i;
      }
    }
    if (std::find(b.begin(), b.end(), n) != b.end()) {
      throw ValidationError("blocks do not cover the point set");
    }
    return SetPartition(std::move(b));
  }

  SetPartition SetPartition::parse(std::string_view text) {
    std::vector<std::vector<std::size_t>> blocks;
    std::size_t                           max_point = 0;
    std::size_t                           i         = 0;
    auto fail = [&]() {
      throw ValidationError("malformed set partition \"" + std::string(text)
                            + "\"");
    };
    while (i < text.size()) {
      if (text[i] == ' ') {
        ++i;
        continue;
      }
      if (text[i] != '{') {
        fail();
      }
      ++i;
      std::vector<std::size_t> block;
      std::size_t              value  = 0;
      bool                     digits = false;
      for (; i < text.size() && text[i] != '}'; ++i) {
        char c = text[i];
        if (c >= '0' && c <= '9') {
          value  = value * 10 + static_cast<std::size_t>(c - '0');
          digits = true;
        } else if (c == ',' || c == ' ') {
          if (digits) {
            block.push_back(value);
          }
          value  = 0;
          digits = false;
        } else {
          fail();
        }
      }
      if (i == text.size()) {
        fail();
      }
      ++i;
      if (digits) {
        block.push_back(value);
      }
      for (auto& m : block) {
        if (m == 0) {
          fail();
        }
        max_point = std::max(max_point, m);
        --m;
      }
      blocks.push_back(std::move(block));
    }
    return from_blocks(max_point, blocks);
  }

  SetPartition SetPartition::from_shape(IntegerPartition const& shape) {
    std::vector<std::size_t> b;
    for (std::size_t i = 0; i < shape.length(); ++i) {
      b.insert(b.end(), shape[i], i);
    }
    return SetPartition(std::move(b));
  }

  std::vector<SetPartition> SetPartition::all(std::size_t n) {
    std::vector<SetPartition> out;
    if (n == 0) {
      out.emplace_back();
      return out;
    }
    std::vector<std::size_t> rgs(n, 0);
    std::vector<std::size_t> max_so_far(n, 0);
    while (true) {
      out.emplace_back(rgs);
      // next restricted growth string in lexicographic order
      std::size_t i = n - 1;
      while (i > 0 && rgs[i] == max_so_far[i - 1] + 1) {
        --i;
      }
      if (i == 0) {
        break;
      }
      ++rgs[i];
      max_so_far[i] = std::max(max_so_far[i - 1], rgs[i]);
      for (std::size_t j = i + 1; j < n; ++j) {
        rgs[j]        = 0;
        max_so_far[j] = max_so_far[i];
      }
    }
    return out;
  }

  std::vector<std::vector<std::size_t>> SetPartition::blocks() const {
    std::vector<std::vector<std::size_t>> out(count_);
    for (std::size_t m = 0; m < block_of_.size(); ++m) {
      out[block_of_[m]].push_back(m);
    }
    return out;
  }

  IntegerPartition SetPartition::shape() const {
    std::vector<std::size_t> sizes(count_, 0);
    for (auto b : block_of_) {
      ++sizes[b];
    }
    return IntegerPartition(std::move(sizes));
  }

  SetPartition SetPartition::join(SetPartition const& other) const {
    if (other.degree() != degree()) {
      throw ValidationError("joining set partitions of different degrees");
    }
    std::size_t const        n = degree();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };
    auto unite = [&](std::size_t a, std::size_t b) {
      a = find(a);
      b = find(b);
      if (a != b) {
        parent[std::max(a, b)] = std::min(a, b);
      }
    };
    std::vector<std::size_t> first_a(count_, n), first_b(other.count_, n);
    for (std::size_t m = 0; m < n; ++m) {
      auto& fa = first_a[block_of_[m]];
      if (fa == n) {
        fa = m;
      } else {
        unite(fa, m);
      }
      auto& fb = first_b[other.block_of_[m]];
      if (fb == n) {
        fb = m;
      } else {
        unite(fb, m);
      }
    }
    std::vector<std::size_t> b(n);
    for (std::size_t m = 0; m < n; ++m) {
      b[m] = find(m);
    }
    return SetPartition(std::move(b));
  }

  SetPartition SetPartition::image(Permutation const& g) const {
    if (g.degree() != degree()) {
      throw ValidationError("permutation degree does not match partition");
    }
    std::vector<std::size_t> b(degree());
    for (std::size_t m = 0; m < degree(); ++m) {
      b[g[m]] = block_of_[m];
    }
    return SetPartition(std::move(b));
  }

  bool SetPartition::refines(SetPartition const& other) const {
    std::vector<std::size_t> target(count_, other.count_);
    for (std::size_t m = 0; m < degree(); ++m) {
      auto& t = target[block_of_[m]];
      if (t == other.count_) {
        t = other.block_of_[m];
      } else if (t != other.block_of_[m]) {
        return false;
      }
    }
    return true;
  }

  std::string SetPartition::to_string() const {
    std::string s;
    for (auto const& block : blocks()) {
      s += '{';
      for (std::size_t i = 0; i < block.size(); ++i) {
        if (i > 0) {
          s += ',';
        }
        s += std::to_string(block[i] + 1);
      }
      s += '}';
    }
    return s;
  }

  ////////////////////////////////////////////////////////////////////////
  // GroupTable
  ////////////////////////////////////////////////////////////////////////

  std::size_t GroupTable::inverse(std::size_t a) const {
    for (std::size_t b = 0; b < order(); ++b) {
      if (table[a][b] == identity()) {
        return b;
      }
    }
    throw InconsistencyError("group table element without an inverse");
  }

  bool GroupTable::is_group_law() const {
    std::size_t const n = order();
    if (n == 0) {
      return false;
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (table[a].size() != n || table[0][a] != a || table[a][0] != a) {
        return false;
      }
      std::vector<bool> row(n, false);
      for (std::size_t b = 0; b < n; ++b) {
        if (table[a][b] >= n || row[table[a][b]]) {
          return false;
        }
        row[table[a][b]] = true;
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (table[table[a][b]][c] != table[a][table[b][c]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  namespace {
    std::size_t element_order(GroupTable const& t, std::size_t a) {
      std::size_t k = 1;
      for (std::size_t x = a; x != t.identity(); x = t.multiply(x, a)) {
        ++k;
      }
      return k;
    }

    // Greedy generating set: add an element whenever it is outside the
    // subgroup generated so far.
    std::vector<std::size_t> table_generators(GroupTable const& t) {
      std::vector<std::size_t> gens;
      std::vector<bool>        in(t.order(), false);
      in[t.identity()] = true;
      for (std::size_t a = 0; a < t.order(); ++a) {
        if (in[a]) {
          continue;
        }
        gens.push_back(a);
        std::vector<std::size_t> members;
        for (std::size_t x = 0; x < t.order(); ++x) {
          if (in[x]) {
            members.push_back(x);
          }
        }
        for (std::size_t i = 0; i < members.size(); ++i) {
          for (auto g : gens) {
            auto y = t.multiply(members[i], g);
            if (!in[y]) {
              in[y] = true;
              members.push_back(y);
            }
          }
        }
      }
      return gens;
    }
  }  // namespace

  bool are_isomorphic(GroupTable const& a, GroupTable const& b) {
    if (a.order() != b.order()) {
      return false;
    }
    std::size_t const n    = a.order();
    auto const        gens = table_generators(a);
    std::vector<std::size_t> order_a(n), order_b(n);
    for (std::size_t x = 0; x < n; ++x) {
      order_a[x] = element_order(a, x);
      order_b[x] = element_order(b, x);
    }
    {
      auto sa = order_a, sb = order_b;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (sa != sb) {
        return false;
      }
    }
    std::vector<std::size_t> images(gens.size());

    // Try to extend gens[i] -> images[i] to a bijective homomorphism.
    auto try_extend = [&]() {
      std::vector<std::size_t> phi(n, n);
      std::vector<bool>        hit(n, false);
      std::vector<std::size_t> queue{a.identity()};
      phi[a.identity()] = b.identity();
      hit[b.identity()] = true;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        auto x = queue[i];
        for (std::size_t j = 0; j < gens.size(); ++j) {
          auto y  = a.multiply(x, gens[j]);
          auto fy = b.multiply(phi[x], images[j]);
          if (phi[y] == n) {
            if (hit[fy]) {
              return false;
            }
            phi[y]  = fy;
            hit[fy] = true;
            queue.push_back(y);
          } else if (phi[y] != fy) {
            return false;
          }
        }
      }
      if (queue.size() != n) {
        return false;
      }
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (phi[a.multiply(x, y)] != b.multiply(phi[x], phi[y])) {
            return false;
          }
        }
      }
      return true;
    };

    std::function<bool(std::size_t)> search = [&](std::size_t i) {
      if (i == gens.size()) {
        return try_extend();
      }
      for (std::size_t y = 0; y < n; ++y) {
        if (order_b[y] != order_a[gens[i]]) {
          continue;
        }
        images[i] = y;
        if (search(i + 1)) {
          return true;
        }
      }
      return false;
    };
    return search(0);
  }

  ////////////////////////////////////////////////////////////////////////
  // Subgroups, cosets, classes
  ////////////////////////////////////////////////////////////////////////

  SetPartition orbits(PermutationGroup const& group) {
    std::size_t const        n = group.degree();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };
    for (auto const& g : group.generators()) {
      for (std::size_t m = 0; m < n; ++m) {
        auto a = find(m), b = find(g[m]);
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      }
    }
    std::vector<std::size_t> b(n);
    for (std::size_t m = 0; m < n; ++m) {
      b[m] = find(m);
    }
    return SetPartition(std::move(b));
  }

  PermutationGroup block_stabilizer(PermutationGroup const& group,
                                    SetPartition const&     partition) {
    if (partition.degree() != group.degree()) {
      throw ValidationError("partition degree does not match the group");
    }
    std::vector<Permutation> kept;
    for (auto const& g : group.elements()) {
      bool ok = true;
      for (std::size_t m = 0; m < group.degree() && ok; ++m) {
        ok = partition.same_block(m, g[m]);
      }
      if (ok) {
        kept.push_back(g);
      }
    }
    return PermutationGroup::from_elements(group.degree(), std::move(kept));
  }

  PermutationGroup normalizer(PermutationGroup const& group,
                              PermutationGroup const& sub) {
    if (!sub.is_subgroup_of(group)) {
      throw ValidationError("subgroup is not contained in the group");
    }
    std::vector<Permutation> kept;
    for (auto const& g : group.elements()) {
      auto const gi = g.inverse();
      bool       ok = true;
      for (auto const& s : sub.generators()) {
        if (!sub.contains(g * s * gi)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        kept.push_back(g);
      }
    }
    return PermutationGroup::from_elements(group.degree(), std::move(kept));
  }

  std::vector<Permutation> cosets(PermutationGroup const& group,
                                  PermutationGroup const& sub,
                                  CosetSide               side) {
    if (!sub.is_subgroup_of(group)) {
      throw ValidationError("subgroup is not contained in the group");
    }
    std::vector<bool>        seen(group.order(), false);
    std::vector<Permutation> reps;
    for (std::size_t i = 0; i < group.order(); ++i) {
      if (seen[i]) {
        continue;
      }
      auto const& g = group[i];
      reps.push_back(g);
      for (auto const& h : sub.elements()) {
        auto x = side == CosetSide::left ? g * h : h * g;
        seen[*group.index_of(x)] = true;
      }
    }
    return reps;
  }

  GroupTable quotient_table(PermutationGroup const& normalizer,
                            PermutationGroup const& sub) {
    if (!sub.is_subgroup_of(normalizer)) {
      throw ValidationError("subgroup is not contained in the group");
    }
    for (auto const& g : normalizer.generators()) {
      auto gi = g.inverse();
      for (auto const& s : sub.generators()) {
        if (!sub.contains(g * s * gi)) {
          throw ValidationError("subgroup is not normal");
        }
      }
    }
    GroupTable t;
    t.labels = cosets(normalizer, sub, CosetSide::left);
    std::vector<std::size_t> coset_of(normalizer.order());
    for (std::size_t c = 0; c < t.labels.size(); ++c) {
      for (auto const& h : sub.elements()) {
        coset_of[*normalizer.index_of(t.labels[c] * h)] = c;
      }
    }
    std::size_t const k = t.labels.size();
    t.table.assign(k, std::vector<std::size_t>(k));
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        t.table[a][b] = coset_of[*normalizer.index_of(t.labels[a] * t.labels[b])];
      }
    }
    return t;
  }

  std::vector<std::vector<std::size_t>>
  conjugacy_classes(PermutationGroup const& group) {
    std::vector<bool>                     seen(group.order(), false);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < group.order(); ++i) {
      if (seen[i]) {
        continue;
      }
      std::vector<std::size_t> cls;
      for (auto const& g : group.elements()) {
        auto j = *group.index_of(g * group[i] * g.inverse());
        if (!seen[j]) {
          seen[j] = true;
          cls.push_back(j);
        }
      }
      std::sort(cls.begin(), cls.end());
      classes.push_back(std::move(cls));
    }
    return classes;
  }

  PermutationGroup conjugate(PermutationGroup const& sub, Permutation const& h) {
    auto const               hi = h.inverse();
    std::vector<Permutation> elts;
    elts.reserve(sub.order());
    for (auto const& s : sub.elements()) {
      elts.push_back(hi * s * h);
    }
    return PermutationGroup::from_elements(sub.degree(), std::move(elts));
  }

  ////////////////////////////////////////////////////////////////////////
  // GroupAction
  ////////////////////////////////////////////////////////////////////////

  PermutationGroup GroupAction::image(Limits const& limits) const {
    std::vector<Permutation> gens;
    for (auto const& g : group.generators()) {
      gens.push_back(action[*group.index_of(g)]);
    }
    return generate_group(points, gens, limits);
  }

  GroupAction make_action(PermutationGroup const&         group,
                          std::size_t                     points,
                          std::vector<Permutation> const& generator_images) {
    auto const& gens = group.generators();
    if (generator_images.size() != gens.size()) {
      throw ValidationError("need one image per generator");
    }
    for (auto const& x : generator_images) {
      if (x.degree() != points) {
        throw ValidationError("generator image has the wrong degree");
      }
    }
    GroupAction a;
    a.group  = group;
    a.points = points;
    std::vector<std::optional<Permutation>> image(group.order());
    image[0] = Permutation::identity(points);
    std::vector<std::size_t> queue{0};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      auto const x = queue[q];
      for (std::size_t j = 0; j < gens.size(); ++j) {
        auto y  = *group.index_of(group[x] * gens[j]);
        auto fy = *image[x] * generator_images[j];
        if (!image[y]) {
          image[y] = fy;
          queue.push_back(y);
        } else if (*image[y] != fy) {
          throw ValidationError("generator images do not define a homomorphism");
        }
      }
    }
    a.action.reserve(group.order());
    for (auto& x : image) {
      a.action.push_back(std::move(*x));
    }
    return a;
  }

}  // namespace fplab
