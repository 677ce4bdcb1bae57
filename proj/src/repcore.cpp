// fplab - factorpower semigroups and their simple modules

#include "fplab/repcore.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "json.hpp"

namespace fplab {

  ////////////////////////////////////////////////////////////////////////
  // FpDomain
  ////////////////////////////////////////////////////////////////////////

  FpDomain::FpDomain(Kind kind, PermutationGroup G, std::vector<FpElement> elements)
      : kind_(kind), group_(std::move(G)), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      index_.emplace(elements_[i], i);
    }
  }

  FpDomain FpDomain::full(PermutationGroup const& G, Limits const& limits) {
    return FpDomain(Kind::full, G, enumerate(G, limits));
  }

  FpDomain FpDomain::units(PermutationGroup const& G) {
    std::vector<FpElement> elts;
    for (auto const& g : G.elements()) {
      elts.push_back(FpElement::from_permutation(g));
    }
    return FpDomain(Kind::units, G, std::move(elts));
  }

  FpDomain FpDomain::generated(PermutationGroup const& G) {
    std::vector<FpElement> base;
    for (auto const& g : G.elements()) {
      base.push_back(FpElement::from_permutation(g));
    }
    for (auto const& e : idempotents(G)) {
      base.push_back(e.element);
    }
    std::set<FpElement> all(base.begin(), base.end());
    for (auto const& a : base) {
      for (auto const& b : base) {
        all.insert(a * b);
      }
    }
    return FpDomain(Kind::generated, G, {all.begin(), all.end()});
  }

  FpDomain FpDomain::standard(PermutationGroup const& G, Limits const& limits) {
    if (G.order() <= 6) {
      return full(G, limits);
    }
    return generated(G);
  }

  std::optional<std::size_t> FpDomain::index_of(FpElement const& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  ////////////////////////////////////////////////////////////////////////
  // FactorPower
  ////////////////////////////////////////////////////////////////////////

  std::string SimpleLabel::to_string() const {
    if (partition) {
      return partition->to_string();
    }
    return std::to_string(index);
  }

  namespace {
    FpElement coset_class(Permutation const& c, FpElement const& apex) {
      return FpElement::from_permutation(c) * apex;
    }
  }  // namespace

  FactorPower::FactorPower(PermutationGroup G, Limits limits, std::uint64_t seed)
      : group_(std::move(G)),
        limits_(limits),
        seed_(seed),
        symmetric_(group_.is_full_symmetric()),
        dclasses_(fplab::dclasses(group_)) {
    for (std::size_t d = 0; d < dclasses_.size(); ++d) {
      auto const& D    = dclasses_[d];
      auto const& H    = D.subgroup();
      auto const& N    = D.normalizer;
      auto const& tab  = D.maximal_subgroup;
      LClassData  data;
      data.coset_of_normalizer.assign(N.order(), 0);
      for (std::size_t t = 0; t < tab.order(); ++t) {
        for (auto const& h : H.elements()) {
          data.coset_of_normalizer[*N.index_of(tab.labels[t] * h)] = t;
        }
      }
      data.cosets = cosets(group_, H, CosetSide::left);
      for (std::size_t i = 0; i < data.cosets.size(); ++i) {
        auto const& c = data.cosets[i];
        data.index.emplace(coset_class(c, D.apex()), i);
        std::size_t j = 0;
        for (; j < D.k(); ++j) {
          if (N.contains(D.conjugators[j] * c)) {
            break;
          }
        }
        if (j == D.k()) {
          throw InconsistencyError("coset outside every g_j^-1 N");
        }
        auto nu = D.conjugators[j] * c;
        data.position.emplace_back(j, data.coset_of_normalizer[*N.index_of(nu)]);
      }
      if (data.index.size() != data.cosets.size()) {
        throw InconsistencyError("distinct cosets of H with equal classes");
      }
      lclass_.push_back(std::move(data));

      if (symmetric_) {
        irreducibles_.emplace_back();
        for (auto& l : MultiPartition::all(D.shape.multiplicities())) {
          SimpleModuleDescriptor s;
          s.id              = simples_.size();
          s.dclass          = d;
          s.label.dim       = l.dim().convert_to<std::size_t>();
          s.label.partition = std::move(l);
          s.dim             = D.k() * s.label.dim;
          simples_.push_back(std::move(s));
        }
      } else {
        irreducibles_.push_back(numeric_irreducibles(tab, seed_));
        auto const& irr = irreducibles_.back();
        for (std::size_t x = 0; x < irr.size(); ++x) {
          SimpleModuleDescriptor s;
          s.id          = simples_.size();
          s.dclass      = d;
          s.label.index = x;
          s.label.dim   = irr[x].dim;
          s.dim         = D.k() * s.label.dim;
          simples_.push_back(std::move(s));
        }
      }
    }
  }

  std::vector<SimpleModuleDescriptor> FactorPower::simples_of(std::size_t dclass) const {
    std::vector<SimpleModuleDescriptor> out;
    for (auto const& s : simples_) {
      if (s.dclass == dclass) {
        out.push_back(s);
      }
    }
    return out;
  }

  std::size_t FactorPower::dclass_of_partition(SetPartition const& rho) const {
    for (std::size_t d = 0; d < dclasses_.size(); ++d) {
      for (auto const& e : dclasses_[d].idempotents) {
        if (e.partition == rho) {
          return d;
        }
      }
    }
    throw ValidationError("partition " + rho.to_string()
                          + " is not the orbit partition of an idempotent");
  }

  std::size_t FactorPower::dclass_of_shape(IntegerPartition const& shape) const {
    std::optional<std::size_t> found;
    for (std::size_t d = 0; d < dclasses_.size(); ++d) {
      if (dclasses_[d].shape == shape) {
        if (found) {
          throw ValidationError("several D-classes have shape " + shape.to_string()
                                + "; select one by --partition");
        }
        found = d;
      }
    }
    if (!found) {
      throw ValidationError("no D-class has shape " + shape.to_string());
    }
    return *found;
  }

  SimpleModuleDescriptor const& FactorPower::find_simple(std::size_t        dclass,
                                                         std::string const& label) const {
    if (dclass >= dclasses_.size()) {
      throw ValidationError("D-class index out of range");
    }
    if (symmetric_) {
      auto l = MultiPartition::parse(label, dclasses_[dclass].shape.multiplicities());
      for (auto const& s : simples_) {
        if (s.dclass == dclass && s.label.partition == l) {
          return s;
        }
      }
    } else {
      std::size_t idx = 0;
      try {
        idx = label.empty() ? 0 : std::stoul(label);
      } catch (std::exception const&) {
        throw ValidationError("label must be an irreducible index, got \"" + label + "\"");
      }
      for (auto const& s : simples_) {
        if (s.dclass == dclass && s.label.index == idx) {
          return s;
        }
      }
    }
    throw ValidationError("label \"" + label + "\" out of range for this D-class");
  }

  DomainPtr FactorPower::standard_domain() const {
    if (!domain_) {
      domain_ = std::make_shared<FpDomain const>(FpDomain::standard(group_, limits_));
    }
    return domain_;
  }

  std::optional<std::size_t> FactorPower::l_class_index(std::size_t      dclass,
                                                        FpElement const& e) const {
    auto const& idx = lclass_.at(dclass).index;
    auto        it  = idx.find(e);
    if (it == idx.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::vector<Permutation> const& FactorPower::l_class_cosets(std::size_t dclass) const {
    return lclass_.at(dclass).cosets;
  }

  std::pair<std::size_t, std::size_t> FactorPower::l_class_position(std::size_t dclass,
                                                                    std::size_t i) const {
    return lclass_.at(dclass).position.at(i);
  }

  std::size_t FactorPower::table_index(std::size_t dclass, Permutation const& nu) const {
    auto const& N = dclasses_.at(dclass).normalizer;
    auto        i = N.index_of(nu);
    if (!i) {
      throw ValidationError("permutation " + nu.to_cycles() + " is not in the normalizer");
    }
    return lclass_[dclass].coset_of_normalizer[*i];
  }

  std::vector<GroupIrreducible> const& FactorPower::irreducibles(std::size_t dclass) const {
    return irreducibles_.at(dclass);
  }

  ////////////////////////////////////////////////////////////////////////
  // Labels of the maximal subgroup
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Block permutations induced by nu in N on the blocks of each size,
    // blocks of a size listed by their minimal elements. Entry i-1 is the
    // permutation of the blocks of size i (degree k_i).
    std::vector<Permutation> block_permutations(SetPartition const& rho,
                                                Permutation const&  nu) {
      auto const               blocks = rho.blocks();
      std::size_t const        n      = rho.degree();
      std::vector<std::size_t> position(blocks.size());
      std::vector<std::size_t> count(n + 1, 0);
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        position[b] = count[blocks[b].size()]++;
      }
      std::vector<std::vector<Point>> images(n);
      for (std::size_t i = 1; i <= n; ++i) {
        images[i - 1].resize(count[i]);
      }
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        auto const target = rho.block_of(nu[blocks[b].front()]);
        images[blocks[b].size() - 1][position[b]] = static_cast<Point>(position[target]);
      }
      std::vector<Permutation> out;
      for (auto& im : images) {
        out.emplace_back(std::move(im));
      }
      return out;
    }

    IntMatrix symmetric_label_matrix(SetPartition const&   rho,
                                     MultiPartition const& l,
                                     Permutation const&    nu,
                                     Limits const&         limits) {
      auto const perms = block_permutations(rho, nu);
      IntMatrix  x     = IntMatrix::identity(1);
      for (std::size_t i = 0; i < perms.size(); ++i) {
        if (perms[i].degree() == 0) {
          continue;
        }
        x = kron(x, specht_matrix(l[i], perms[i], limits));
      }
      return x;
    }

    BigInt symmetric_label_character(SetPartition const&   rho,
                                     MultiPartition const& l,
                                     Permutation const&    nu) {
      auto const perms = block_permutations(rho, nu);
      BigInt     chi   = 1;
      for (std::size_t i = 0; i < perms.size(); ++i) {
        if (perms[i].degree() == 0) {
          continue;
        }
        chi *= mn_character(l[i], perms[i].cycle_type());
      }
      return chi;
    }

    void check_descriptor(FactorPower const& fp, SimpleModuleDescriptor const& desc) {
      if (desc.id >= fp.simples().size() || fp.simples()[desc.id].dclass != desc.dclass
          || fp.simples()[desc.id].label.index != desc.label.index
          || fp.simples()[desc.id].label.partition != desc.label.partition) {
        throw ValidationError("simple module descriptor out of range");
      }
    }

    template <typename T>
    std::vector<Matrix<T>> label_matrices(FactorPower const&            fp,
                                          SimpleModuleDescriptor const& desc) {
      auto const&            D = fp.dclasses()[desc.dclass];
      std::vector<Matrix<T>> out;
      if (desc.label.partition) {
        for (auto const& nu : D.maximal_subgroup.labels) {
          out.push_back(convert<T>(symmetric_label_matrix(
              D.idempotents.front().partition, *desc.label.partition, nu, fp.limits())));
        }
        return out;
      }
      if constexpr (ScalarTraits<T>::exact) {
        throw ValidationError("exact arithmetic needs a full symmetric group; "
                              "this maximal subgroup uses numeric irreducibles");
      } else {
        return fp.irreducibles(desc.dclass).at(desc.label.index).matrices;
      }
    }

    DomainPtr resolve(FactorPower const& fp, DomainPtr domain) {
      if (!domain) {
        return fp.standard_domain();
      }
      if (domain->group() != fp.group()) {
        throw ValidationError("domain belongs to a different group");
      }
      return domain;
    }
  }  // namespace

  Complex label_character(FactorPower const&            fp,
                          SimpleModuleDescriptor const& desc,
                          Permutation const&            nu) {
    check_descriptor(fp, desc);
    auto const& D = fp.dclasses()[desc.dclass];
    if (desc.label.partition) {
      if (!D.normalizer.contains(nu)) {
        throw ValidationError("permutation is not in the normalizer");
      }
      auto chi = symmetric_label_character(D.idempotents.front().partition,
                                           *desc.label.partition, nu);
      return Complex(chi.convert_to<double>(), 0.0);
    }
    return fp.irreducibles(desc.dclass)
        .at(desc.label.index)
        .character.at(fp.table_index(desc.dclass, nu));
  }

  ////////////////////////////////////////////////////////////////////////
  // Bimodule and simple modules
  ////////////////////////////////////////////////////////////////////////

  template <typename T>
  VBimodule<T> vbimodule(FactorPower const& fp, std::size_t dclass, DomainPtr domain) {
    domain            = resolve(fp, std::move(domain));
    auto const& D     = fp.dclasses().at(dclass);
    auto const& cos   = fp.l_class_cosets(dclass);
    std::size_t const dim = cos.size();
    std::vector<FpElement> basis;
    for (auto const& c : cos) {
      basis.push_back(coset_class(c, D.apex()));
    }

    VBimodule<T> v;
    v.left = MatrixRep<T>(dim, domain, [&fp, dclass, basis, dim](FpElement const& s) {
      Matrix<T> m(dim, dim);
      for (std::size_t i = 0; i < dim; ++i) {
        if (auto j = fp.l_class_index(dclass, s * basis[i])) {
          m(*j, i) = T(1);
        }
      }
      return m;
    });
    for (auto const& nu : D.maximal_subgroup.labels) {
      Matrix<T> r(dim, dim);
      for (std::size_t i = 0; i < dim; ++i) {
        auto j = fp.l_class_index(dclass, coset_class(cos[i] * nu, D.apex()));
        if (!j) {
          throw InconsistencyError("right action left the L-class");
        }
        r(*j, i) = T(1);
      }
      v.right.push_back(std::move(r));
    }
    return v;
  }

  template <typename T>
  MatrixRep<T> build_simple(FactorPower const&            fp,
                            SimpleModuleDescriptor const& desc,
                            DomainPtr                     domain) {
    check_descriptor(fp, desc);
    domain             = resolve(fp, std::move(domain));
    auto const& D      = fp.dclasses()[desc.dclass];
    std::size_t const k  = D.k();
    std::size_t const dx = desc.label.dim;
    auto xs              = label_matrices<T>(fp, desc);

    std::vector<FpElement> reps;
    for (auto const& g : D.conjugators) {
      reps.push_back(coset_class(g.inverse(), D.apex()));
    }
    std::size_t const dclass = desc.dclass;
    return MatrixRep<T>(k * dx, domain, [&fp, dclass, reps, xs, k, dx](FpElement const& s) {
      Matrix<T> m(k * dx, k * dx);
      for (std::size_t i = 0; i < k; ++i) {
        auto idx = fp.l_class_index(dclass, s * reps[i]);
        if (!idx) {
          continue;
        }
        auto [j, t]   = fp.l_class_position(dclass, *idx);
        auto const& x = xs[t];
        for (std::size_t a = 0; a < dx; ++a) {
          for (std::size_t b = 0; b < dx; ++b) {
            m(j * dx + a, i * dx + b) = x(a, b);
          }
        }
      }
      return m;
    });
  }

  bool restriction_check(FactorPower const& fp, SimpleModuleDescriptor const& desc) {
    check_descriptor(fp, desc);
    auto const& G     = fp.group();
    auto const& D     = fp.dclasses()[desc.dclass];
    auto const& N     = D.normalizer;
    auto        units = std::make_shared<FpDomain const>(FpDomain::units(G));

    if (desc.label.partition) {
      auto const  L   = build_simple<Rational>(fp, desc, units);
      auto const& rho = D.idempotents.front().partition;
      for (auto const& sigma : G.elements()) {
        Rational induced = 0;
        for (auto const& t : G.elements()) {
          auto c = t.inverse() * sigma * t;
          if (N.contains(c)) {
            induced += Rational(symmetric_label_character(rho, *desc.label.partition, c));
          }
        }
        induced /= Rational(static_cast<long long>(N.order()));
        if (L(FpElement::from_permutation(sigma)).trace() != induced) {
          return false;
        }
      }
      return true;
    }
    auto const L = build_simple<Complex>(fp, desc, units);
    for (auto const& sigma : G.elements()) {
      Complex induced = 0;
      for (auto const& t : G.elements()) {
        auto c = t.inverse() * sigma * t;
        if (N.contains(c)) {
          induced += label_character(fp, desc, c);
        }
      }
      induced /= static_cast<double>(N.order());
      if (std::abs(L(FpElement::from_permutation(sigma)).trace() - induced) > 1e-6) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Intertwiners
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Rows of T V(s) - L(s) T = 0, T of size dl x dv, unknown (p, q) at
    // p * dv + q.
    template <typename T, typename Nullspace>
    void add_equations(Nullspace& ns, Matrix<T> const& l, Matrix<T> const& v) {
      std::size_t const dl = l.rows();
      std::size_t const dv = v.rows();
      std::vector<T>    row(dl * dv);
      for (std::size_t a = 0; a < dl; ++a) {
        for (std::size_t b = 0; b < dv; ++b) {
          std::fill(row.begin(), row.end(), T(0));
          bool nonzero = false;
          for (std::size_t c = 0; c < dv; ++c) {
            if (v(c, b) != T(0)) {
              row[a * dv + c] += v(c, b);
              nonzero = true;
            }
          }
          for (std::size_t c = 0; c < dl; ++c) {
            if (l(a, c) != T(0)) {
              row[c * dv + b] -= l(a, c);
              nonzero = true;
            }
          }
          if (!nonzero) {
            continue;
          }
          if constexpr (ScalarTraits<T>::exact) {
            ns.add_row(row);
          } else {
            ns.add_row(std::span<Complex const>(row));
          }
        }
      }
    }

    bool same_domain(FpDomain const& a, FpDomain const& b) {
      return &a == &b || (a.group() == b.group() && a.elements() == b.elements());
    }
  }  // namespace

  template <typename T>
  std::size_t multiplicity(MatrixRep<T> const& L, MatrixRep<T> const& V, std::uint64_t seed) {
    if (!same_domain(L.domain(), V.domain())) {
      throw ValidationError("multiplicity of representations over different domains");
    }
    using Nullspace = typename ScalarTraits<T>::Nullspace;
    Nullspace         ns(L.dim() * V.dim());
    std::size_t const size = L.domain().size();
    for (std::size_t i = 0; i < size; ++i) {
      add_equations<T>(ns, L.matrix(i), V.matrix(i));
      if constexpr (ScalarTraits<T>::exact) {
        if (ns.full()) {
          return 0;
        }
      }
    }
    std::size_t const nullity = ns.nullity();
    if (L.domain().kind() != FpDomain::Kind::generated || nullity == 0) {
      return nullity;
    }
    auto const&     G = L.domain().group();
    std::mt19937_64 rng(seed);
    for (int sample = 0; sample < 1000; ++sample) {
      std::vector<Permutation> subset;
      while (subset.empty()) {
        for (auto const& g : G.elements()) {
          if (rng() & 1U) {
            subset.push_back(g);
          }
        }
      }
      auto s = canonical_from_subset(G, subset);
      add_equations<T>(ns, L(s), V(s));
    }
    if (ns.nullity() != nullity) {
      throw InconsistencyError("the generated domain under-constrains the intertwiner "
                               "system: random elements reduced its solution space from "
                               + std::to_string(nullity) + " to "
                               + std::to_string(ns.nullity()));
    }
    return nullity;
  }

  template <typename T>
  MatrixRep<T> tensor(MatrixRep<T> const& a, MatrixRep<T> const& b) {
    if (!same_domain(a.domain(), b.domain())) {
      throw ValidationError("tensor product of representations over different domains");
    }
    return MatrixRep<T>(a.dim() * b.dim(), a.domain_ptr(),
                        [a, b](FpElement const& s) { return kron(a(s), b(s)); });
  }

  template <typename T>
  MatrixRep<T> direct_sum(MatrixRep<T> const& a, MatrixRep<T> const& b) {
    if (!same_domain(a.domain(), b.domain())) {
      throw ValidationError("direct sum of representations over different domains");
    }
    return MatrixRep<T>(a.dim() + b.dim(), a.domain_ptr(), [a, b](FpElement const& s) {
      return fplab::direct_sum(a(s), b(s));
    });
  }

  template <typename T>
  std::vector<std::pair<SimpleModuleDescriptor, std::size_t>>
  decompose(FactorPower const& fp, MatrixRep<T> const& V) {
    std::vector<std::pair<SimpleModuleDescriptor, std::size_t>> out;
    std::size_t                                                 total = 0;
    for (auto const& desc : fp.simples()) {
      auto const L = build_simple<T>(fp, desc, V.domain_ptr());
      auto const m = multiplicity(L, V, fp.seed());
      total += m * desc.dim;
      out.emplace_back(desc, m);
    }
    if (total != V.dim()) {
      throw InconsistencyError("decomposition accounts for dimension " + std::to_string(total)
                               + " of " + std::to_string(V.dim()));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Hermitian form and duality
  ////////////////////////////////////////////////////////////////////////

  HermitianForm unitarize(FactorPower const&            fp,
                          SimpleModuleDescriptor const& desc,
                          MatrixRep<Complex> const&     L,
                          double                        tolerance) {
    check_descriptor(fp, desc);
    auto const&       G   = fp.group();
    auto const&       D   = fp.dclasses()[desc.dclass];
    std::size_t const dim = L.dim();
    if (dim != desc.dim) {
      throw ValidationError("representation does not match the descriptor");
    }

    CMatrix g1(dim, dim);
    for (auto const& nu : D.maximal_subgroup.labels) {
      auto const h = L(coset_class(nu, D.apex()));
      g1           = g1 + h.adjoint() * h;
    }

    CMatrix     gram(dim, dim);
    std::size_t rank_total = 0;
    for (std::size_t i = 0; i < D.k(); ++i) {
      auto const p = L(D.idempotents[i].element);
      auto const u = L(FpElement::from_permutation(D.conjugators[i]));
      auto const t = u * p;
      gram         = gram + t.adjoint() * g1 * t;
      rank_total += static_cast<std::size_t>(Eigen::FullPivLU<Eigen::MatrixXcd>(to_eigen(p)).rank());
    }
    if (rank_total != dim) {
      throw NumericalError("images of the idempotents have total rank "
                           + std::to_string(rank_total) + ", expected " + std::to_string(dim));
    }
    Complex const tr = gram.trace();
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) {
        gram(r, c) *= static_cast<double>(dim) / tr.real();
      }
    }

    HermitianForm form;
    form.gram = gram;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(to_eigen(gram), Eigen::EigenvaluesOnly);
    form.min_eigenvalue = eig.eigenvalues().minCoeff();

    auto const& elts = L.domain().elements();
    for (std::size_t i = 0; i < elts.size(); ++i) {
      auto const& ls    = L.matrix(i);
      auto const  lstar = L(star(G, elts[i]));
      auto const  diff  = ls.adjoint() * gram - gram * lstar;
      for (auto const& x : diff.data()) {
        form.residual = std::max(form.residual, std::abs(x));
      }
    }
    if (form.min_eigenvalue <= tolerance) {
      throw NumericalError("form is not positive definite: smallest eigenvalue "
                           + std::to_string(form.min_eigenvalue));
    }
    if (form.residual > tolerance) {
      throw NumericalError("unitarity residual " + std::to_string(form.residual)
                           + " exceeds tolerance " + std::to_string(tolerance));
    }
    return form;
  }

  template <typename T>
  bool dual_check(FactorPower const&            fp,
                  SimpleModuleDescriptor const& desc,
                  MatrixRep<T> const&           L) {
    check_descriptor(fp, desc);
    auto const& G    = fp.group();
    auto const& D    = fp.dclasses()[desc.dclass];
    auto        dual = [&](FpElement const& s) { return L(star(G, s)).transpose(); };
    auto        near = [](T const& a, T const& b) { return ScalarTraits<T>::near(a, b, 1e-9); };

    for (auto const& e : idempotents(G)) {
      if (L(e.element).is_zero() != dual(e.element).is_zero()) {
        return false;
      }
    }
    for (auto const& nu : D.maximal_subgroup.labels) {
      auto const h = coset_class(nu, D.apex());
      if (!near(L(h).trace(), dual(h).trace())) {
        return false;
      }
    }
    if (L.dim() == 1) {
      auto const& elts = L.domain().elements();
      for (std::size_t i = 0; i < elts.size(); ++i) {
        if (!near(L.matrix(i)(0, 0), dual(elts[i])(0, 0))) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Export
  ////////////////////////////////////////////////////////////////////////

  namespace {
    nlohmann::ordered_json entry(Rational const& x) {
      return to_fraction_string(x);
    }
    nlohmann::ordered_json entry(Complex const& x) {
      return nlohmann::ordered_json::array({x.real(), x.imag()});
    }
  }  // namespace

  template <typename T>
  std::string export_json(MatrixRep<T> const& rep) {
    nlohmann::ordered_json j;
    j["schema"]   = 1;
    j["dim"]      = rep.dim();
    j["mode"]     = ScalarTraits<T>::exact ? "exact" : "float";
    auto& mats    = j["matrices"];
    mats          = nlohmann::ordered_json::object();
    auto const& e = rep.domain().elements();
    for (std::size_t i = 0; i < e.size(); ++i) {
      auto const& m    = rep.matrix(i);
      auto        rows = nlohmann::ordered_json::array();
      for (std::size_t r = 0; r < m.rows(); ++r) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
          row.push_back(entry(m(r, c)));
        }
        rows.push_back(std::move(row));
      }
      mats[e[i].to_rows()] = std::move(rows);
    }
    return j.dump();
  }

#define FPLAB_INSTANTIATE(T)                                                              \
  template VBimodule<T> vbimodule<T>(FactorPower const&, std::size_t, DomainPtr);         \
  template MatrixRep<T> build_simple<T>(FactorPower const&, SimpleModuleDescriptor const&, \
                                        DomainPtr);                                       \
  template std::size_t  multiplicity<T>(MatrixRep<T> const&, MatrixRep<T> const&,        \
                                        std::uint64_t);                                   \
  template MatrixRep<T> tensor<T>(MatrixRep<T> const&, MatrixRep<T> const&);              \
  template MatrixRep<T> direct_sum<T>(MatrixRep<T> const&, MatrixRep<T> const&);          \
  template std::vector<std::pair<SimpleModuleDescriptor, std::size_t>> decompose<T>(      \
      FactorPower const&, MatrixRep<T> const&);                                           \
  template bool dual_check<T>(FactorPower const&, SimpleModuleDescriptor const&,          \
                              MatrixRep<T> const&);                                       \
  template std::string export_json<T>(MatrixRep<T> const&);

  FPLAB_INSTANTIATE(Rational)
  FPLAB_INSTANTIATE(Complex)

#undef FPLAB_INSTANTIATE

}  // namespace fplab
