// fplab - factorpower semigroups and their simple modules
//
// Matrix representations of FP+(G, M): the bimodule spanned by the L-class
// of an idempotent, the simple modules L(H, X), and the linear algebra used
// to compare and decompose representations.
//
// Every representation is defined on all of FP+ through an evaluator, and
// carries a domain: the finite list of elements on which its matrices are
// precomputed and on which intertwiner systems are assembled.

#ifndef FPLAB_REPCORE_HPP_
#define FPLAB_REPCORE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fplab/errors.hpp"
#include "fplab/exact.hpp"
#include "fplab/factorpower.hpp"
#include "fplab/irreducibles.hpp"
#include "fplab/limits.hpp"
#include "fplab/symfunc.hpp"

namespace fplab {

  class FpDomain {
   public:
    enum class Kind { full, units, generated };

    //! All of FP+(G, M).
    static FpDomain full(PermutationGroup const& G, Limits const& limits = {});
    //! The group of units.
    static FpDomain units(PermutationGroup const& G);
    //! Units, idempotents and all products of two of them. Intertwiner
    //! solves on this domain are followed by a randomized verification
    //! pass.
    static FpDomain generated(PermutationGroup const& G);
    //! full when |G| <= 6, generated otherwise.
    static FpDomain standard(PermutationGroup const& G, Limits const& limits = {});

    Kind kind() const noexcept {
      return kind_;
    }
    PermutationGroup const& group() const noexcept {
      return group_;
    }
    std::vector<FpElement> const& elements() const noexcept {
      return elements_;
    }
    std::size_t size() const noexcept {
      return elements_.size();
    }
    std::optional<std::size_t> index_of(FpElement const& e) const;

   private:
    FpDomain(Kind kind, PermutationGroup G, std::vector<FpElement> elements);

    Kind                                                  kind_ = Kind::full;
    PermutationGroup                                      group_;
    std::vector<FpElement>                                elements_;
    std::unordered_map<FpElement, std::size_t, FpElementHash> index_;
  };

  using DomainPtr = std::shared_ptr<FpDomain const>;

  //! An assignment of dim x dim matrices over T (Rational or Complex) to
  //! the elements of FP+(G, M).
  template <typename T>
  class MatrixRep {
   public:
    using Evaluator = std::function<Matrix<T>(FpElement const&)>;

    MatrixRep() = default;

    //! Evaluates every domain element once, in parallel. The evaluator must
    //! be safe to call concurrently.
    MatrixRep(std::size_t dim, DomainPtr domain, Evaluator evaluator)
        : dim_(dim), domain_(std::move(domain)), evaluator_(std::move(evaluator)) {
      auto const& elts = domain_->elements();
      matrices_.resize(elts.size());
      auto const size = static_cast<std::int64_t>(elts.size());
#pragma omp parallel for schedule(dynamic)
      for (std::int64_t i = 0; i < size; ++i) {
        auto const j = static_cast<std::size_t>(i);
        matrices_[j] = evaluator_(elts[j]);
      }
    }

    std::size_t dim() const noexcept {
      return dim_;
    }
    FpDomain const& domain() const {
      return *domain_;
    }
    DomainPtr const& domain_ptr() const noexcept {
      return domain_;
    }
    //! Matrix of the i-th domain element.
    Matrix<T> const& matrix(std::size_t i) const {
      return matrices_[i];
    }
    Matrix<T> operator()(FpElement const& s) const {
      if (auto i = domain_->index_of(s)) {
        return matrices_[*i];
      }
      return evaluator_(s);
    }
    Evaluator const& evaluator() const noexcept {
      return evaluator_;
    }

   private:
    std::size_t            dim_ = 0;
    DomainPtr              domain_;
    Evaluator              evaluator_;
    std::vector<Matrix<T>> matrices_;
  };

  //! Label of a simple module of the maximal subgroup N/H: a MultiPartition
  //! when G is a full symmetric group (N/H = prod S_{k_i}), otherwise the
  //! index of a numerically computed irreducible.
  struct SimpleLabel {
    std::optional<MultiPartition> partition;
    std::size_t                   index = 0;
    std::size_t                   dim   = 0;

    std::string to_string() const;
  };

  struct SimpleModuleDescriptor {
    std::size_t id     = 0;  //!< position in FactorPower::simples()
    std::size_t dclass = 0;  //!< index into FactorPower::dclasses()
    SimpleLabel label;
    std::size_t dim = 0;  //!< k * dim X
  };

  //! A group together with everything derived from it that the module
  //! constructions share: D-classes, L-class lookup tables and simple
  //! labels.
  class FactorPower {
   public:
    explicit FactorPower(PermutationGroup G,
                         Limits           limits = {},
                         std::uint64_t    seed   = 0);

    PermutationGroup const& group() const noexcept {
      return group_;
    }
    Limits const& limits() const noexcept {
      return limits_;
    }
    std::uint64_t seed() const noexcept {
      return seed_;
    }
    bool symmetric() const noexcept {
      return symmetric_;
    }
    std::vector<DClassInfo> const& dclasses() const noexcept {
      return dclasses_;
    }
    std::vector<SimpleModuleDescriptor> const& simples() const noexcept {
      return simples_;
    }

    //! Simple modules of one D-class, in label order.
    std::vector<SimpleModuleDescriptor> simples_of(std::size_t dclass) const;

    //! The D-class whose representative idempotent has the given block
    //! partition (or any partition conjugate to it). Throws
    //! ValidationError when no D-class matches.
    std::size_t dclass_of_partition(SetPartition const& rho) const;
    //! The D-class with this shape; ValidationError when there is none or
    //! when several D-classes share the shape.
    std::size_t dclass_of_shape(IntegerPartition const& shape) const;
    //! Parses a label for the given D-class: a MultiPartition string for
    //! symmetric G, an irreducible index otherwise.
    SimpleModuleDescriptor const& find_simple(std::size_t        dclass,
                                              std::string const& label) const;

    //! Shared domain used by default for the representations built from
    //! this context (FpDomain::standard, created on first use).
    DomainPtr standard_domain() const;

    //! Index of the L-class element c H in the coset list of D, or nullopt
    //! when e is not in the L-class of the representative idempotent.
    std::optional<std::size_t> l_class_index(std::size_t      dclass,
                                             FpElement const& e) const;
    //! Left coset representatives c of H (lexicographically minimal,
    //! ascending); L-class element i is the class of c_i H.
    std::vector<Permutation> const& l_class_cosets(std::size_t dclass) const;
    //! For L-class element i: the pair (j, t) with c_i H = g_j^-1 nu_t H,
    //! where nu_t is label t of the maximal subgroup table.
    std::pair<std::size_t, std::size_t> l_class_position(std::size_t dclass,
                                                         std::size_t i) const;

    //! Index in the maximal subgroup table of the coset nu H, nu in N.
    std::size_t table_index(std::size_t dclass, Permutation const& nu) const;

    //! Numeric irreducibles of a maximal subgroup (empty for symmetric G).
    std::vector<GroupIrreducible> const& irreducibles(std::size_t dclass) const;

   private:
    struct LClassData {
      std::vector<Permutation>                                  cosets;
      std::unordered_map<FpElement, std::size_t, FpElementHash> index;
      std::vector<std::pair<std::size_t, std::size_t>>          position;
      std::vector<std::size_t> coset_of_normalizer;  // N element -> table index
    };

    PermutationGroup                    group_;
    Limits                              limits_;
    std::uint64_t                       seed_      = 0;
    bool                                symmetric_ = false;
    std::vector<DClassInfo>             dclasses_;
    std::vector<LClassData>             lclass_;
    std::vector<std::vector<GroupIrreducible>> irreducibles_;
    std::vector<SimpleModuleDescriptor> simples_;
    mutable std::shared_ptr<FpDomain const> domain_;
  };

  //! The FP+-N/H bimodule spanned by the L-class of the representative
  //! idempotent of a D-class. Left: s x = sx when sx stays in the L-class,
  //! otherwise 0. Right: the action x -> x nu of the maximal subgroup; as
  //! matrices on coordinate vectors this is an anti-homomorphism,
  //! right[a] right[b] = right[b a].
  template <typename T>
  struct VBimodule {
    MatrixRep<T>           left;
    std::vector<Matrix<T>> right;
  };

  template <typename T>
  VBimodule<T> vbimodule(FactorPower const& fp,
                         std::size_t        dclass,
                         DomainPtr          domain = nullptr);

  //! L(H, X) on the basis x_i (x) e_a, where x_i = g_i^-1 H and e_a runs
  //! through a basis of X. Rational mode needs symmetric G. Throws
  //! ValidationError when the descriptor does not belong to fp.
  template <typename T>
  MatrixRep<T> build_simple(FactorPower const&            fp,
                            SimpleModuleDescriptor const& desc,
                            DomainPtr                     domain = nullptr);

  //! Character of the simple module X of the maximal subgroup, evaluated
  //! at nu in N, computed without the matrices of X.
  Complex label_character(FactorPower const&            fp,
                          SimpleModuleDescriptor const& desc,
                          Permutation const&            nu);

  //! Compares the character of L(H, X) on the units with the character of
  //! the module induced from the inflation of X to N. Exact for symmetric
  //! G, within 1e-6 otherwise.
  bool restriction_check(FactorPower const& fp, SimpleModuleDescriptor const& desc);

  //! Dimension of {T : T V(s) = L(s) T for all s in the domain}. Both
  //! representations must share a domain; on a generated domain, 1000
  //! random elements (seeded) are added afterwards and InconsistencyError
  //! is thrown if that shrinks the solution space.
  template <typename T>
  std::size_t multiplicity(MatrixRep<T> const& L,
                           MatrixRep<T> const& V,
                           std::uint64_t       seed = 0);

  template <typename T>
  MatrixRep<T> tensor(MatrixRep<T> const& a, MatrixRep<T> const& b);

  template <typename T>
  MatrixRep<T> direct_sum(MatrixRep<T> const& a, MatrixRep<T> const& b);

  //! Multiplicity of every simple module of fp in V. Throws
  //! InconsistencyError unless sum m(L) dim L = dim V.
  template <typename T>
  std::vector<std::pair<SimpleModuleDescriptor, std::size_t>>
  decompose(FactorPower const& fp, MatrixRep<T> const& V);

  struct HermitianForm {
    CMatrix gram;
    double  min_eigenvalue = 0;
    double  residual       = 0;  //!< max |L(s)^H G - G L(s*)| over the domain
  };

  //! Builds the form of the Hermitian construction for L(H, X): an
  //! N/H-averaged form on V_1 = L(e_1), transported to V_i = L(e_i) by g_i,
  //! with distinct V_i orthogonal. Throws NumericalError when the form is
  //! not positive definite or the residual exceeds tolerance.
  HermitianForm unitarize(FactorPower const&            fp,
                          SimpleModuleDescriptor const& desc,
                          MatrixRep<Complex> const&     L,
                          double                        tolerance = 1e-9);

  //! Compares L with its dual s -> L(s*)^T: idempotents acting by zero,
  //! characters on the maximal subgroup, and equality for dimension 1.
  template <typename T>
  bool dual_check(FactorPower const&            fp,
                  SimpleModuleDescriptor const& desc,
                  MatrixRep<T> const&           L);

  //! {"schema":1,"dim":...,"mode":...,"matrices":{rows: matrix}} with
  //! rational entries as "p/q" strings and complex entries as [re, im].
  template <typename T>
  std::string export_json(MatrixRep<T> const& rep);

}  // namespace fplab

#endif  // FPLAB_REPCORE_HPP_
