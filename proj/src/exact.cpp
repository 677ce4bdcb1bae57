// fplab - factorpower semigroups and their simple modules

#include "fplab/exact.hpp"

#include <algorithm>
#include <cstdlib>

#include "fplab/errors.hpp"
#include "fplab/limits.hpp"

namespace fplab {

  std::string to_fraction_string(Rational const& x) {
    return numerator(x).str() + "/" + denominator(x).str();
  }

  Rational parse_fraction(std::string const& text) {
    try {
      auto slash = text.find('/');
      if (slash == std::string::npos) {
        return Rational(BigInt(text));
      }
      BigInt num(text.substr(0, slash));
      BigInt den(text.substr(slash + 1));
      if (den == 0) {
        throw ValidationError("zero denominator in \"" + text + "\"");
      }
      return Rational(num, den);
    } catch (std::runtime_error const&) {
      throw ValidationError("malformed fraction \"" + text + "\"");
    }
  }

  Eigen::MatrixXcd to_eigen(CMatrix const& m) {
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        out(i, j) = m(i, j);
      }
    }
    return out;
  }

  CMatrix from_eigen(Eigen::MatrixXcd const& m) {
    CMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        out(i, j) = m(i, j);
      }
    }
    return out;
  }

  QMatrix inverse(QMatrix const& m) {
    if (m.rows() != m.cols()) {
      throw ValidationError("inverse of a non-square matrix");
    }
    std::size_t const n = m.rows();
    QMatrix           a(m);
    QMatrix           inv = QMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while (pivot < n && a(pivot, col) == 0) {
        ++pivot;
      }
      if (pivot == n) {
        throw ValidationError("inverse of a singular matrix");
      }
      if (pivot != col) {
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(a(pivot, j), a(col, j));
          std::swap(inv(pivot, j), inv(col, j));
        }
      }
      Rational const p = a(col, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(col, j) /= p;
        inv(col, j) /= p;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == col || a(i, col) == 0) {
          continue;
        }
        Rational const f = a(i, col);
        for (std::size_t j = 0; j < n; ++j) {
          a(i, j) -= f * a(col, j);
          inv(i, j) -= f * inv(col, j);
        }
      }
    }
    return inv;
  }

  ////////////////////////////////////////////////////////////////////////
  // ExactNullspace
  ////////////////////////////////////////////////////////////////////////

  ExactNullspace::ExactNullspace(std::size_t unknowns) : unknowns_(unknowns) {}

  bool ExactNullspace::add_row(std::vector<Rational> row) {
    if (row.size() != unknowns_) {
      throw ValidationError("row length does not match the unknown count");
    }
    if (full()) {
      return false;
    }
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      Rational const f = row[pivots_[b]];
      if (f == 0) {
        continue;
      }
      auto const& base = basis_[b];
      for (std::size_t j = 0; j < unknowns_; ++j) {
        if (base[j] != 0) {
          row[j] -= f * base[j];
        }
      }
    }
    auto it = std::find_if(
        row.begin(), row.end(), [](Rational const& x) { return x != 0; });
    if (it == row.end()) {
      return false;
    }
    std::size_t const pivot = static_cast<std::size_t>(it - row.begin());
    Rational const    p     = row[pivot];
    for (auto& x : row) {
      if (x != 0) {
        x /= p;
      }
    }
    // keep the basis fully reduced
    for (auto& base : basis_) {
      Rational const f = base[pivot];
      if (f == 0) {
        continue;
      }
      for (std::size_t j = 0; j < unknowns_; ++j) {
        if (row[j] != 0) {
          base[j] -= f * row[j];
        }
      }
    }
    basis_.push_back(std::move(row));
    pivots_.push_back(pivot);
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // FloatNullspace
  ////////////////////////////////////////////////////////////////////////

  FloatNullspace::FloatNullspace(std::size_t unknowns, double tolerance)
      : unknowns_(unknowns),
        tolerance_(tolerance),
        normal_(Eigen::MatrixXcd::Zero(unknowns, unknowns)) {}

  void FloatNullspace::add_row(std::span<Complex const> row) {
    if (row.size() != unknowns_) {
      throw ValidationError("row length does not match the unknown count");
    }
    Eigen::Map<Eigen::VectorXcd const> v(row.data(), row.size());
    normal_.noalias() += v.conjugate() * v.transpose();
  }

  std::size_t FloatNullspace::nullity() const {
    if (unknowns_ == 0) {
      return 0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        normal_, Eigen::EigenvaluesOnly);
    auto const& ev  = solver.eigenvalues();
    double      top = std::max(ev.maxCoeff(), 1.0);
    // eigenvalues of A^H A are squared singular values
    double const      cut = tolerance_ * tolerance_ * top;
    std::size_t       n   = 0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      if (ev[i] <= cut) {
        ++n;
      }
    }
    return n;
  }

  ////////////////////////////////////////////////////////////////////////
  // Limits
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void override_from_env(char const* name, std::size_t& field) {
      char const* value = std::getenv(name);
      if (value == nullptr || *value == '\0') {
        return;
      }
      char*              end = nullptr;
      unsigned long long v   = std::strtoull(value, &end, 10);
      if (end == value || *end != '\0' || v == 0) {
        throw ValidationError(std::string("invalid value for ") + name);
      }
      field = static_cast<std::size_t>(v);
    }
  }  // namespace

  Limits Limits::from_env() {
    Limits l;
    override_from_env("FPLAB_GROUP_CAP", l.group_order);
    override_from_env("FPLAB_ENUMERATE_CAP", l.enumerate_order);
    override_from_env("FPLAB_FOULKES_N", l.foulkes_degree);
    override_from_env("FPLAB_SPECHT_N", l.specht_degree);
    override_from_env("FPLAB_FSTAR_N", l.fstar_degree);
    override_from_env("FPLAB_CORRESPOND_N", l.correspond_degree);
    override_from_env("FPLAB_NORMALIZER_CAP", l.normalizer_order);
    return l;
  }

  void Limits::set(std::string const& name, std::size_t value) {
    if (value == 0) {
      throw ValidationError("budget " + name + " must be positive");
    }
    if (name == "group") {
      group_order = value;
    } else if (name == "enumerate") {
      enumerate_order = value;
    } else if (name == "foulkes") {
      foulkes_degree = value;
    } else if (name == "specht") {
      specht_degree = value;
    } else if (name == "fstar") {
      fstar_degree = value;
    } else if (name == "correspond") {
      correspond_degree = value;
    } else if (name == "normalizer") {
      normalizer_order = value;
    } else {
      throw ValidationError("unknown budget \"" + name + "\"");
    }
  }

}  // namespace fplab
