// fplab - factorpower semigroups and their simple modules
//
// Scalars, dense matrices and the linear solvers used for intertwiner
// spaces. Exact arithmetic is Boost.Multiprecision; the floating path keeps
// std::complex<double> entries and hands dense kernels to Eigen.

#ifndef FPLAB_EXACT_HPP_
#define FPLAB_EXACT_HPP_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

namespace fplab {

  using BigInt   = boost::multiprecision::cpp_int;
  using Rational = boost::multiprecision::cpp_rational;
  using Complex  = std::complex<double>;

  //! "p/q" with q >= 1, also for integers ("3/1").
  std::string to_fraction_string(Rational const& x);
  Rational    parse_fraction(std::string const& text);

  inline double to_double(Rational const& x) {
    return x.convert_to<double>();
  }

  namespace detail {
    template <typename T>
    T conj(T const& x) {
      return x;
    }
    inline Complex conj(Complex const& x) {
      return std::conj(x);
    }
  }  // namespace detail

  //! Dense row-major matrix over T. Used with T = Rational (exact mode),
  //! std::int64_t (Specht matrices) and Complex (floating mode).
  template <typename T>
  class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n) {
      Matrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = T(1);
      }
      return m;
    }

    std::size_t rows() const noexcept {
      return rows_;
    }
    std::size_t cols() const noexcept {
      return cols_;
    }

    T& operator()(std::size_t r, std::size_t c) {
      return data_[r * cols_ + c];
    }
    T const& operator()(std::size_t r, std::size_t c) const {
      return data_[r * cols_ + c];
    }

    std::span<T const> data() const noexcept {
      return data_;
    }

    bool is_zero() const {
      for (auto const& x : data_) {
        if (x != T(0)) {
          return false;
        }
      }
      return true;
    }

    Matrix operator*(Matrix const& rhs) const {
      Matrix out(rows_, rhs.cols_);
      for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
          T const& a = (*this)(i, k);
          if (a == T(0)) {
            continue;
          }
          for (std::size_t j = 0; j < rhs.cols_; ++j) {
            out(i, j) += a * rhs(k, j);
          }
        }
      }
      return out;
    }

    Matrix operator+(Matrix const& rhs) const {
      Matrix out(*this);
      for (std::size_t i = 0; i < data_.size(); ++i) {
        out.data_[i] += rhs.data_[i];
      }
      return out;
    }

    Matrix operator-(Matrix const& rhs) const {
      Matrix out(*this);
      for (std::size_t i = 0; i < data_.size(); ++i) {
        out.data_[i] -= rhs.data_[i];
      }
      return out;
    }

    Matrix transpose() const {
      Matrix out(cols_, rows_);
      for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
          out(j, i) = (*this)(i, j);
        }
      }
      return out;
    }

    //! Conjugate transpose (plain transpose for real scalars).
    Matrix adjoint() const {
      Matrix out(cols_, rows_);
      for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
          out(j, i) = detail::conj((*this)(i, j));
        }
      }
      return out;
    }

    T trace() const {
      T t(0);
      for (std::size_t i = 0; i < rows_ && i < cols_; ++i) {
        t += (*this)(i, i);
      }
      return t;
    }

    bool operator==(Matrix const&) const = default;

   private:
    std::size_t    rows_ = 0;
    std::size_t    cols_ = 0;
    std::vector<T> data_;
  };

  using QMatrix   = Matrix<Rational>;
  using IntMatrix = Matrix<std::int64_t>;
  using CMatrix   = Matrix<Complex>;

  template <typename T>
  Matrix<T> kron(Matrix<T> const& a, Matrix<T> const& b) {
    Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (a(i, j) == T(0)) {
          continue;
        }
        for (std::size_t k = 0; k < b.rows(); ++k) {
          for (std::size_t l = 0; l < b.cols(); ++l) {
            out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
          }
        }
      }
    }
    return out;
  }

  template <typename T>
  Matrix<T> direct_sum(Matrix<T> const& a, Matrix<T> const& b) {
    Matrix<T> out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        out(i, j) = a(i, j);
      }
    }
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(a.rows() + i, a.cols() + j) = b(i, j);
      }
    }
    return out;
  }

  //! Entrywise conversion between scalar types.
  template <typename To, typename From>
  Matrix<To> convert(Matrix<From> const& m);

  template <>
  inline Matrix<Rational> convert(Matrix<std::int64_t> const& m) {
    Matrix<Rational> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        out(i, j) = Rational(m(i, j));
      }
    }
    return out;
  }

  template <>
  inline Matrix<Complex> convert(Matrix<std::int64_t> const& m) {
    Matrix<Complex> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        out(i, j) = Complex(static_cast<double>(m(i, j)), 0.0);
      }
    }
    return out;
  }

  template <>
  inline Matrix<Complex> convert(Matrix<Rational> const& m) {
    Matrix<Complex> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        out(i, j) = Complex(to_double(m(i, j)), 0.0);
      }
    }
    return out;
  }

  template <>
  inline Matrix<Complex> convert(Matrix<Complex> const& m) {
    return m;
  }

  template <>
  inline Matrix<Rational> convert(Matrix<Rational> const& m) {
    return m;
  }

  Eigen::MatrixXcd to_eigen(CMatrix const& m);
  CMatrix          from_eigen(Eigen::MatrixXcd const& m);

  //! Inverse by Gauss-Jordan elimination; throws ValidationError when
  //! singular.
  QMatrix inverse(QMatrix const& m);

  //! Incremental row reduction over the rationals. Rows are added one at a
  //! time; the basis is kept fully reduced so membership is one sweep.
  class ExactNullspace {
   public:
    explicit ExactNullspace(std::size_t unknowns);

    //! Returns true when the row was independent of the ones seen so far.
    bool add_row(std::vector<Rational> row);

    std::size_t unknowns() const noexcept {
      return unknowns_;
    }
    std::size_t rank() const noexcept {
      return basis_.size();
    }
    std::size_t nullity() const noexcept {
      return unknowns_ - basis_.size();
    }
    bool full() const noexcept {
      return basis_.size() == unknowns_;
    }

   private:
    std::size_t                        unknowns_;
    std::vector<std::vector<Rational>> basis_;
    std::vector<std::size_t>           pivots_;
  };

  //! Floating counterpart: accumulates the Gram matrix A^H A of the system
  //! and reads the nullity off its spectrum. A singular value s counts as
  //! zero when s <= tolerance * max(1, largest singular value), so a system
  //! made only of rounding noise has full nullity.
  class FloatNullspace {
   public:
    explicit FloatNullspace(std::size_t unknowns, double tolerance = 1e-6);

    void add_row(std::span<Complex const> row);

    std::size_t unknowns() const noexcept {
      return unknowns_;
    }
    std::size_t nullity() const;

   private:
    std::size_t      unknowns_;
    double           tolerance_;
    Eigen::MatrixXcd normal_;
  };

  //! Scalar traits shared by the exact and floating code paths.
  template <typename T>
  struct ScalarTraits;

  template <>
  struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    using Nullspace             = ExactNullspace;
    static bool near(Rational const& a, Rational const& b, double = 0) {
      return a == b;
    }
  };

  template <>
  struct ScalarTraits<Complex> {
    static constexpr bool exact = false;
    using Nullspace             = FloatNullspace;
    static bool near(Complex const& a, Complex const& b, double tol) {
      return std::abs(a - b) <= tol;
    }
  };

}  // namespace fplab

#endif  // FPLAB_EXACT_HPP_
