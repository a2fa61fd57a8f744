#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <limits>
#include <span>
#include <vector>

#include "loewner_lab/errors.hpp"

namespace loewner {

inline constexpr std::size_t kMinDimension = 2;
inline constexpr std::size_t kMaxDimension = 32;

using Vector = std::vector<double>;

/// Dense row-major matrix. Used for eigenvector bases, unitaries and
/// intermediate (possibly non-symmetric) products.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const double> data() const noexcept { return data_; }
  Vector column(std::size_t j) const;

  Matrix transpose() const;
  double frobenius_norm() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(double scalar);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator+(Matrix lhs, const Matrix& rhs);
Matrix operator-(Matrix lhs, const Matrix& rhs);
Matrix operator*(Matrix lhs, double scalar);
Matrix operator*(double scalar, Matrix rhs);
Matrix operator*(const Matrix& lhs, const Matrix& rhs);
Vector operator*(const Matrix& lhs, std::span<const double> x);

/// Real symmetric n x n matrix, 2 <= n <= 32, finite entries.
///
/// Construction from an arbitrary square matrix symmetrizes it as
/// (M + M^T)/2, so entries(i, j) == entries(j, i) holds bit-for-bit.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(const Matrix& m);
  SymMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static SymMatrix identity(std::size_t n);
  static SymMatrix zero(std::size_t n);
  static SymMatrix diagonal(std::span<const double> d);
  static SymMatrix diagonal(std::initializer_list<double> d);

  std::size_t size() const noexcept { return m_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const Matrix& matrix() const noexcept { return m_; }
  double frobenius_norm() const { return m_.frobenius_norm(); }

  SymMatrix& operator+=(const SymMatrix& other);
  SymMatrix& operator-=(const SymMatrix& other);
  SymMatrix& operator*=(double scalar);

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  Matrix m_;
};

SymMatrix operator+(SymMatrix lhs, const SymMatrix& rhs);
SymMatrix operator-(SymMatrix lhs, const SymMatrix& rhs);
SymMatrix operator*(SymMatrix lhs, double scalar);
SymMatrix operator*(double scalar, SymMatrix rhs);

/// T * A * T^T, symmetrized.
SymMatrix congruence(const Matrix& t, const SymMatrix& a);

/// Symmetric part of a product of two symmetric matrices. Exact for
/// commuting factors up to rounding.
SymMatrix symmetric_product(const SymMatrix& a, const SymMatrix& b);

/// Orthogonal eigenvector matrix (columns) and descending eigenvalues.
struct SpectralDecomp {
  Matrix q;
  Vector lambda;

  std::size_t size() const noexcept { return lambda.size(); }
  double lambda_max() const { return lambda.front(); }
  double lambda_min() const { return lambda.back(); }
  /// Q diag(d) Q^T.
  SymMatrix reconstruct(std::span<const double> d) const;
  SymMatrix reconstruct() const { return reconstruct(lambda); }
};

/// Cyclic Jacobi eigensolver.
///
/// Sweeps until the off-diagonal Frobenius norm drops below
/// 1e-13 * ||A||_F; throws NonConvergence after 100 sweeps.
SpectralDecomp eig_sym(const SymMatrix& a);

Vector eigenvalues(const SymMatrix& a);
double lambda_min(const SymMatrix& a);
double lambda_max(const SymMatrix& a);
double spectral_norm(const SymMatrix& a);

/// Open/closed interval on the real line; infinite endpoints allowed.
struct Interval {
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  bool lo_closed = false;
  bool hi_closed = false;

  bool contains(double x) const noexcept;
  static Interval positive_reals() { return {}; }
  static Interval nonnegative_reals() { return {0.0, std::numeric_limits<double>::infinity(), true, false}; }
  static Interval everywhere() {
    return {-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(), false, false};
  }
};

using ScalarFn = std::function<double(double)>;

/// Functional calculus Q diag(f(lambda)) Q^T. Throws DomainViolation naming
/// the first eigenvalue outside `domain`.
SymMatrix apply_fn(const SymMatrix& a, const ScalarFn& f, const Interval& domain = Interval::everywhere());
SymMatrix apply_fn(const SpectralDecomp& decomp, const ScalarFn& f, const Interval& domain = Interval::everywhere());

/// True when lambda_min > 1e-12 * lambda_max and lambda_max > 0.
bool is_strictly_positive(const SpectralDecomp& decomp) noexcept;
bool is_strictly_positive(const SymMatrix& a);

/// Spectral power. r == 0 gives I and r == 1 gives A exactly; non-negative
/// integer powers accept any symmetric input, everything else requires
/// strict positivity (NotPositiveDefinite otherwise).
SymMatrix mpow(const SymMatrix& a, double r);
SymMatrix mpow(const SpectralDecomp& decomp, double r);

struct LoewnerResult {
  bool holds;
  double slack;  ///< lambda_min(Y - X)
};

inline constexpr double kDefaultLoewnerTol = 1e-8;

/// X <= Y in the Loewner order, with relative tolerance
/// tol * max(1, ||X||_2, ||Y||_2).
LoewnerResult loewner_leq(const SymMatrix& x, const SymMatrix& y, double tol = kDefaultLoewnerTol);

/// U = Q_X Q_Y^T with both eigenbases sorted descending, so U Y U^T has the
/// eigenvalues of Y on the eigenvectors of X.
Matrix aligned_unitary(const SymMatrix& x, const SymMatrix& y);

/// x^T A x for a unit vector x (NotUnitVector if | ||x|| - 1 | > 1e-12).
double quad_form(const SymMatrix& a, std::span<const double> x);

double dot(std::span<const double> x, std::span<const double> y);
double norm2(std::span<const double> x);

/// ||AB - BA||_F.
double commutator_norm(const SymMatrix& a, const SymMatrix& b);

}  // namespace loewner
