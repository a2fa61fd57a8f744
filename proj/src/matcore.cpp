#include "loewner_lab/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

namespace loewner {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::DomainViolation: return "DomainViolation";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidDimension: return "InvalidDimension";
    case ErrorKind::NotUnitVector: return "NotUnitVector";
    case ErrorKind::NonPositiveInput: return "NonPositiveInput";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::InvalidBounds: return "InvalidBounds";
    case ErrorKind::InvalidRange: return "InvalidRange";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::InvalidExponent: return "InvalidExponent";
    case ErrorKind::HypothesisUnsatisfied: return "HypothesisUnsatisfied";
    case ErrorKind::NotCommuting: return "NotCommuting";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double Matrix::frobenius_norm() const {
  // Scaled accumulation keeps the norm finite for entries near the overflow limit.
  double scale = 0.0;
  for (double v : data_) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (double v : data_) {
    const double r = v / scale;
    sum += r * r;
  }
  return scale * std::sqrt(sum);
}

static void require_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw LabError(ErrorKind::DimensionMismatch, "matrix shapes differ");
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_shape(*this, other);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_shape(*this, other);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(double scalar) {
  for (double& v : data_) v *= scalar;
  return *this;
}

Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
Matrix operator*(Matrix lhs, double scalar) { return lhs *= scalar; }
Matrix operator*(double scalar, Matrix rhs) { return rhs *= scalar; }

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw LabError(ErrorKind::DimensionMismatch, "inner dimensions differ");
  Matrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const double a = lhs(i, k);
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

Vector operator*(const Matrix& lhs, std::span<const double> x) {
  if (lhs.cols() != x.size()) throw LabError(ErrorKind::DimensionMismatch, "matrix-vector size mismatch");
  Vector y(lhs.rows(), 0.0);
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < lhs.cols(); ++j) acc += lhs(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

// ---------------------------------------------------------------------------
// SymMatrix

static void check_dimension(std::size_t n) {
  if (n < kMinDimension || n > kMaxDimension) {
    throw LabError(ErrorKind::InvalidDimension,
                   "dimension " + std::to_string(n) + " outside [" + std::to_string(kMinDimension) + ", " +
                       std::to_string(kMaxDimension) + "]");
  }
}

SymMatrix::SymMatrix(const Matrix& m) : m_(m) {
  if (m.rows() != m.cols()) throw LabError(ErrorKind::DimensionMismatch, "symmetric matrix must be square");
  check_dimension(m.rows());
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double v = 0.5 * (m(i, j) + m(j, i));
      if (!std::isfinite(v)) throw LabError(ErrorKind::OutOfRange, "non-finite matrix entry");
      m_(i, j) = v;
      m_(j, i) = v;
    }
  }
}

SymMatrix::SymMatrix(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t n = rows.size();
  Matrix m(n, n);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n) throw LabError(ErrorKind::DimensionMismatch, "ragged initializer");
    std::size_t j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  *this = SymMatrix(m);
}

SymMatrix SymMatrix::identity(std::size_t n) { return SymMatrix(Matrix::identity(n)); }

SymMatrix SymMatrix::zero(std::size_t n) { return SymMatrix(Matrix(n, n)); }

SymMatrix SymMatrix::diagonal(std::span<const double> d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return SymMatrix(m);
}

SymMatrix SymMatrix::diagonal(std::initializer_list<double> d) {
  return diagonal(std::span<const double>(d.begin(), d.size()));
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& other) {
  m_ += other.m_;
  return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& other) {
  m_ -= other.m_;
  return *this;
}

SymMatrix& SymMatrix::operator*=(double scalar) {
  m_ *= scalar;
  return *this;
}

SymMatrix operator+(SymMatrix lhs, const SymMatrix& rhs) { return lhs += rhs; }
SymMatrix operator-(SymMatrix lhs, const SymMatrix& rhs) { return lhs -= rhs; }
SymMatrix operator*(SymMatrix lhs, double scalar) { return lhs *= scalar; }
SymMatrix operator*(double scalar, SymMatrix rhs) { return rhs *= scalar; }

SymMatrix congruence(const Matrix& t, const SymMatrix& a) { return SymMatrix(t * a.matrix() * t.transpose()); }

SymMatrix symmetric_product(const SymMatrix& a, const SymMatrix& b) { return SymMatrix(a.matrix() * b.matrix()); }

// ---------------------------------------------------------------------------
// Eigendecomposition

SymMatrix SpectralDecomp::reconstruct(std::span<const double> d) const {
  const std::size_t n = size();
  if (d.size() != n) throw LabError(ErrorKind::DimensionMismatch, "diagonal length differs from basis");
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += q(i, k) * d[k] * q(j, k);
      out(i, j) = acc;
      out(j, i) = acc;
    }
  return SymMatrix(out);
}

namespace {

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) sum += a(i, j) * a(i, j);
  return std::sqrt(sum);
}

constexpr double kJacobiRelTol = 1e-13;
constexpr int kJacobiMaxSweeps = 100;

}  // namespace

SpectralDecomp eig_sym(const SymMatrix& input) {
  const std::size_t n = input.size();
  Matrix a = input.matrix();
  Matrix v = Matrix::identity(n);
  const double norm = a.frobenius_norm();
  const double threshold = kJacobiRelTol * norm;

  bool converged = false;
  for (int sweep = 0; sweep <= kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) {
      converged = true;
      break;
    }
    if (sweep == kJacobiMaxSweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t r = p + 1; r < n; ++r) {
        const double apr = a(p, r);
        if (apr == 0.0) continue;
        const double theta = (a(r, r) - a(p, p)) / (2.0 * apr);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a(p, p) -= t * apr;
        a(r, r) += t * apr;
        a(p, r) = 0.0;
        a(r, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == r) continue;
          const double akp = a(k, p);
          const double akr = a(k, r);
          const double new_kp = akp - s * (akr + tau * akp);
          const double new_kr = akr + s * (akp - tau * akr);
          a(k, p) = new_kp;
          a(p, k) = new_kp;
          a(k, r) = new_kr;
          a(r, k) = new_kr;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkr = v(k, r);
          v(k, p) = vkp - s * (vkr + tau * vkp);
          v(k, r) = vkr + s * (vkp - tau * vkr);
        }
      }
    }
  }
  if (!converged) {
    throw LabError(ErrorKind::NonConvergence,
                   "cyclic Jacobi did not converge in " + std::to_string(kJacobiMaxSweeps) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

  SpectralDecomp out{Matrix(n, n), Vector(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.lambda[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.q(i, k) = v(i, order[k]);
  }
  return out;
}

Vector eigenvalues(const SymMatrix& a) { return eig_sym(a).lambda; }
double lambda_min(const SymMatrix& a) { return eig_sym(a).lambda_min(); }
double lambda_max(const SymMatrix& a) { return eig_sym(a).lambda_max(); }

double spectral_norm(const SymMatrix& a) {
  const auto d = eig_sym(a);
  return std::max(std::abs(d.lambda_max()), std::abs(d.lambda_min()));
}

// ---------------------------------------------------------------------------
// Functional calculus

bool Interval::contains(double x) const noexcept {
  if (std::isnan(x)) return false;
  const bool above = lo_closed ? x >= lo : x > lo;
  const bool below = hi_closed ? x <= hi : x < hi;
  return above && below;
}

SymMatrix apply_fn(const SpectralDecomp& decomp, const ScalarFn& f, const Interval& domain) {
  Vector values(decomp.size());
  for (std::size_t k = 0; k < decomp.size(); ++k) {
    const double lam = decomp.lambda[k];
    if (!domain.contains(lam)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "eigenvalue " << lam << " (index " << k << ") outside function domain";
      throw LabError(ErrorKind::DomainViolation, msg.str());
    }
    values[k] = f(lam);
    if (!std::isfinite(values[k])) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "function value at eigenvalue " << lam << " is not finite";
      throw LabError(ErrorKind::DomainViolation, msg.str());
    }
  }
  return decomp.reconstruct(values);
}

SymMatrix apply_fn(const SymMatrix& a, const ScalarFn& f, const Interval& domain) {
  return apply_fn(eig_sym(a), f, domain);
}

bool is_strictly_positive(const SpectralDecomp& decomp) noexcept {
  return decomp.lambda_max() > 0.0 && decomp.lambda_min() > 1e-12 * decomp.lambda_max();
}

bool is_strictly_positive(const SymMatrix& a) { return is_strictly_positive(eig_sym(a)); }

static bool is_nonnegative_integer(double r) { return r >= 0.0 && std::floor(r) == r; }

SymMatrix mpow(const SpectralDecomp& decomp, double r) {
  const std::size_t n = decomp.size();
  if (r == 0.0) return SymMatrix::identity(n);
  if (!is_nonnegative_integer(r) && !is_strictly_positive(decomp)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "power " << r << " needs a strictly positive matrix (lambda_min = " << decomp.lambda_min()
        << ", lambda_max = " << decomp.lambda_max() << ")";
    throw LabError(ErrorKind::NotPositiveDefinite, msg.str());
  }
  Vector values(n);
  for (std::size_t k = 0; k < n; ++k) values[k] = std::pow(decomp.lambda[k], r);
  return decomp.reconstruct(values);
}

SymMatrix mpow(const SymMatrix& a, double r) {
  if (r == 0.0) return SymMatrix::identity(a.size());
  if (r == 1.0) return a;
  return mpow(eig_sym(a), r);
}

// ---------------------------------------------------------------------------
// Order and alignment

LoewnerResult loewner_leq(const SymMatrix& x, const SymMatrix& y, double tol) {
  if (x.size() != y.size()) throw LabError(ErrorKind::DimensionMismatch, "loewner_leq operands differ in size");
  const double slack = lambda_min(y - x);
  const double scale = std::max({1.0, spectral_norm(x), spectral_norm(y)});
  return {slack >= -tol * scale, slack};
}

Matrix aligned_unitary(const SymMatrix& x, const SymMatrix& y) {
  if (x.size() != y.size()) throw LabError(ErrorKind::DimensionMismatch, "aligned_unitary operands differ in size");
  const auto dx = eig_sym(x);
  const auto dy = eig_sym(y);
  return dx.q * dy.q.transpose();
}

double dot(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw LabError(ErrorKind::DimensionMismatch, "dot operands differ in size");
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

double norm2(std::span<const double> x) { return std::sqrt(dot(x, x)); }

double quad_form(const SymMatrix& a, std::span<const double> x) {
  if (x.size() != a.size()) throw LabError(ErrorKind::DimensionMismatch, "probe length differs from matrix size");
  const double nrm = norm2(x);
  if (std::abs(nrm - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "probe norm " << nrm << " is not 1";
    throw LabError(ErrorKind::NotUnitVector, msg.str());
  }
  return dot(x, a.matrix() * x);
}

double commutator_norm(const SymMatrix& a, const SymMatrix& b) {
  return (a.matrix() * b.matrix() - b.matrix() * a.matrix()).frobenius_norm();
}

}  // namespace loewner
