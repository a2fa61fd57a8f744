#include "loewner_lab/means.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace loewner {

MeanWeight::MeanWeight(double alpha) : alpha_(alpha), r_(std::max(alpha, 1.0 - alpha)) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    std::ostringstream msg;
    msg << "weight " << alpha << " outside [0, 1]";
    throw LabError(ErrorKind::OutOfRange, msg.str());
  }
}

MeanWeight MeanWeight::conjugate(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw LabError(ErrorKind::InvalidExponent, "exponent p must exceed 1");
  return conjugate(p, p / (p - 1.0));
}

MeanWeight MeanWeight::conjugate(double p, double q) {
  if (!(p > 1.0 && q > 1.0) || !std::isfinite(p) || !std::isfinite(q))
    throw LabError(ErrorKind::InvalidExponent, "conjugate exponents must both exceed 1");
  if (std::abs(1.0 / p + 1.0 / q - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "1/p + 1/q = " << (1.0 / p + 1.0 / q) << " is not 1";
    throw LabError(ErrorKind::InvalidExponent, msg.str());
  }
  MeanWeight w(1.0 / q);
  w.p_ = p;
  w.q_ = q;
  return w;
}

double MeanWeight::p_value() const {
  if (!p_) throw LabError(ErrorKind::InvalidExponent, "weight has no conjugate exponents");
  return *p_;
}

double MeanWeight::q_value() const {
  if (!q_) throw LabError(ErrorKind::InvalidExponent, "weight has no conjugate exponents");
  return *q_;
}

SymMatrix amean(const SymMatrix& a, const SymMatrix& b, const MeanWeight& w) {
  if (a.size() != b.size()) throw LabError(ErrorKind::DimensionMismatch, "amean operands differ in size");
  return (1.0 - w.alpha()) * a + w.alpha() * b;
}

SymMatrix gmean(const SymMatrix& a, const SymMatrix& b, const MeanWeight& w) {
  if (a.size() != b.size()) throw LabError(ErrorKind::DimensionMismatch, "gmean operands differ in size");
  const auto da = eig_sym(a);
  if (!is_strictly_positive(da)) throw LabError(ErrorKind::NotPositiveDefinite, "first gmean operand is not strictly positive");
  const double alpha = w.alpha();
  if (alpha == 0.0) return a;
  if (alpha == 1.0) return b;

  const SymMatrix half = mpow(da, 0.5);
  const SymMatrix inv_half = mpow(da, -0.5);
  const auto inner = eig_sym(congruence(inv_half.matrix(), b));
  const double floor = -1e-12 * std::max(inner.lambda_max(), 0.0);
  if (inner.lambda_min() < floor) throw LabError(ErrorKind::NotPositiveDefinite, "second gmean operand is not positive semidefinite");
  Vector powered(inner.size());
  for (std::size_t k = 0; k < inner.size(); ++k) powered[k] = std::pow(std::max(inner.lambda[k], 0.0), alpha);
  return congruence(half.matrix(), inner.reconstruct(powered));
}

SymMatrix gmean(const SymMatrix& a, const SymMatrix& b, double alpha) { return gmean(a, b, MeanWeight(alpha)); }

namespace {

double relative_deviation(const SymMatrix& x, const SymMatrix& y) {
  return (x - y).frobenius_norm() / std::max({1.0, x.frobenius_norm(), y.frobenius_norm()});
}

}  // namespace

CheckResult gmean_identities_check(const SymMatrix& a, const SymMatrix& b, const MeanWeight& w) {
  const double alpha = w.alpha();
  double worst = 0.0;
  worst = std::max(worst, relative_deviation(gmean(a, b, 0.0), a));
  worst = std::max(worst, relative_deviation(gmean(a, b, 1.0), b));
  const SymMatrix m = gmean(a, b, w);
  worst = std::max(worst, relative_deviation(m, gmean(b, a, 1.0 - alpha)));
  const SymMatrix inv_mean = gmean(mpow(a, -1.0), mpow(b, -1.0), w);
  worst = std::max(worst, relative_deviation(inv_mean, mpow(m, -1.0)));

  CheckResult r;
  r.check_id = "check_gmean_identities";
  r.slack = -worst;
  r.raw_slack = -worst;
  r.constant_used = 1.0;
  r.meta.n = a.size();
  r.meta.alpha = alpha;
  r.meta.p = w.p();
  r.meta.q = w.q();
  return r;
}

}  // namespace loewner
