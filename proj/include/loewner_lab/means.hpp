#pragma once

#include <optional>

#include "loewner_lab/check_result.hpp"
#include "loewner_lab/matcore.hpp"

namespace loewner {

/// Weight alpha in [0, 1] of the weighted means, optionally derived from
/// conjugate exponents (p, q) via alpha = 1/q. R = max(alpha, 1 - alpha).
class MeanWeight {
 public:
  /// OutOfRange unless 0 <= alpha <= 1.
  explicit MeanWeight(double alpha);

  /// alpha = 1/q with q = p / (p - 1). InvalidExponent unless p > 1.
  static MeanWeight conjugate(double p);
  /// InvalidExponent unless p, q > 1 and |1/p + 1/q - 1| <= 1e-12.
  static MeanWeight conjugate(double p, double q);

  double alpha() const noexcept { return alpha_; }
  double r() const noexcept { return r_; }
  std::optional<double> p() const noexcept { return p_; }
  std::optional<double> q() const noexcept { return q_; }

  /// p and q; InvalidExponent when the weight was built from alpha alone.
  double p_value() const;
  double q_value() const;

 private:
  double alpha_;
  double r_;
  std::optional<double> p_;
  std::optional<double> q_;
};

/// (1 - alpha) A + alpha B.
SymMatrix amean(const SymMatrix& a, const SymMatrix& b, const MeanWeight& w);

/// A^{1/2} (A^{-1/2} B A^{-1/2})^alpha A^{1/2}.
///
/// A must be strictly positive. B may be positive semidefinite: eigenvalues of
/// the inner congruence down to -1e-12 * lambda_max are clamped to zero.
SymMatrix gmean(const SymMatrix& a, const SymMatrix& b, const MeanWeight& w);
SymMatrix gmean(const SymMatrix& a, const SymMatrix& b, double alpha);

/// Worst relative deviation among
///   A#_0 B = A,  A#_1 B = B,  A#_a B = B#_{1-a} A,  A^{-1}#_a B^{-1} = (A#_a B)^{-1}.
/// slack = -(worst deviation); passes(1e-9) is the intended gate.
CheckResult gmean_identities_check(const SymMatrix& a, const SymMatrix& b, const MeanWeight& w);

}  // namespace loewner
