#pragma once

namespace loewner {

/// Sandwich constants of 0 < sA <= B <= tA and the condition ratio w = t/s.
struct SandwichBounds {
  double s = 1.0;
  double t = 1.0;
  double w = 1.0;

  /// InvalidBounds unless 0 < s <= t (both finite).
  static SandwichBounds make(double s, double t);
};

/// K(h) = (h + 1)^2 / (4h). NonPositiveInput for h <= 0.
double kantorovich(double h);

/// Generalized Kantorovich constant K(w, alpha) in (0, 1].
///
/// Returns exactly 1 when |w - 1| < 1e-9, alpha < 1e-9 or alpha > 1 - 1e-9
/// (the continuous extension there). Evaluated through expm1 so no
/// difference of nearly equal powers is ever formed.
double kantorovich_gen(double w, double alpha);

/// Specht ratio S(x) = x^{1/(x-1)} / (e log x^{1/(x-1)}), S(1) = 1.
/// For |x - 1| < 1e-6 the expansion 1 + (x - 1)^2 / 8 is used.
double specht(double x);

/// c = max(K(s)^R, K(t)^R). InvalidBounds unless 0 < s <= t and R in [0, 1].
double reverse_constant(double s, double t, double r);

}  // namespace loewner
