#include "loewner_lab/constants.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "loewner_lab/errors.hpp"

namespace loewner {

namespace {

std::string describe(const char* what, double value) {
  std::ostringstream msg;
  msg.precision(17);
  msg << what << " = " << value;
  return msg.str();
}

}  // namespace

SandwichBounds SandwichBounds::make(double s, double t) {
  if (!(s > 0.0 && s <= t && std::isfinite(t)))
    throw LabError(ErrorKind::InvalidBounds, describe("s", s) + ", " + describe("t", t));
  return {s, t, t / s};
}

double kantorovich(double h) {
  if (!(h > 0.0)) throw LabError(ErrorKind::NonPositiveInput, describe("h", h));
  return (h + 1.0) * (h + 1.0) / (4.0 * h);
}

double kantorovich_gen(double w, double alpha) {
  if (!(w > 0.0)) throw LabError(ErrorKind::NonPositiveInput, describe("w", w));
  if (!std::isfinite(w)) throw LabError(ErrorKind::OutOfRange, describe("w", w));
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw LabError(ErrorKind::OutOfRange, describe("alpha", alpha));
  if (std::abs(w - 1.0) < 1e-9 || alpha < 1e-9 || alpha > 1.0 - 1e-9) return 1.0;

  const double log_w = std::log(w);
  const double w_alpha_minus_1 = std::expm1(alpha * log_w);          // w^a - 1
  const double w_minus_1 = std::expm1(log_w);                        // w - 1
  const double w_alpha_minus_w = w * std::expm1((alpha - 1.0) * log_w);  // w^a - w

  const double lead = w_alpha_minus_w / ((alpha - 1.0) * w_minus_1);
  const double inner = (alpha - 1.0) / alpha * w_alpha_minus_1 / w_alpha_minus_w;
  const double value = lead * std::pow(inner, alpha);
  return std::min(1.0, value);
}

double specht(double x) {
  if (!(x > 0.0)) throw LabError(ErrorKind::NonPositiveInput, describe("x", x));
  const double e = x - 1.0;
  if (e == 0.0) return 1.0;
  if (std::abs(e) < 1e-6) return 1.0 + e * e / 8.0;
  // log x^{1/(x-1)} = log(x) / (x - 1); S = exp(L - 1) / L.
  const double l = std::log1p(e) / e;
  return std::exp(l - 1.0) / l;
}

double reverse_constant(double s, double t, double r) {
  if (!(s > 0.0 && s <= t && std::isfinite(t)))
    throw LabError(ErrorKind::InvalidBounds, describe("s", s) + ", " + describe("t", t));
  if (!(r >= 0.0 && r <= 1.0)) throw LabError(ErrorKind::InvalidBounds, describe("R", r));
  return std::max(std::pow(kantorovich(s), r), std::pow(kantorovich(t), r));
}

}  // namespace loewner
