#include "loewner_lab/checkers.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "loewner_lab/generators.hpp"

namespace loewner {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Running minimum of normalized slack over sub-inequalities.
class SlackAcc {
 public:
  void scalar(double lhs, double rhs) {
    take((rhs - lhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)}), rhs - lhs);
  }

  void loewner(const SymMatrix& x, const SymMatrix& y) {
    const double raw = lambda_min(y - x);
    take(raw / std::max({1.0, spectral_norm(x), spectral_norm(y)}), raw);
  }

  void chain(const Vector& lhs, const Vector& rhs) {
    double scale = 1.0;
    for (double v : lhs) scale = std::max(scale, std::abs(v));
    for (double v : rhs) scale = std::max(scale, std::abs(v));
    for (std::size_t k = 0; k < lhs.size(); ++k) take((rhs[k] - lhs[k]) / scale, rhs[k] - lhs[k]);
  }

  void fill(CheckResult& r) const {
    r.slack = slack_;
    r.raw_slack = raw_;
  }

 private:
  void take(double normalized, double raw) {
    if (std::isnan(normalized)) normalized = -kInf;
    if (normalized < slack_) {
      slack_ = normalized;
      raw_ = raw;
    }
  }

  double slack_ = kInf;
  double raw_ = 0.0;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw LabError(ErrorKind::HypothesisUnsatisfied, what);
}

void require_same_size(const SymMatrix& a, const SymMatrix& b) {
  if (a.size() != b.size()) throw LabError(ErrorKind::DimensionMismatch, "operands differ in size");
}

CheckResult make_result(std::string id, std::size_t n, const MeanWeight& w, std::vector<std::string> functions = {}) {
  CheckResult r;
  r.check_id = std::move(id);
  r.meta.n = n;
  r.meta.alpha = w.alpha();
  r.meta.p = w.p();
  r.meta.q = w.q();
  r.meta.functions = std::move(functions);
  return r;
}

void require_conjugate(const MeanWeight& w) {
  require(w.p().has_value() && w.q().has_value(), "weight must carry conjugate exponents (p, q)");
}

double qf(const SymMatrix& a, const Vector& x) { return quad_form(a, x); }

/// Ux renormalized (U is orthogonal, so only rounding is removed).
Vector rotate(const Matrix& u, const Vector& x) {
  Vector ux = u * x;
  const double nrm = norm2(ux);
  for (auto& v : ux) v /= nrm;
  return ux;
}

double holder_mix(double x, double y, double p, double q) { return std::pow(x, 1.0 / p) * std::pow(y, 1.0 / q); }

bool commutes(const SymMatrix& a, const SymMatrix& b) {
  return commutator_norm(a, b) <= kCommuteTol * a.frobenius_norm() * b.frobenius_norm();
}

}  // namespace

CheckResult check_young(const SymMatrix& a, const SymMatrix& b, const MeanWeight& w) {
  require_same_size(a, b);
  CheckResult r = make_result("check_young", a.size(), w);
  const SymMatrix m = gmean(a, b, w);
  const SymMatrix am = amean(a, b, w);
  SlackAcc acc;
  acc.loewner(m, am);
  acc.fill(r);
  r.attained_ratio = lambda_max(congruence(mpow(am, -0.5).matrix(), m));
  return r;
}

CheckResult check_reverse_young(const SymMatrix& a, const SymMatrix& b, const MeanWeight& w) {
  require_same_size(a, b);
  CheckResult r = make_result("check_reverse_young", a.size(), w);
  const SandwichBounds sb = measure_sandwich(a, b);
  const double c = reverse_constant(sb.s, sb.t, w.r());
  const SymMatrix m = gmean(a, b, w);
  const SymMatrix am = amean(a, b, w);
  SlackAcc acc;
  acc.loewner(am, c * m);
  acc.fill(r);
  r.constant_used = c;
  r.attained_ratio = lambda_max(congruence(mpow(m, -0.5).matrix(), am));
  return r;
}

CheckResult check_lemma_gdec(const SymMatrix& a, const SymMatrix& b, const MeanWeight& w,
                             const FunctionDescriptor& g) {
  require_same_size(a, b);
  require(g.flags.decreasing && g.flags.operator_monotone, g.name + " is not operator monotone decreasing");
  CheckResult r = make_result("check_lemma_gdec", a.size(), w, {g.name});
  const SandwichBounds sb = measure_sandwich(a, b);
  const double c = reverse_constant(sb.s, sb.t, w.r());
  const SymMatrix m = gmean(a, b, w);
  const SymMatrix gm = apply_fn(m, g);
  const SymMatrix gcm = apply_fn(c * m, g);
  const SymMatrix rhs = gmean(apply_fn(a, g), apply_fn(b, g), w);
  SlackAcc acc;
  acc.loewner((1.0 / c) * gm, gcm);
  acc.loewner(gcm, rhs);
  acc.fill(r);
  r.constant_used = c;
  return r;
}

CheckResult check_lemma_fmono(const SymMatrix& a, const SymMatrix& b, const MeanWeight& w,
                              const FunctionDescriptor& f) {
  require_same_size(a, b);
  require(f.flags.increasing && f.flags.operator_monotone, f.name + " is not operator monotone increasing");
  CheckResult r = make_result("check_lemma_fmono", a.size(), w, {f.name});
  const SandwichBounds sb = measure_sandwich(a, b);
  const double c = reverse_constant(sb.s, sb.t, w.r());
  const SymMatrix m = gmean(a, b, w);
  const SymMatrix fm = apply_fn(m, f);
  const SymMatrix fcm = apply_fn(c * m, f);
  const SymMatrix lower = gmean(apply_fn(a, f), apply_fn(b, f), w);
  SlackAcc acc;
  acc.loewner(fcm, c * fm);
  acc.loewner(lower, fcm);
  acc.fill(r);
  r.constant_used = c;
  return r;
}

CheckResult check_aczel_variant(const SymMatrix& a, const SymMatrix& b, const MeanWeight& w,
                                const FunctionDescriptor& f, Probes probes) {
  require_same_size(a, b);
  require_conjugate(w);
  require(f.flags.increasing && f.flags.operator_monotone, f.name + " is not operator monotone increasing");
  CheckResult r = make_result("check_aczel_variant", a.size(), w, {f.name});
  const double p = w.p_value(), q = w.q_value();
  const SymMatrix pa = mpow(a, p);
  const SymMatrix qb = mpow(b, q);
  const SandwichBounds sb = measure_sandwich(pa, qb);
  const double c = reverse_constant(sb.s, sb.t, w.r());
  const SymMatrix fm = apply_fn(gmean(pa, qb, w), f);
  const SymMatrix fp = apply_fn(pa, f);
  const SymMatrix fq = apply_fn(qb, f);
  SlackAcc acc;
  acc.loewner((1.0 / c) * gmean(fp, fq, w), fm);
  for (const auto& x : probes) acc.scalar(holder_mix(qf(fp, x), qf(fq, x), p, q) / c, qf(fm, x));
  acc.fill(r);
  r.constant_used = c;
  return r;
}

CheckResult check_scalar_sandwich(const SymMatrix& a, const SymMatrix& b, const MeanWeight& w, Probes probes) {
  require_same_size(a, b);
  CheckResult r = make_result("check_scalar_sandwich", a.size(), w);
  const SandwichBounds sb = measure_sandwich(a, b);
  const double k = kantorovich_gen(sb.w, w.alpha());
  const SymMatrix m = gmean(a, b, w);
  const double alpha = w.alpha();
  SlackAcc acc;
  for (const auto& x : probes) {
    const double mx = qf(m, x);
    const double mix = std::pow(qf(a, x), 1.0 - alpha) * std::pow(qf(b, x), alpha);
    acc.scalar(mx, mix);
    acc.scalar(mix, mx / k);
  }
  acc.fill(r);
  r.constant_used = k;
  return r;
}

CheckResult check_eig_doubly_concave(const SymMatrix& a, const SymMatrix& b, const MeanWeight& w,
                                     const FunctionDescriptor& f) {
  require_same_size(a, b);
  require(f.flags.increasing && f.doubly_concave(), f.name + " is not increasing doubly concave");
  CheckResult r = make_result("check_eig_doubly_concave", a.size(), w, {f.name});
  const SandwichBounds sb = measure_sandwich(a, b);
  const double k = kantorovich_gen(sb.w, w.alpha());
  const SymMatrix m = gmean(a, b, w);
  Vector top = eigenvalues(apply_fn(m, f));
  for (auto& v : top) v /= k;
  const Vector mid = eigenvalues(apply_fn((1.0 / k) * m, f));
  const Vector low = eigenvalues(gmean(apply_fn(a, f), apply_fn(b, f), w));
  SlackAcc acc;
  acc.chain(mid, top);
  acc.chain(low, mid);
  acc.fill(r);
  r.constant_used = k;
  return r;
}

CheckResult check_unitary_form_concave(const SymMatrix& a, const SymMatrix& b, const MeanWeight& w,
                                       const FunctionDescriptor& f) {
  require_same_size(a, b);
  require(f.flags.increasing && f.doubly_concave(), f.name + " is not increasing doubly concave");
  CheckResult r = make_result("check_unitary_form_concave", a.size(), w, {f.name});
  const SandwichBounds sb = measure_sandwich(a, b);
  const double k = kantorovich_gen(sb.w, w.alpha());
  const SymMatrix x = apply_fn(gmean(a, b, w), f);
  const SymMatrix y = gmean(apply_fn(a, f), apply_fn(b, f), w);
  const Matrix u = aligned_unitary(x, y);
  SlackAcc acc;
  acc.loewner(k * congruence(u, y), x);
  acc.fill(r);
  r.constant_used = k;
  return r;
}

namespace {

/// Loewner and probe parts of the generalized-Kantorovich Aczel inequality
/// for one function f on (P, Q).
void gen_kantorovich_parts(const SymMatrix& pa, const SymMatrix& qb, const MeanWeight& w, double k,
                           const FunctionDescriptor& f, Probes probes, bool with_loewner, SlackAcc& acc) {
  const double p = w.p_value(), q = w.q_value();
  const SymMatrix x = apply_fn(gmean(pa, qb, w), f);
  const SymMatrix fp = apply_fn(pa, f);
  const SymMatrix fq = apply_fn(qb, f);
  const SymMatrix y = gmean(fp, fq, w);
  const Matrix u = aligned_unitary(x, y);
  if (with_loewner) acc.loewner(k * congruence(u, y), x);
  for (const auto& v : probes) {
    const Vector uv = rotate(u, v);
    acc.scalar(k * k * holder_mix(qf(fp, v), qf(fq, v), p, q), qf(x, uv));
  }
}

}  // namespace

CheckResult check_aczel_gen_kantorovich(const SymMatrix& a, const SymMatrix& b, const MeanWeight& w,
                                        const FunctionDescriptor& f, Probes probes) {
  require_same_size(a, b);
  require_conjugate(w);
  require(f.flags.increasing && f.flags.operator_monotone && f.doubly_concave(),
          f.name + " is not operator monotone and doubly concave");
  CheckResult r = make_result("check_aczel_gen_kantorovich", a.size(), w, {f.name});
  const SymMatrix pa = mpow(a, w.p_value());
  const SymMatrix qb = mpow(b, w.q_value());
  const SandwichBounds sb = measure_sandwich(pa, qb);
  if (sb.s > 1.0 + 1e-12 || sb.t < 1.0 - 1e-12) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "sandwich [" << sb.s << ", " << sb.t << "] does not straddle 1";
    throw LabError(ErrorKind::HypothesisUnsatisfied, msg.str());
  }
  const double k = kantorovich_gen(sb.w, w.alpha());
  SlackAcc acc;
  gen_kantorovich_parts(pa, qb, w, k, f, probes, true, acc);

  const FunctionDescriptor shifted = shifted_identity(1.0);
  if (f.name != shifted.name && commutes(pa, qb) && lambda_min(pa) > 1.0 && lambda_min(qb) > 1.0) {
    gen_kantorovich_parts(pa, qb, w, k, shifted, probes, false, acc);
    r.meta.functions.push_back(shifted.name);
  }
  acc.fill(r);
  r.constant_used = k;
  return r;
}

CheckResult check_eig_doubly_convex(const SymMatrix& a, const SymMatrix& b, const MeanWeight& w,
                                    const FunctionDescriptor& g) {
  require_same_size(a, b);
  require(g.flags.increasing && g.doubly_convex(), g.name + " is not increasing doubly convex");
  CheckResult r = make_result("check_eig_doubly_convex", a.size(), w, {g.name});
  const SymMatrix ga = apply_fn(a, g);
  const SymMatrix gb = apply_fn(b, g);
  const SandwichBounds sb = measure_sandwich(ga, gb);
  const double k = kantorovich_gen(sb.w, w.alpha());
  const Vector lhs = eigenvalues(apply_fn(gmean(a, b, w), g));
  Vector rhs = eigenvalues(gmean(ga, gb, w));
  for (auto& v : rhs) v /= k;
  SlackAcc acc;
  acc.chain(lhs, rhs);
  acc.fill(r);
  r.constant_used = k;
  return r;
}

CheckResult check_reverse_aczel(const SymMatrix& a, const SymMatrix& b, const MeanWeight& w,
                                const FunctionDescriptor& g, Probes probes) {
  require_same_size(a, b);
  require_conjugate(w);
  require(g.flags.increasing && g.doubly_convex(), g.name + " is not increasing doubly convex");
  CheckResult r = make_result("check_reverse_aczel", a.size(), w, {g.name});
  const double p = w.p_value(), q = w.q_value();
  const SymMatrix pa = mpow(a, p);
  const SymMatrix qb = mpow(b, q);
  const SymMatrix gp = apply_fn(pa, g);
  const SymMatrix gq = apply_fn(qb, g);
  const SandwichBounds sb = measure_sandwich(gp, gq);
  const double k = kantorovich_gen(sb.w, w.alpha());
  const SymMatrix x = apply_fn(gmean(pa, qb, w), g);
  const SymMatrix y = gmean(gp, gq, w);
  const Matrix u = aligned_unitary(x, y);
  SlackAcc acc;
  acc.loewner(x, (1.0 / k) * congruence(u, y));
  for (const auto& v : probes) acc.scalar(qf(x, rotate(u, v)), holder_mix(qf(gp, v), qf(gq, v), p, q) / k);
  acc.fill(r);
  r.constant_used = k;
  return r;
}

CheckResult check_eig_dec_geoconvex(const SymMatrix& a, const SymMatrix& b, const MeanWeight& w,
                                    const FunctionDescriptor& g) {
  require_same_size(a, b);
  require(g.flags.decreasing && g.flags.geo_convex, g.name + " is not decreasing geometrically convex");
  CheckResult r = make_result("check_eig_dec_geoconvex", a.size(), w, {g.name});
  const SandwichBounds sb = measure_sandwich(a, b);
  const double k = kantorovich_gen(sb.w, w.alpha());
  const SymMatrix m = gmean(a, b, w);
  const Vector lhs = eigenvalues(apply_fn((1.0 / k) * m, g));
  const Vector rhs = eigenvalues(gmean(apply_fn(a, g), apply_fn(b, g), w));
  SlackAcc acc;
  acc.chain(lhs, rhs);
  acc.fill(r);
  r.constant_used = k;
  return r;
}

CheckResult check_reverse_aczel_dec(const SymMatrix& a, const SymMatrix& b, const MeanWeight& w,
                                    const FunctionDescriptor& g, Probes probes) {
  require_same_size(a, b);
  require_conjugate(w);
  require(g.flags.decreasing && g.doubly_convex(), g.name + " is not decreasing doubly convex");
  CheckResult r = make_result("check_reverse_aczel_dec", a.size(), w, {g.name});
  const double p = w.p_value(), q = w.q_value();
  const SymMatrix pa = mpow(a, p);
  const SymMatrix qb = mpow(b, q);
  const SandwichBounds sb = measure_sandwich(pa, qb);
  const double k = kantorovich_gen(sb.w, w.alpha());
  const SymMatrix gp = apply_fn(pa, g);
  const SymMatrix gq = apply_fn(qb, g);
  const SymMatrix x = apply_fn((1.0 / k) * gmean(pa, qb, w), g);
  const SymMatrix y = gmean(gp, gq, w);
  const Matrix u = aligned_unitary(x, y);
  SlackAcc acc;
  acc.loewner(x, congruence(u, y));
  for (const auto& v : probes) acc.scalar(qf(x, rotate(u, v)), holder_mix(qf(gp, v), qf(gq, v), p, q));
  acc.fill(r);
  r.constant_used = k;
  return r;
}

// ---------------------------------------------------------------------------
// Scalar checks

namespace {

void require_sequences(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw LabError(ErrorKind::DimensionMismatch, "sequences differ in length");
  if (a.size() < 2) throw LabError(ErrorKind::InvalidDimension, "sequences need a head and at least one tail term");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] > 0.0 && b[i] > 0.0 && std::isfinite(a[i]) && std::isfinite(b[i])))
      throw LabError(ErrorKind::NonPositiveInput, "sequence entries must be positive and finite");
}

CheckResult scalar_result(std::string id, std::size_t n, double lhs, double rhs) {
  CheckResult r;
  r.check_id = std::move(id);
  r.meta.n = n;
  r.raw_slack = lhs - rhs;
  r.slack = (lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
  if (std::isnan(r.slack)) r.slack = -kInf;
  return r;
}

}  // namespace

CheckResult check_aczel_classic(std::span<const double> a, std::span<const double> b) {
  require_sequences(a, b);
  double ha = a[0] * a[0], hb = b[0] * b[0], cross = a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) {
    ha -= a[i] * a[i];
    hb -= b[i] * b[i];
    cross -= a[i] * b[i];
  }
  require(ha > 0.0 && hb > 0.0, "Aczel hypotheses a1^2 > sum a_i^2, b1^2 > sum b_i^2 fail");
  return scalar_result("check_aczel_classic", a.size(), cross * cross, ha * hb);
}

CheckResult check_popoviciu(std::span<const double> a, std::span<const double> b, double p, double q) {
  require_sequences(a, b);
  const MeanWeight w = MeanWeight::conjugate(p, q);
  double ha = std::pow(a[0], p), hb = std::pow(b[0], q), cross = a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) {
    ha -= std::pow(a[i], p);
    hb -= std::pow(b[i], q);
    cross -= a[i] * b[i];
  }
  require(ha > 0.0 && hb > 0.0, "Popoviciu hypotheses a1^p > sum a_i^p, b1^q > sum b_i^q fail");
  const double rhs = (p == 2.0 && q == 2.0) ? std::sqrt(ha * hb) : holder_mix(ha, hb, p, q);
  CheckResult r = scalar_result("check_popoviciu", a.size(), cross, rhs);
  r.meta.alpha = w.alpha();
  r.meta.p = p;
  r.meta.q = q;
  return r;
}

CheckResult check_sum_counterpart(const ScalarInstance& inst, const FunctionDescriptor& f) {
  require(!inst.has_head, "sum counterpart takes an instance without head terms");
  require(f.flags.increasing, f.name + " is not increasing");
  const MeanWeight w = MeanWeight::conjugate(inst.p, inst.q);
  const SandwichBounds sb = scalar_ratio_bounds(inst);
  const double c = reverse_constant(sb.s, sb.t, w.r());
  const auto term = [&f](double x) {
    if (!f.domain.contains(x)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << x << " outside the domain of " << f.name;
      throw LabError(ErrorKind::DomainViolation, msg.str());
    }
    const double v = f(x);
    require(v >= 0.0, f.name + " is negative on the instance");
    return v;
  };
  double lhs = 0.0, sp = 0.0, sq = 0.0;
  for (std::size_t i = 0; i < inst.a.size(); ++i) {
    lhs += term(inst.a[i] * inst.b[i]);
    sp += term(std::pow(inst.a[i], inst.p));
    sq += term(std::pow(inst.b[i], inst.q));
  }
  CheckResult r = scalar_result("check_sum_counterpart", inst.a.size(), lhs, holder_mix(sp, sq, inst.p, inst.q) / c);
  r.constant_used = c;
  r.meta.alpha = w.alpha();
  r.meta.p = inst.p;
  r.meta.q = inst.q;
  r.meta.functions = {f.name};
  return r;
}

CheckResult check_aczel_counterpart(const ScalarInstance& inst) {
  require(inst.has_head, "Aczel counterpart needs head terms");
  require_sequences(inst.a, inst.b);
  const MeanWeight w = MeanWeight::conjugate(inst.p, inst.q);
  const double x1 = inst.a[0], y1 = inst.b[0];
  double sp = 0.0, sq = 0.0, cross = 0.0;
  for (std::size_t i = 1; i < inst.a.size(); ++i) {
    sp += std::pow(inst.a[i], inst.p);
    sq += std::pow(inst.b[i], inst.q);
    cross += inst.a[i] * inst.b[i];
  }
  const double hp = std::pow(x1, inst.p), hq = std::pow(y1, inst.q);
  require(sp >= hp && sq >= hq && cross >= x1 * y1,
          "counterpart hypotheses sum x_i^p >= x1^p, sum y_i^q >= y1^q, sum x_i y_i >= x1 y1 fail");
  const SandwichBounds sb = scalar_ratio_bounds(inst);
  const double c = reverse_constant(sb.s, sb.t, w.r());
  CheckResult r = scalar_result("check_aczel_counterpart", inst.a.size(), cross - x1 * y1,
                                holder_mix(sp - hp, sq - hq, inst.p, inst.q) / c);
  r.constant_used = c;
  r.meta.alpha = w.alpha();
  r.meta.p = inst.p;
  r.meta.q = inst.q;
  return r;
}

CheckResult check_commuting_product(const SymMatrix& a, const SymMatrix& b, const MeanWeight& w,
                                    const FunctionDescriptor& f, Probes probes) {
  require_same_size(a, b);
  require_conjugate(w);
  require(f.flags.increasing && f.flags.operator_monotone, f.name + " is not operator monotone increasing");
  if (!commutes(a, b)) {
    std::ostringstream msg;
    msg << "||AB - BA||_F = " << commutator_norm(a, b) << " exceeds the commuting threshold";
    throw LabError(ErrorKind::NotCommuting, msg.str());
  }
  CheckResult r = make_result("check_commuting_product", a.size(), w, {f.name});
  const double p = w.p_value(), q = w.q_value();
  const SymMatrix pa = mpow(a, p);
  const SymMatrix qb = mpow(b, q);
  const SandwichBounds sb = measure_sandwich(pa, qb);
  const double c = reverse_constant(sb.s, sb.t, w.r());
  const SymMatrix ab = symmetric_product(a, b);
  const SymMatrix rhs = symmetric_product(mpow(apply_fn(pa, f), 1.0 / p), mpow(apply_fn(qb, f), 1.0 / q));
  SlackAcc acc;
  acc.loewner((1.0 / c) * rhs, apply_fn(ab, f));
  if (lambda_min(pa) > 1.0 && lambda_min(qb) > 1.0) {
    for (const auto& x : probes)
      acc.scalar(holder_mix(qf(pa, x) - 1.0, qf(qb, x) - 1.0, p, q) / c, qf(ab, x) - 1.0);
    r.meta.functions.push_back("t_minus_1");
  }
  acc.fill(r);
  r.constant_used = c;
  return r;
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::array<CheckInfo, 19> kRegistry{{
    {"check_gmean_identities", CheckKind::Matrix},
    {"check_young", CheckKind::Matrix},
    {"check_reverse_young", CheckKind::Matrix},
    {"check_lemma_gdec", CheckKind::Matrix},
    {"check_lemma_fmono", CheckKind::Matrix},
    {"check_aczel_variant", CheckKind::Matrix},
    {"check_scalar_sandwich", CheckKind::Matrix},
    {"check_eig_doubly_concave", CheckKind::Matrix},
    {"check_unitary_form_concave", CheckKind::Matrix},
    {"check_aczel_gen_kantorovich", CheckKind::Matrix},
    {"check_eig_doubly_convex", CheckKind::Matrix},
    {"check_reverse_aczel", CheckKind::Matrix},
    {"check_eig_dec_geoconvex", CheckKind::Matrix},
    {"check_reverse_aczel_dec", CheckKind::Matrix},
    {"check_commuting_product", CheckKind::Matrix},
    {"check_aczel_classic", CheckKind::Scalar},
    {"check_popoviciu", CheckKind::Scalar},
    {"check_sum_counterpart", CheckKind::Scalar},
    {"check_aczel_counterpart", CheckKind::Scalar},
}};

}  // namespace

std::span<const CheckInfo> check_registry() { return kRegistry; }

const CheckInfo& check_info(std::string_view id) {
  for (const auto& info : kRegistry)
    if (info.id == id) return info;
  throw LabError(ErrorKind::ConfigError, "unknown check id '" + std::string(id) + "'");
}

}  // namespace loewner
