#include "loewner_lab/funcatalog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "loewner_lab/generators.hpp"

namespace loewner {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double normalized(double lhs, double rhs) { return (rhs - lhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)}); }

struct SlackTracker {
  double slack = kInf;
  double raw = 0.0;

  /// Records the inequality lhs <= rhs.
  void leq(double lhs, double rhs) {
    const double s = normalized(lhs, rhs);
    if (s < slack || std::isnan(s)) {
      slack = std::isnan(s) ? -kInf : s;
      raw = rhs - lhs;
    }
  }

  CheckResult result(std::string id, const FunctionDescriptor& f) const {
    CheckResult r;
    r.check_id = std::move(id);
    r.slack = std::isinf(slack) && slack > 0 ? 0.0 : slack;
    r.raw_slack = raw;
    r.meta.functions = {f.name};
    return r;
  }
};

Interval intersect(const Interval& a, const Interval& b) {
  Interval out;
  if (a.lo > b.lo) {
    out.lo = a.lo;
    out.lo_closed = a.lo_closed;
  } else if (b.lo > a.lo) {
    out.lo = b.lo;
    out.lo_closed = b.lo_closed;
  } else {
    out.lo = a.lo;
    out.lo_closed = a.lo_closed && b.lo_closed;
  }
  if (a.hi < b.hi) {
    out.hi = a.hi;
    out.hi_closed = a.hi_closed;
  } else if (b.hi < a.hi) {
    out.hi = b.hi;
    out.hi_closed = b.hi_closed;
  } else {
    out.hi = a.hi;
    out.hi_closed = a.hi_closed && b.hi_closed;
  }
  return out;
}

FunctionFlags power_flags(double r) {
  FunctionFlags fl;
  fl.geo_concave = fl.geo_convex = true;
  if (r > 0.0) fl.increasing = true;
  if (r < 0.0) fl.decreasing = true;
  if (r >= 0.0 && r <= 1.0) fl.concave = true;
  if (r >= 1.0 || r <= 0.0) fl.convex = true;
  fl.operator_monotone = (r >= -1.0 && r <= 1.0);
  return fl;
}

FunctionDescriptor power(std::string name, double r) {
  FunctionDescriptor d;
  d.name = std::move(name);
  d.eval = [r](double t) { return std::pow(t, r); };
  d.domain = r > 0.0 ? Interval::nonnegative_reals() : Interval::positive_reals();
  d.flags = power_flags(r);
  if (r != 0.0) d.inverse = [r](double y) { return std::pow(y, 1.0 / r); };
  return d;
}

std::vector<FunctionDescriptor> make_catalog() {
  std::vector<FunctionDescriptor> c;

  {
    FunctionDescriptor d = power("identity", 1.0);
    d.eval = [](double t) { return t; };
    d.inverse = [](double y) { return y; };
    c.push_back(std::move(d));
  }
  {
    FunctionDescriptor d = power("sqrt", 0.5);
    d.eval = [](double t) { return std::sqrt(t); };
    d.inverse = [](double y) { return y * y; };
    c.push_back(std::move(d));
  }
  c.push_back(power("pow_0.3", 0.3));

  FunctionFlags inc_dconcave;
  inc_dconcave.increasing = true;
  inc_dconcave.concave = true;
  inc_dconcave.geo_concave = true;
  inc_dconcave.operator_monotone = true;

  c.push_back({"t_over_t_plus_1", [](double t) { return t / (t + 1.0); }, Interval::nonnegative_reals(),
               inc_dconcave, [](double y) { return y / (1.0 - y); }});
  c.push_back({"t_over_sqrt_t_plus_1", [](double t) { return t / std::sqrt(t + 1.0); },
               Interval::nonnegative_reals(), inc_dconcave, nullptr});
  {
    FunctionFlags fl = inc_dconcave;
    fl.operator_monotone = false;
    c.push_back({"one_minus_exp", [](double t) { return -std::expm1(-t); }, Interval::nonnegative_reals(), fl,
                 [](double y) { return -std::log1p(-y); }});
  }
  c.push_back({"log1p", [](double t) { return std::log1p(t); }, Interval::nonnegative_reals(), inc_dconcave,
               [](double y) { return std::expm1(y); }});
  c.push_back({"log", [](double t) { return std::log(t); }, Interval{1.0, kInf, true, false}, inc_dconcave,
               [](double y) { return std::exp(y); }});
  c.push_back({"sqrt_t_minus_1", [](double t) { return std::sqrt(t - 1.0); }, Interval{1.0, kInf, true, false},
               inc_dconcave, [](double y) { return y * y + 1.0; }});
  {
    FunctionFlags fl;
    fl.concave = true;
    fl.geo_concave = true;
    c.push_back({"neg_t_log_t", [](double t) { return t == 0.0 ? 0.0 : -t * std::log(t); },
                 Interval{0.0, 1.0, true, true}, fl, nullptr});
  }
  c.push_back(shifted_identity(1.0));

  c.push_back(power("square", 2.0));
  c.back().eval = [](double t) { return t * t; };
  c.back().inverse = [](double y) { return std::sqrt(y); };
  c.push_back(power("pow_1.5", 1.5));
  {
    FunctionFlags fl;
    fl.increasing = true;
    fl.convex = true;
    fl.geo_convex = true;
    c.push_back({"t_plus_t_cubed", [](double t) { return t + t * t * t; }, Interval::nonnegative_reals(), fl,
                 nullptr});
  }
  c.push_back(power("inv", -1.0));
  c.back().eval = [](double t) { return 1.0 / t; };
  c.back().inverse = [](double y) { return 1.0 / y; };
  c.push_back(power("inv_sqrt", -0.5));
  c.push_back(power("inv_square", -2.0));
  {
    FunctionFlags fl;
    fl.decreasing = true;
    fl.convex = true;
    fl.geo_concave = true;
    fl.operator_monotone = true;
    c.push_back({"inv_one_plus_t", [](double t) { return 1.0 / (1.0 + t); }, Interval::nonnegative_reals(), fl,
                 [](double y) { return 1.0 / y - 1.0; }});
  }
  {
    FunctionFlags fl;
    fl.decreasing = true;
    fl.convex = true;
    fl.geo_convex = true;
    c.push_back({"csc", [](double t) { return 1.0 / std::sin(t); },
                 Interval{0.0, std::numbers::pi / 2.0, false, false}, fl, nullptr});
  }
  return c;
}

}  // namespace

SymMatrix apply_fn(const SymMatrix& a, const FunctionDescriptor& f) { return apply_fn(a, f.eval, f.domain); }

double invert(const FunctionDescriptor& g, double y) {
  if (!g.flags.increasing && !g.flags.decreasing)
    throw LabError(ErrorKind::NotInvertible, g.name + " is not flagged monotone");
  if (g.inverse) {
    const double x = g.inverse(y);
    if (!std::isfinite(x) || !g.domain.contains(x)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << g.name << "^{-1}(" << y << ") is outside the domain";
      throw LabError(ErrorKind::NotInvertible, msg.str());
    }
    return x;
  }
  // Bisection on h(x) = sign * (g(x) - y), increasing in x.
  const double sign = g.flags.increasing ? 1.0 : -1.0;
  const auto h = [&](double x) { return sign * (g(x) - y); };
  double lo = std::max(g.domain.lo, 0.0);
  if (!g.domain.lo_closed) lo = lo == 0.0 ? 1e-300 : std::nextafter(lo, kInf);
  double hi = std::isinf(g.domain.hi) ? std::max(1.0, 2.0 * lo) : g.domain.hi;
  if (!g.domain.hi_closed && !std::isinf(g.domain.hi)) hi = std::nextafter(hi, -kInf);
  if (std::isinf(g.domain.hi)) {
    for (int i = 0; i < 2100 && h(hi) < 0.0; ++i) hi *= 2.0;
  }
  if (h(lo) > 0.0 || h(hi) < 0.0) {
    std::ostringstream msg;
    msg.precision(17);
    msg << y << " is outside the range of " << g.name;
    throw LabError(ErrorKind::NotInvertible, msg.str());
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (h(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

const std::vector<FunctionDescriptor>& builtin_catalog() {
  static const std::vector<FunctionDescriptor> catalog = make_catalog();
  return catalog;
}

const FunctionDescriptor& catalog_entry(const std::string& name) {
  for (const auto& d : builtin_catalog())
    if (d.name == name) return d;
  throw LabError(ErrorKind::OutOfRange, "no catalog function named '" + name + "'");
}

FunctionDescriptor shifted_identity(double shift) {
  FunctionFlags fl;
  fl.increasing = true;
  fl.concave = fl.convex = true;
  fl.geo_concave = true;
  fl.operator_monotone = true;
  std::ostringstream name;
  name << "t_minus_" << shift;
  return {name.str(), [shift](double t) { return t - shift; }, Interval{shift, kInf, false, false}, fl,
          [shift](double y) { return y + shift; }};
}

FunctionDescriptor geometric_mix(const FunctionDescriptor& f, const FunctionDescriptor& g, double alpha) {
  FunctionFlags fl;
  fl.increasing = f.flags.increasing && g.flags.increasing;
  fl.decreasing = f.flags.decreasing && g.flags.decreasing;
  fl.concave = f.doubly_concave() && g.doubly_concave();
  fl.geo_concave = f.flags.geo_concave && g.flags.geo_concave;
  fl.geo_convex = f.flags.geo_convex && g.flags.geo_convex;
  fl.operator_monotone = f.flags.operator_monotone && g.flags.operator_monotone && fl.increasing;
  std::ostringstream name;
  name << "geomix(" << f.name << "," << g.name << "," << alpha << ")";
  ScalarFn fe = f.eval, ge = g.eval;
  return {name.str(), [fe, ge, alpha](double t) { return std::pow(fe(t), alpha) * std::pow(ge(t), 1.0 - alpha); },
          intersect(f.domain, g.domain), fl, nullptr};
}

FunctionDescriptor pointwise_min(const FunctionDescriptor& f, const FunctionDescriptor& g) {
  FunctionFlags fl;
  fl.increasing = f.flags.increasing && g.flags.increasing;
  fl.decreasing = f.flags.decreasing && g.flags.decreasing;
  fl.concave = f.flags.concave && g.flags.concave;
  fl.geo_concave = f.flags.geo_concave && g.flags.geo_concave;
  ScalarFn fe = f.eval, ge = g.eval;
  return {"min(" + f.name + "," + g.name + ")", [fe, ge](double t) { return std::min(fe(t), ge(t)); },
          intersect(f.domain, g.domain), fl, nullptr};
}

FunctionDescriptor reciprocal(const FunctionDescriptor& g) {
  FunctionFlags fl;
  fl.increasing = g.flags.decreasing;
  fl.decreasing = g.flags.increasing;
  fl.geo_concave = g.flags.geo_convex;
  fl.geo_convex = g.flags.geo_concave;
  ScalarFn ge = g.eval;
  return {"recip(" + g.name + ")", [ge](double t) { return 1.0 / ge(t); }, g.domain, fl, nullptr};
}

GridSpec GridSpec::for_domain(const Interval& domain) {
  GridSpec grid;
  if (domain.lo <= 0.0)
    grid.lo = 1e-3;
  else
    grid.lo = domain.lo_closed ? domain.lo : domain.lo + 1e-3;
  if (std::isinf(domain.hi))
    grid.hi = 1e3;
  else
    grid.hi = domain.hi_closed ? domain.hi : domain.hi - 1e-3;
  return grid;
}

std::vector<double> GridSpec::nodes() const {
  if (!(lo > 0.0 && lo <= hi) || points < 2) {
    std::ostringstream msg;
    msg << "grid [" << lo << ", " << hi << "] with " << points << " points";
    throw LabError(ErrorKind::InvalidRange, msg.str());
  }
  std::vector<double> out(static_cast<std::size_t>(points));
  const double step = std::log(hi / lo) / (points - 1);
  for (int i = 0; i < points; ++i) out[static_cast<std::size_t>(i)] = lo * std::exp(step * i);
  out.front() = lo;
  out.back() = hi;
  return out;
}

static std::vector<double> checked_nodes(const FunctionDescriptor& f, const GridSpec& grid) {
  auto nodes = grid.nodes();
  for (double x : nodes) {
    if (!f.domain.contains(x)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "grid node " << x << " lies outside the domain of " << f.name;
      throw LabError(ErrorKind::DomainViolation, msg.str());
    }
  }
  return nodes;
}

CheckResult validate_geo_convexity(const FunctionDescriptor& f, Curvature mode, const GridSpec& grid) {
  const auto nodes = checked_nodes(f, grid);
  std::vector<double> values(nodes.size());
  std::transform(nodes.begin(), nodes.end(), values.begin(), f.eval);
  SlackTracker tracker;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      for (int k = 1; k <= 9; ++k) {
        const double a = 0.1 * k;
        const double mid = f(std::pow(nodes[i], a) * std::pow(nodes[j], 1.0 - a));
        const double mix = std::pow(values[i], a) * std::pow(values[j], 1.0 - a);
        if (mode == Curvature::Concave)
          tracker.leq(mix, mid);
        else
          tracker.leq(mid, mix);
      }
    }
  }
  return tracker.result(mode == Curvature::Concave ? "geo_concave" : "geo_convex", f);
}

CheckResult validate_convexity(const FunctionDescriptor& f, Curvature mode, const GridSpec& grid) {
  const auto nodes = checked_nodes(f, grid);
  std::vector<double> values(nodes.size());
  std::transform(nodes.begin(), nodes.end(), values.begin(), f.eval);
  SlackTracker tracker;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      const double mid = f(0.5 * (nodes[i] + nodes[j]));
      const double chord = 0.5 * (values[i] + values[j]);
      if (mode == Curvature::Concave)
        tracker.leq(chord, mid);
      else
        tracker.leq(mid, chord);
    }
  }
  return tracker.result(mode == Curvature::Concave ? "concave" : "convex", f);
}

CheckResult validate_monotonicity(const FunctionDescriptor& f, const GridSpec& grid) {
  const auto nodes = checked_nodes(f, grid);
  SlackTracker tracker;
  if (f.flags.increasing || f.flags.decreasing) {
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
      if (f.flags.increasing)
        tracker.leq(f(nodes[i]), f(nodes[i + 1]));
      else
        tracker.leq(f(nodes[i + 1]), f(nodes[i]));
    }
  }
  CheckResult r = tracker.result("monotone", f);
  r.hypotheses_met = f.flags.increasing || f.flags.decreasing;
  return r;
}

CheckResult validate_operator_monotone_2x2(const FunctionDescriptor& f, int pairs, std::uint64_t seed) {
  CheckResult r;
  r.check_id = "operator_monotone_2x2";
  r.meta.seed = seed;
  r.meta.n = 2;
  r.meta.functions = {f.name};
  r.slack = 0.0;
  if (!f.flags.increasing && !f.flags.decreasing) {
    r.hypotheses_met = false;
    return r;
  }
  const double lo = std::max(f.domain.lo, 0.0) + 0.05;
  const double hi = std::isinf(f.domain.hi) ? 20.0 : f.domain.hi - 0.05;
  Rng rng(seed);
  double worst = kInf;
  for (int k = 0; k < pairs; ++k) {
    const SymMatrix a = rand_spd(2, {lo, std::max(lo, hi / 2.0)}, rng);
    const double room = std::max(0.0, hi - lambda_max(a));
    Vector v = rand_probe(2, rng);
    const double scale = rng.uniform() * room;
    Matrix vv(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) vv(i, j) = scale * v[i] * v[j];
    const SymMatrix b = a + SymMatrix(vv);
    const SymMatrix fa = apply_fn(a, f);
    const SymMatrix fb = apply_fn(b, f);
    const LoewnerResult lr = f.flags.increasing ? loewner_leq(fa, fb, 0.0) : loewner_leq(fb, fa, 0.0);
    const double norm = std::max({1.0, spectral_norm(fa), spectral_norm(fb)});
    const double s = lr.slack / norm;
    if (s < worst) {
      worst = s;
      r.raw_slack = lr.slack;
    }
  }
  r.slack = std::isinf(worst) ? 0.0 : worst;
  return r;
}

std::vector<CatalogViolation> audit_catalog() {
  std::vector<CatalogViolation> out;
  for (const auto& f : builtin_catalog()) {
    const GridSpec grid = GridSpec::for_domain(f.domain);
    std::vector<CheckResult> results;
    if (f.flags.increasing || f.flags.decreasing) results.push_back(validate_monotonicity(f, grid));
    if (f.flags.concave) results.push_back(validate_convexity(f, Curvature::Concave, grid));
    if (f.flags.convex) results.push_back(validate_convexity(f, Curvature::Convex, grid));
    if (f.flags.geo_concave) results.push_back(validate_geo_convexity(f, Curvature::Concave, grid));
    if (f.flags.geo_convex) results.push_back(validate_geo_convexity(f, Curvature::Convex, grid));
    if (f.flags.operator_monotone) results.push_back(validate_operator_monotone_2x2(f));
    for (const auto& r : results)
      if (!r.passes(kValidatorTol)) out.push_back({f.name, r.check_id, r.slack});
  }
  return out;
}

}  // namespace loewner
