#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "loewner_lab/check_result.hpp"
#include "loewner_lab/matcore.hpp"

namespace loewner {

/// Declared analytic classes of a scalar function. Affine functions are both
/// concave and convex; power functions are both geometrically concave and
/// geometrically convex.
struct FunctionFlags {
  bool increasing = false;
  bool decreasing = false;
  bool concave = false;
  bool convex = false;
  bool geo_concave = false;
  bool geo_convex = false;
  /// Operator monotone in the direction of `increasing` / `decreasing`.
  bool operator_monotone = false;
};

struct FunctionDescriptor {
  std::string name;
  ScalarFn eval;
  Interval domain;
  FunctionFlags flags;
  /// Explicit inverse for monotone entries; invert() falls back to bisection.
  ScalarFn inverse;

  double operator()(double x) const { return eval(x); }

  bool doubly_concave() const noexcept { return flags.concave && flags.geo_concave; }
  bool doubly_convex() const noexcept { return flags.convex && flags.geo_convex; }
  /// Non-negative on (0, inf) by construction: domain reaches down to 0.
  bool defined_on_positive_reals() const noexcept { return domain.lo <= 0.0 && std::isinf(domain.hi); }
};

/// Functional calculus through a descriptor (DomainViolation on eigenvalues
/// outside its domain).
SymMatrix apply_fn(const SymMatrix& a, const FunctionDescriptor& f);

/// g^{-1}(y) for monotone g. NotInvertible when g is not flagged monotone or
/// y lies outside g's range on its domain.
double invert(const FunctionDescriptor& g, double y);

/// The built-in catalog (see README for the list and the classes of each entry).
const std::vector<FunctionDescriptor>& builtin_catalog();

/// Catalog lookup by name; OutOfRange for unknown names.
const FunctionDescriptor& catalog_entry(const std::string& name);

/// t -> t - shift on (shift, inf): increasing, affine, operator monotone.
/// The shift 1 gives the catalog entry "t_minus_1".
FunctionDescriptor shifted_identity(double shift);

/// t -> f(t)^alpha g(t)^{1-alpha} on the intersection of the domains.
FunctionDescriptor geometric_mix(const FunctionDescriptor& f, const FunctionDescriptor& g, double alpha);
/// t -> min(f(t), g(t)).
FunctionDescriptor pointwise_min(const FunctionDescriptor& f, const FunctionDescriptor& g);
/// t -> 1 / g(t).
FunctionDescriptor reciprocal(const FunctionDescriptor& g);

enum class Curvature { Concave, Convex };

/// Geometric spacing of `points` nodes across [lo, hi].
struct GridSpec {
  double lo = 1e-3;
  double hi = 1e3;
  int points = 200;

  /// 200 geometric nodes, 1e-3 inside open endpoints, infinity truncated at 1e3.
  static GridSpec for_domain(const Interval& domain);
  std::vector<double> nodes() const;
};

/// Geometric concavity/convexity, g(x^a y^{1-a}) vs g(x)^a g(y)^{1-a}, over
/// all grid pairs and a in {0.1, ..., 0.9}. Passes iff slack >= -1e-10.
CheckResult validate_geo_convexity(const FunctionDescriptor& f, Curvature mode, const GridSpec& grid);
/// Midpoint concavity/convexity over all grid pairs.
CheckResult validate_convexity(const FunctionDescriptor& f, Curvature mode, const GridSpec& grid);
/// Declared increasing/decreasing direction over consecutive grid nodes.
CheckResult validate_monotonicity(const FunctionDescriptor& f, const GridSpec& grid);
/// Spot check of operator monotonicity on random 2x2 ordered pairs A <= B
/// with spectra inside the domain: f(A) <= f(B) (or >= when decreasing).
CheckResult validate_operator_monotone_2x2(const FunctionDescriptor& f, int pairs = 200, std::uint64_t seed = 2024);

inline constexpr double kValidatorTol = 1e-10;

struct CatalogViolation {
  std::string function;
  std::string validator;
  double slack;
};

/// Runs every validator implied by the declared flags of every catalog entry.
std::vector<CatalogViolation> audit_catalog();

}  // namespace loewner
