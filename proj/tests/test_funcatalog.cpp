#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "loewner_lab/funcatalog.hpp"

using namespace loewner;

namespace {

FunctionDescriptor affine() {
  FunctionFlags fl;
  fl.increasing = fl.concave = fl.convex = true;
  return {"two_t_plus_1", [](double t) { return 2.0 * t + 1.0; }, Interval::nonnegative_reals(), fl, nullptr};
}

GridSpec grid_for(const FunctionDescriptor& f) { return GridSpec::for_domain(f.domain); }

}  // namespace

TEST(Catalog, SizeAndUniqueNames) {
  const auto& c = builtin_catalog();
  EXPECT_GE(c.size(), 12u);
  std::set<std::string> names;
  for (const auto& f : c) names.insert(f.name);
  EXPECT_EQ(names.size(), c.size());
}

TEST(Catalog, RequiredEntries) {
  const auto& sqrt_f = catalog_entry("sqrt");
  EXPECT_TRUE(sqrt_f.flags.operator_monotone);
  EXPECT_TRUE(sqrt_f.doubly_concave());

  const auto& inv = catalog_entry("inv");
  EXPECT_TRUE(inv.flags.decreasing);
  EXPECT_TRUE(inv.flags.geo_convex);

  const auto& shifted = catalog_entry("t_minus_1");
  EXPECT_TRUE(shifted.flags.increasing);
  EXPECT_TRUE(shifted.doubly_concave());
  EXPECT_TRUE(shifted.flags.operator_monotone);
  EXPECT_FALSE(shifted.domain.contains(1.0));
  EXPECT_TRUE(shifted.domain.contains(1.0 + 1e-9));

  EXPECT_THROW(catalog_entry("no_such_function"), LabError);
}

TEST(Catalog, EveryClassRepresentedTwice) {
  int opmono_inc = 0, opmono_dec = 0, dconcave = 0, dconvex_inc = 0, dec_geoconvex = 0, dconvex_dec = 0;
  for (const auto& f : builtin_catalog()) {
    if (!f.defined_on_positive_reals()) continue;
    opmono_inc += f.flags.increasing && f.flags.operator_monotone;
    opmono_dec += f.flags.decreasing && f.flags.operator_monotone;
    dconcave += f.flags.increasing && f.doubly_concave();
    dconvex_inc += f.flags.increasing && f.doubly_convex();
    dec_geoconvex += f.flags.decreasing && f.flags.geo_convex;
    dconvex_dec += f.flags.decreasing && f.doubly_convex();
  }
  EXPECT_GE(opmono_inc, 2);
  EXPECT_GE(opmono_dec, 2);
  EXPECT_GE(dconcave, 2);
  EXPECT_GE(dconvex_inc, 2);
  EXPECT_GE(dec_geoconvex, 2);
  EXPECT_GE(dconvex_dec, 2);
}

TEST(Catalog, NonNegativeOnGrid) {
  for (const auto& f : builtin_catalog())
    for (double x : grid_for(f).nodes()) {
      const double v = f(x);
      EXPECT_TRUE(std::isfinite(v)) << f.name << " at " << x;
      EXPECT_GE(v, 0.0) << f.name << " at " << x;
    }
}

TEST(GridSpec, ClipsOpenEndsAndTruncatesInfinity) {
  const auto g = GridSpec::for_domain(Interval::positive_reals());
  const auto nodes = g.nodes();
  ASSERT_EQ(nodes.size(), 200u);
  EXPECT_DOUBLE_EQ(nodes.front(), 1e-3);
  EXPECT_DOUBLE_EQ(nodes.back(), 1e3);
  for (std::size_t i = 1; i < nodes.size(); ++i) EXPECT_GT(nodes[i], nodes[i - 1]);

  const auto shifted = GridSpec::for_domain(Interval{1.0, INFINITY, false, false});
  EXPECT_GT(shifted.lo, 1.0);
}

TEST(GeoConvexity, IdentityIsEqualityBothModes) {
  const auto& f = catalog_entry("identity");
  for (auto mode : {Curvature::Concave, Curvature::Convex}) {
    const auto r = validate_geo_convexity(f, mode, grid_for(f));
    EXPECT_GE(r.slack, -1e-15);
    EXPECT_LE(r.slack, 1e-12);
  }
}

TEST(GeoConvexity, Examples) {
  const auto& frac = catalog_entry("t_over_t_plus_1");
  EXPECT_TRUE(validate_geo_convexity(frac, Curvature::Concave, grid_for(frac)).passes(kValidatorTol));
  const auto& sq = catalog_entry("square");
  const auto r = validate_geo_convexity(sq, Curvature::Convex, grid_for(sq));
  EXPECT_TRUE(r.passes(kValidatorTol));
  EXPECT_LE(r.slack, 1e-12);
}

TEST(GeoConvexity, DetectsWrongMode) {
  const auto& frac = catalog_entry("t_over_t_plus_1");
  EXPECT_FALSE(validate_geo_convexity(frac, Curvature::Convex, grid_for(frac)).passes(kValidatorTol));
}

TEST(Convexity, Examples) {
  const auto lin = affine();
  for (auto mode : {Curvature::Concave, Curvature::Convex}) {
    const auto r = validate_convexity(lin, mode, grid_for(lin));
    EXPECT_TRUE(r.passes(kValidatorTol));
    EXPECT_LE(r.slack, 1e-12);
  }
  const auto& log_f = catalog_entry("log");
  EXPECT_TRUE(validate_convexity(log_f, Curvature::Concave, grid_for(log_f)).passes(kValidatorTol));
  const auto& inv = catalog_entry("inv");
  EXPECT_TRUE(validate_convexity(inv, Curvature::Convex, grid_for(inv)).passes(kValidatorTol));
  EXPECT_FALSE(validate_convexity(inv, Curvature::Concave, grid_for(inv)).passes(kValidatorTol));
}

TEST(Monotonicity, DetectsDirection) {
  const auto& sqrt_f = catalog_entry("sqrt");
  EXPECT_TRUE(validate_monotonicity(sqrt_f, grid_for(sqrt_f)).passes(kValidatorTol));
  FunctionDescriptor liar = sqrt_f;
  liar.flags.increasing = false;
  liar.flags.decreasing = true;
  EXPECT_FALSE(validate_monotonicity(liar, grid_for(liar)).passes(kValidatorTol));
}

TEST(OperatorMonotone2x2, CatchesMislabeledSquare) {
  EXPECT_TRUE(validate_operator_monotone_2x2(catalog_entry("sqrt")).passes(kValidatorTol));
  EXPECT_TRUE(validate_operator_monotone_2x2(catalog_entry("inv")).passes(kValidatorTol));
  FunctionDescriptor sq = catalog_entry("square");
  sq.flags.operator_monotone = true;
  EXPECT_FALSE(validate_operator_monotone_2x2(sq).passes(kValidatorTol));
}

TEST(Closure, GeometricMeanOfDoublyConcave) {
  const auto f = geometric_mix(catalog_entry("sqrt"), catalog_entry("log1p"), 0.5);
  EXPECT_TRUE(f.doubly_concave());
  EXPECT_TRUE(validate_geo_convexity(f, Curvature::Concave, grid_for(f)).passes(kValidatorTol));
  EXPECT_TRUE(validate_convexity(f, Curvature::Concave, grid_for(f)).passes(kValidatorTol));
}

TEST(Closure, MinimumOfDoublyConcave) {
  const auto f = pointwise_min(catalog_entry("t_over_t_plus_1"), catalog_entry("pow_0.3"));
  EXPECT_TRUE(validate_geo_convexity(f, Curvature::Concave, grid_for(f)).passes(kValidatorTol));
  EXPECT_TRUE(validate_convexity(f, Curvature::Concave, grid_for(f)).passes(kValidatorTol));
}

TEST(Closure, ReciprocalOfDecreasingGeoConvex) {
  for (const char* name : {"inv", "inv_sqrt", "inv_square", "csc"}) {
    const auto f = reciprocal(catalog_entry(name));
    EXPECT_TRUE(f.flags.increasing) << name;
    EXPECT_TRUE(validate_geo_convexity(f, Curvature::Concave, grid_for(f)).passes(kValidatorTol)) << name;
  }
}

TEST(Invert, ExplicitAndBisection) {
  EXPECT_DOUBLE_EQ(invert(catalog_entry("sqrt"), 3.0), 9.0);
  const auto& f = catalog_entry("t_over_sqrt_t_plus_1");
  for (double x : {0.01, 0.5, 3.0, 250.0}) EXPECT_NEAR(invert(f, f(x)), x, 1e-12 * std::max(1.0, x));
  EXPECT_THROW(invert(catalog_entry("t_over_t_plus_1"), 1.5), LabError);
  EXPECT_THROW(invert(catalog_entry("neg_t_log_t"), 0.1), LabError);
}

TEST(ShiftedIdentity, Naming) {
  EXPECT_EQ(shifted_identity(1.0).name, "t_minus_1");
  EXPECT_EQ(shifted_identity(0.5)(2.0), 1.5);
}

TEST(Audit, CatalogClean) {
  const auto violations = audit_catalog();
  for (const auto& v : violations) ADD_FAILURE() << v.function << " fails " << v.validator << " (" << v.slack << ")";
  EXPECT_TRUE(violations.empty());
}
