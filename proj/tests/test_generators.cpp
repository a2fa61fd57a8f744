#include <gtest/gtest.h>

#include <cmath>

#include "loewner_lab/generators.hpp"

using namespace loewner;

namespace {

double max_abs_diff(const SymMatrix& x, const SymMatrix& y) {
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) d = std::max(d, std::abs(x(i, j) - y(i, j)));
  return d;
}

}  // namespace

// Reference streams from an independent xoshiro256** / splitmix64 implementation.
TEST(Rng, ReferenceStream) {
  Rng zero(0);
  EXPECT_EQ(zero.next(), 0x99ec5f36cb75f2b4ULL);
  EXPECT_EQ(zero.next(), 0xbf6e1f784956452aULL);
  EXPECT_EQ(zero.next(), 0x1a5f849d4933e6e0ULL);
  Rng answer(42);
  EXPECT_EQ(answer.next(), 0x15780b2e0c2ec716ULL);
  EXPECT_EQ(answer.next(), 0x6104d9866d113a7eULL);
  EXPECT_EQ(Rng(42).uniform(), 0.08386297105988216);
  EXPECT_EQ(derive_seed(5, 7), 0x82d78c130699ef2bULL);
}

TEST(Rng, RangesAndIndex) {
  Rng rng(1);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    const double l = rng.log_uniform(0.1, 10.0);
    EXPECT_GE(l, 0.1 * (1 - 1e-15));
    EXPECT_LE(l, 10.0 * (1 + 1e-15));
    EXPECT_LT(rng.index(7), 7u);
  }
}

TEST(Rng, NormalMoments) {
  Rng rng(3);
  double sum = 0.0, sum2 = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal();
    sum += z;
    sum2 += z * z;
  }
  EXPECT_NEAR(sum / n, 0.0, 0.01);
  EXPECT_NEAR(sum2 / n, 1.0, 0.01);
}

TEST(RandomOrthogonal, Orthogonal) {
  Rng rng(9);
  for (std::size_t n : {2u, 3u, 8u, 16u}) {
    const Matrix q = random_orthogonal(n, rng);
    EXPECT_LE((q.transpose() * q - Matrix::identity(n)).frobenius_norm(), 1e-13 * n);
  }
}

TEST(RandSpd, UnitRangeGivesIdentity) {
  EXPECT_LE(max_abs_diff(rand_spd(2, {1.0, 1.0}, 5), SymMatrix::identity(2)), 1e-15);
}

TEST(RandSpd, SpectrumInsideRange) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const SymMatrix a = rand_spd(2 + seed % 10, {0.1, 10.0}, seed);
    EXPECT_GE(lambda_min(a), 0.1 * (1 - 1e-10));
    EXPECT_LE(lambda_max(a), 10.0 * (1 + 1e-10));
  }
}

TEST(RandSpd, DeterministicAndValidated) {
  EXPECT_EQ(rand_spd(5, {0.1, 10.0}, 77), rand_spd(5, {0.1, 10.0}, 77));
  EXPECT_NE(rand_spd(5, {0.1, 10.0}, 77), rand_spd(5, {0.1, 10.0}, 78));
  EXPECT_THROW(rand_spd(3, {0.0, 1.0}, 1), LabError);
  EXPECT_THROW(rand_spd(3, {2.0, 1.0}, 1), LabError);
}

TEST(SandwichPairGen, UnitTargetsGiveEqualOperands) {
  const auto p = rand_sandwich_pair(4, 1.0, 1.0, 3);
  EXPECT_LE(max_abs_diff(p.a, p.b), 1e-12 * lambda_max(p.a));
  EXPECT_NEAR(p.bounds.s, 1.0, 1e-12);
  EXPECT_NEAR(p.bounds.t, 1.0, 1e-12);
}

TEST(SandwichPairGen, RealizedBoundsAreTight) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const std::size_t n = 2 + rng.index(7);
    const double s = rng.log_uniform(0.1, 1.0), t = rng.log_uniform(1.0, 10.0);
    const auto p = rand_sandwich_pair(n, s, t, seed);
    EXPECT_GE(p.bounds.s, s * (1 - 1e-9));
    EXPECT_LE(p.bounds.t, t * (1 + 1e-9));
    EXPECT_NEAR(p.bounds.w, p.bounds.t / p.bounds.s, 1e-12 * p.bounds.w);
    EXPECT_TRUE(loewner_leq(p.bounds.s * p.a, p.b, 1e-10).holds);
    EXPECT_TRUE(loewner_leq(p.b, p.bounds.t * p.a, 1e-10).holds);
    // Growing s by 1e-6 relative must break the lower bound.
    const double bumped = p.bounds.s * (1 + 1e-6);
    EXPECT_LT(lambda_min(p.b - bumped * p.a), 0.0);
    EXPECT_GE(lambda_min(p.b - p.bounds.s * (1 - 1e-6) * p.a), 0.0);
  }
  EXPECT_THROW(rand_sandwich_pair(3, 2.0, 1.0, 1), LabError);
}

TEST(SandwichStraddle, StraddlesOne) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto p = rand_sandwich_straddle(3, seed);
    EXPECT_LE(p.bounds.s, 1.0);
    EXPECT_GE(p.bounds.t, 1.0);
    EXPECT_GT(p.bounds.w, 1.0);
  }
  EXPECT_EQ(rand_sandwich_straddle(4, 8).b, rand_sandwich_straddle(4, 8).b);
}

TEST(CommutingPairGen, CommutesAndMatchesScalarOracle) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto c = rand_commuting_pair(2 + seed % 7, seed, {0.1, 10.0}, Spectrum{1.1, 5.0});
    EXPECT_LE(commutator_norm(c.a, c.b), 1e-11 * c.a.frobenius_norm() * c.b.frobenius_norm());
    Vector expect(c.a_eigs.size());
    for (std::size_t k = 0; k < expect.size(); ++k) {
      EXPECT_GE(c.a_eigs[k], 0.1);
      EXPECT_LE(c.a_eigs[k], 10.0);
      EXPECT_GE(c.b_eigs[k], 1.1);
      EXPECT_LE(c.b_eigs[k], 5.0);
      expect[k] = std::pow(c.a_eigs[k], 0.7) * std::pow(c.b_eigs[k], 0.3);
    }
    EXPECT_LE(max_abs_diff(gmean(c.a, c.b, 0.3), with_spectrum(c.basis, expect)), 1e-10);
  }
}

TEST(GImageSandwich, IdentityReducesToPlainPair) {
  const auto g = rand_gimage_sandwich(3, catalog_entry("identity"), 0.5, 2.0, 4);
  const auto p = rand_sandwich_pair(3, 0.5, 2.0, 4);
  EXPECT_LE(max_abs_diff(g.a, p.a), 1e-12 * lambda_max(p.a));
  EXPECT_LE(max_abs_diff(g.b, p.b), 1e-12 * lambda_max(p.b));
}

TEST(GImageSandwich, BoundsHoldOnImages) {
  for (const char* name : {"square", "pow_1.5", "t_plus_t_cubed", "sqrt"}) {
    const auto& g = catalog_entry(name);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto pair = rand_gimage_sandwich(4, g, 0.3, 3.0, seed);
      EXPECT_TRUE(is_strictly_positive(pair.a));
      EXPECT_TRUE(is_strictly_positive(pair.b));
      const SymMatrix ga = apply_fn(pair.a, g), gb = apply_fn(pair.b, g);
      EXPECT_TRUE(loewner_leq(pair.image_bounds.s * ga, gb, 1e-10).holds) << name;
      EXPECT_TRUE(loewner_leq(gb, pair.image_bounds.t * ga, 1e-10).holds) << name;
    }
  }
  EXPECT_THROW(rand_gimage_sandwich(3, catalog_entry("inv"), 0.5, 2.0, 1), LabError);
}

TEST(PowerPair, BoundsMeasuredOnPowers) {
  const auto sp = rand_sandwich_pair(3, 0.4, 2.5, 6);
  const auto pp = power_pair_from(sp.a, sp.b, MeanWeight::conjugate(3.0));
  EXPECT_NEAR(pp.bounds.s, sp.bounds.s, 1e-10);
  EXPECT_NEAR(pp.bounds.t, sp.bounds.t, 1e-10);
  EXPECT_LE(max_abs_diff(mpow(pp.a, 3.0), sp.a), 1e-12 * lambda_max(sp.a));
}

TEST(Probes, UnitNormAndDeterministic) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) EXPECT_NEAR(norm2(rand_probe(7, seed)), 1.0, 1e-14);
  EXPECT_EQ(rand_probes(4, 5, 2), rand_probes(4, 5, 2));
  EXPECT_EQ(quad_form(SymMatrix::identity(2), Vector{1.0, 0.0}), 1.0);
}

TEST(ScalarInstanceGen, ForcedUnitRatio) {
  ScalarInstanceOptions opts;
  opts.s_target = 1.0;
  opts.t_target = 1.0;
  const auto inst = rand_scalar_instance(1, 3.0, 5, opts);
  ASSERT_EQ(inst.a.size(), 1u);
  EXPECT_NEAR(inst.b[0], std::pow(inst.a[0], inst.p / inst.q), 1e-14);
  EXPECT_NEAR(inst.s, 1.0, 1e-14);
  EXPECT_NEAR(inst.t, 1.0, 1e-14);
}

TEST(ScalarInstanceGen, RatiosWithinRealizedBounds) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const double p = 1.25 + (seed % 4);
    const auto inst = rand_scalar_instance(2 + seed % 6, p, seed);
    EXPECT_NEAR(1.0 / inst.p + 1.0 / inst.q, 1.0, 1e-12);
    for (std::size_t i = 0; i < inst.a.size(); ++i) {
      EXPECT_GT(inst.a[i], 0.0);
      EXPECT_GT(inst.b[i], 0.0);
      const double r = std::pow(inst.b[i], inst.q) / std::pow(inst.a[i], inst.p);
      EXPECT_GE(r, inst.s * (1 - 1e-12));
      EXPECT_LE(r, inst.t * (1 + 1e-12));
    }
  }
  EXPECT_THROW(rand_scalar_instance(3, 1.0, 1), LabError);
}

TEST(ScalarInstanceGen, CounterpartHeadHypotheses) {
  ScalarInstanceOptions opts;
  opts.counterpart_head = true;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto inst = rand_scalar_instance(2 + seed % 6, 2.0 + (seed % 3), seed, opts);
    ASSERT_TRUE(inst.has_head);
    double sp = 0.0, sq = 0.0, cross = 0.0;
    for (std::size_t i = 1; i < inst.a.size(); ++i) {
      sp += std::pow(inst.a[i], inst.p);
      sq += std::pow(inst.b[i], inst.q);
      cross += inst.a[i] * inst.b[i];
    }
    EXPECT_GE(sp, std::pow(inst.a[0], inst.p));
    EXPECT_GE(sq, std::pow(inst.b[0], inst.q));
    EXPECT_GE(cross * (1 + 1e-14), inst.a[0] * inst.b[0]);
  }
}
