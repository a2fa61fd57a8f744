#include <gtest/gtest.h>

#include <cmath>

#include "loewner_lab/constants.hpp"
#include "loewner_lab/errors.hpp"

using namespace loewner;

TEST(Kantorovich, Examples) {
  EXPECT_EQ(kantorovich(1.0), 1.0);
  EXPECT_EQ(kantorovich(4.0), 1.5625);
  EXPECT_EQ(kantorovich(0.25), kantorovich(4.0));
  EXPECT_THROW(kantorovich(0.0), LabError);
  EXPECT_THROW(kantorovich(-1.0), LabError);
}

TEST(Kantorovich, AtLeastOneAndSymmetric) {
  for (double e = -3.0; e <= 3.0; e += 0.01) {
    const double h = std::pow(10.0, e);
    EXPECT_GE(kantorovich(h), 1.0);
    EXPECT_NEAR(kantorovich(h), kantorovich(1.0 / h), 1e-14 * kantorovich(h));
  }
}

TEST(Kantorovich, MonotoneOnEachSideOfOne) {
  double prev = kantorovich(1e-3);
  for (double e = -3.0 + 0.01; e < 0.0; e += 0.01) {
    const double v = kantorovich(std::pow(10.0, e));
    EXPECT_LT(v, prev);
    prev = v;
  }
  prev = kantorovich(1.0);
  for (double e = 0.01; e <= 3.0; e += 0.01) {
    const double v = kantorovich(std::pow(10.0, e));
    EXPECT_GT(v, prev);
    prev = v;
  }
}

TEST(KantorovichGen, RemovableSingularities) {
  for (double a : {0.0, 0.1, 0.5, 0.9, 1.0}) EXPECT_EQ(kantorovich_gen(1.0, a), 1.0);
  for (double w : {0.5, 2.0, 100.0}) {
    EXPECT_EQ(kantorovich_gen(w, 0.0), 1.0);
    EXPECT_EQ(kantorovich_gen(w, 1.0), 1.0);
  }
  EXPECT_NEAR(kantorovich_gen(1.0 + 1e-6, 0.5), 1.0, 1e-5);
  EXPECT_NEAR(kantorovich_gen(1.0 - 1e-6, 0.5), 1.0, 1e-5);
  EXPECT_NEAR(kantorovich_gen(10.0, 1e-6), 1.0, 1e-5);
  EXPECT_NEAR(kantorovich_gen(10.0, 1.0 - 1e-6), 1.0, 1e-5);
}

TEST(KantorovichGen, HalfClosedForm) {
  EXPECT_NEAR(kantorovich_gen(4.0, 0.5), 2.0 * std::pow(4.0, 0.25) / 3.0, 1e-15);
  EXPECT_NEAR(kantorovich_gen(4.0, 0.5), 0.942809, 1e-6);
}

// 40-digit reference values.
TEST(KantorovichGen, ReferenceValues) {
  EXPECT_NEAR(kantorovich_gen(2.0, 0.3), 0.98753241064020973, 1e-14);
  EXPECT_NEAR(kantorovich_gen(10.0, 0.5), 0.85447418708101511, 1e-14);
  EXPECT_NEAR(kantorovich_gen(100.0, 0.25), 0.66350644478963418, 1e-14);
  EXPECT_NEAR(kantorovich_gen(4.0, 0.75), 0.95685992113457951, 1e-14);
  EXPECT_NEAR(kantorovich_gen(1.0001, 0.5), 0.99999999968753125, 1e-14);
  EXPECT_NEAR(kantorovich_gen(1e6, 0.5), 0.063182370832535052, 1e-14);
}

TEST(KantorovichGen, InUnitInterval) {
  for (double e = -4.0; e <= 4.0; e += 0.05)
    for (double a = 0.0; a <= 1.0; a += 0.05) {
      const double k = kantorovich_gen(std::pow(10.0, e), a);
      EXPECT_GT(k, 0.0);
      EXPECT_LE(k, 1.0);
    }
}

TEST(KantorovichGen, Errors) {
  EXPECT_THROW(kantorovich_gen(0.0, 0.5), LabError);
  EXPECT_THROW(kantorovich_gen(2.0, -0.1), LabError);
  EXPECT_THROW(kantorovich_gen(2.0, 1.1), LabError);
}

TEST(Specht, ContinuityPoint) {
  EXPECT_EQ(specht(1.0), 1.0);
  EXPECT_NEAR(specht(1.0000001), 1.00000000000000125, 1e-16);
  EXPECT_NEAR(specht(0.9999995), 1.00000000000003125, 1e-16);
}

TEST(Specht, ReferenceValues) {
  EXPECT_NEAR(specht(0.01), 8.2850865291053498, 1e-13);
  EXPECT_NEAR(specht(0.5), 1.061475690846086, 1e-14);
  EXPECT_NEAR(specht(2.0), 1.061475690846086, 1e-14);
  EXPECT_NEAR(specht(5.0), 1.3672054566182827, 1e-14);
  EXPECT_THROW(specht(0.0), LabError);
}

TEST(Specht, AtLeastOne) {
  for (double e = -3.0; e <= 3.0; e += 0.013) EXPECT_GE(specht(std::pow(10.0, e)), 1.0);
}

TEST(Specht, NoGlobalOrderAgainstKantorovichPower) {
  const double low = std::pow(kantorovich(0.01), 0.6) - specht(0.01);
  const double high = std::pow(kantorovich(5.0), 0.6) - specht(5.0);
  EXPECT_NEAR(low, -1.30357, 1e-4);
  EXPECT_NEAR(high, 0.0556589, 1e-6);
  EXPECT_LT(low, 0.0);
  EXPECT_GT(high, 0.0);
}

TEST(ReverseConstant, Examples) {
  EXPECT_EQ(reverse_constant(1.0, 1.0, 0.7), 1.0);
  EXPECT_NEAR(reverse_constant(0.5, 2.0, 0.5), std::sqrt(9.0 / 8.0), 1e-15);
  EXPECT_NEAR(reverse_constant(0.25, 2.0, 0.6), std::pow(25.0 / 16.0, 0.6), 1e-15);
  EXPECT_THROW(reverse_constant(2.0, 1.0, 0.5), LabError);
  EXPECT_THROW(reverse_constant(0.0, 1.0, 0.5), LabError);
  EXPECT_THROW(reverse_constant(0.5, 1.0, 1.5), LabError);
}

TEST(SandwichBounds, Make) {
  const auto b = SandwichBounds::make(0.5, 2.0);
  EXPECT_EQ(b.w, 4.0);
  EXPECT_THROW(SandwichBounds::make(2.0, 0.5), LabError);
  EXPECT_THROW(SandwichBounds::make(0.0, 0.5), LabError);
}
