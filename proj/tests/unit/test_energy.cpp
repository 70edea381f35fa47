#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles/reference_energy.hpp"
#include "whitham/energy.hpp"
#include "whitham/harness/experiments.hpp"
#include "whitham/harness/initial_data.hpp"
#include "whitham/symmetrize.hpp"

using namespace whitham;

TEST(Energy, TrigonometricPolynomialIsExact) {
  const Grid g(32);
  const Field z = Field::from_function(g, [](double x) { return std::cos(3 * x); });
  const Field u = Field::from_function(g, [](double) { return 2.0; });
  const EnergyReport e = total_energy(State(z, u, Representation::symmetric, 1.0), 3);
  const double pi = std::numbers::pi;
  ASSERT_EQ(e.per_k.size(), 4u);
  EXPECT_NEAR(e.per_k[0], pi + 8 * pi, 1e-12);
  EXPECT_NEAR(e.per_k[1], 9 * pi, 1e-12);
  EXPECT_NEAR(e.per_k[2], 81 * pi, 1e-11);
  EXPECT_NEAR(e.per_k[3], 729 * pi, 1e-10);
  EXPECT_NEAR(e.total, pi * (9 + 9 + 81 + 729), 1e-10);
}

TEST(Energy, ReferenceDataMatchesQuadratureOracle) {
  const Grid g(64);
  const double E = total_energy(harness::reference_state(g, 0.1), 2).total;
  EXPECT_NEAR(E, oracle::reference_energy_N2(0.1), 1e-13);
  EXPECT_NEAR(E, 0.18878688369959445, 1e-13);
}

TEST(Energy, RejectsPhysicalStatesAndSmallN) {
  const Grid g(16);
  const State p(Field::constant(g, 1.0), Field(g), Representation::physical, 1.0);
  EXPECT_ANY_THROW(total_energy(p, 2));
  EXPECT_NO_THROW(energy_of(p, 2));
  EXPECT_ANY_THROW(total_energy(to_symmetric(p), 1));
}

TEST(Energy, CsvRowHasFullPrecision) {
  EnergyReport r;
  r.N = 2;
  r.time = 0.1;
  r.per_k = {1.0 / 3.0, 2.0, 3.0};
  r.total = 1.0 / 3.0 + 5.0;
  EXPECT_EQ(EnergyReport::csv_header(2), "time,E0,E1,E2,total");
  EXPECT_EQ(r.csv_row(), "0.10000000000000001,0.33333333333333331,2,3,5.333333333333333");
}

TEST(Lifespan, ShapeFormula) {
  const double E0 = 0.3;
  const double shape = std::numbers::ln2 / (1 + std::sqrt(0.6) + 0.6 + 0.6 * std::sqrt(0.6));
  EXPECT_NEAR(lifespan_shape(E0, 3), shape, 1e-15);
  EXPECT_NEAR(lifespan_estimate(E0, 3, 10.0, 2.0), 2.0 * shape, 1e-15);
  EXPECT_NEAR(lifespan_estimate(E0, 3, 0.01, 2.0), 0.02, 1e-15);
  EXPECT_EQ(lifespan_shape(0.0, 2), std::numbers::ln2);
}

TEST(Lifespan, DecreasesWithEnergy) {
  double prev = lifespan_shape(0.0, 2);
  for (double E : {0.01, 0.1, 1.0, 10.0}) {
    const double s = lifespan_shape(E, 2);
    EXPECT_LT(s, prev);
    prev = s;
  }
}

TEST(Inequalities, EndpointsAreOne) {
  const Grid g(64);
  harness::Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    const Field f = harness::random_bandlimited(g, 12, rng);
    for (int k = 1; k <= 4; ++k) {
      EXPECT_NEAR(check_interpolation(f, 0, k).ratio, 1.0, 1e-12);
      EXPECT_NEAR(check_interpolation(f, k, k).ratio, 1.0, 1e-12);
    }
  }
}

TEST(Inequalities, InteriorInterpolationAtMostOne) {
  const Grid g(128);
  harness::Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const Field f = harness::random_bandlimited(g, 20, rng);
    for (int k = 2; k <= 4; ++k) {
      for (int l = 1; l < k; ++l) EXPECT_LE(check_interpolation(f, l, k).ratio, 1.0 + 1e-12);
    }
    EXPECT_LE(check_sobolev_interpolation(f, 1.0, 2.0).ratio, 1.0 + 1e-12);
  }
}

TEST(Inequalities, TameProductBounded) {
  const Grid g(128);
  harness::Rng rng(6);
  double worst = 0.0;
  for (int t = 0; t < 30; ++t) {
    const Field f = harness::random_bandlimited(g, 12, rng);
    const Field h = harness::random_bandlimited(g, 12, rng);
    for (int k = 0; k <= 4; ++k) worst = std::max(worst, check_tame_product(f, h, k).ratio);
  }
  EXPECT_GT(worst, 0.0);
  EXPECT_LT(worst, 10.0);
}

TEST(Inequalities, ZeroFieldIsUndefined) {
  const Field z(Grid(16));
  EXPECT_FALSE(check_interpolation(z, 1, 2).defined);
  EXPECT_FALSE(check_tame_product(z, z, 1).defined);
}

TEST(SobolevNorm, MatchesDerivativeSum) {
  const Grid g(64);
  const Field f = Field::from_function(g, [](double x) { return std::sin(2 * x); });
  // (1 + 4)^1 * pi for s = 1.
  EXPECT_NEAR(sobolev_norm(f, 1.0), std::sqrt(5 * std::numbers::pi), 1e-13);
  EXPECT_NEAR(derivative_l2_norm(f, 2), std::sqrt(16 * std::numbers::pi), 1e-12);
}
