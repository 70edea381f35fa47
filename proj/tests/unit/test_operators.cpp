#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles/kernel.hpp"
#include "whitham/operators.hpp"
#include "whitham/spectral.hpp"

using namespace whitham;

TEST(WhithamSymbol, ValuesAndLimits) {
  EXPECT_EQ(whitham_symbol(0.0), 1.0);
  EXPECT_NEAR(whitham_symbol(1e-9), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(whitham_symbol(2.0), std::tanh(2.0) / 2.0);
  EXPECT_DOUBLE_EQ(whitham_symbol(-2.0), whitham_symbol(2.0));
  EXPECT_NEAR(whitham_symbol(1e6), 1e-6, 1e-18);
  EXPECT_NEAR(whitham_sqrt_symbol(3.0) * whitham_sqrt_symbol(3.0), whitham_symbol(3.0), 1e-16);
}

TEST(ApplyK, ScalesEveryRetainedMode) {
  const Grid g(256);
  for (int m = 0; m <= 256 / 3; ++m) {
    const Field c = Field::from_function(g, [m](double x) { return std::cos(m * x); });
    const Field s = Field::from_function(g, [m](double x) { return std::sin(m * x); });
    const double sym = whitham_symbol(m);
    EXPECT_LT(max_abs_difference(apply_K(c), sym * c), 1e-12) << m;
    EXPECT_LT(max_abs_difference(apply_K(s), sym * s), 1e-12) << m;
  }
}

TEST(ApplyK, ScaledPeriodUsesScaledWavenumber) {
  const Grid g(64, 10.0);
  const double k = kTwoPi / 10.0;
  const Field f = Field::from_function(g, [k](double x) { return std::cos(3 * k * x); });
  EXPECT_LT(max_abs_difference(apply_K(f), whitham_symbol(3 * k) * f), 1e-13);
}

TEST(ApplyK, SquareRootComposes) {
  const Grid g(64);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> d(-1, 1);
  Field f(g);
  for (std::size_t j = 0; j < f.size(); ++j) f[j] = d(rng);
  EXPECT_LT(max_abs_difference(apply_K_sqrt(apply_K_sqrt(f)), apply_K(f)), 1e-14);
}

TEST(ApplyK, SelfAdjointAndContractive) {
  const Grid g(64);
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> d(-1, 1);
  Field f(g), h(g);
  for (std::size_t j = 0; j < f.size(); ++j) {
    f[j] = d(rng);
    h[j] = d(rng);
  }
  EXPECT_NEAR((apply_K(f) * h).integral(), (f * apply_K(h)).integral(), 1e-13);
  EXPECT_LE((apply_K(f) * apply_K(f)).integral(), (f * f).integral());
}

TEST(PeriodicKernel, MatchesDirectCosineSum) {
  for (int M : {1, 16, 2048}) {
    for (double x : {0.0, 0.3, 1.7, 3.14159, 5.5}) {
      EXPECT_NEAR(periodic_kernel_Kp(x, M), oracle::kernel_Kp(x, M), 1e-10 * M) << M << " " << x;
    }
  }
}

TEST(PeriodicKernel, ConvolutionReproducesMultiplier) {
  // Band-limited f: the trapezoid rule for (1/2pi) \int K_p(x - y) f(y) dy is exact.
  const Grid g(32);
  const Field f = Field::from_function(g, [](double x) { return std::cos(x) + 0.5 * std::sin(3 * x); });
  const Field Kf = apply_K(f);
  for (int i = 0; i < 32; i += 5) {
    double s = 0.0;
    for (int j = 0; j < 32; ++j) s += oracle::kernel_Kp(g.point(i) - g.point(j), 15) * f[j];
    EXPECT_NEAR(s / 32.0, Kf[i], 1e-13);
  }
}
