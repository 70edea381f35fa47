#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles/naive_dft.hpp"
#include "whitham/spectral.hpp"

using namespace whitham;

namespace {

Field random_field(const Grid& g, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  Field f(g);
  for (std::size_t j = 0; j < f.size(); ++j) f[j] = d(rng);
  return f;
}

}  // namespace

TEST(Spectrum, MatchesNaiveDft) {
  for (int n : {8, 30, 64, 96}) {
    const Grid g(n);
    const Field f = random_field(g, 11 + n);
    const auto ref = oracle::naive_dft({f.samples().begin(), f.samples().end()});
    const Spectrum s = forward_transform(f);
    for (int m = 0; m <= n / 2; ++m) {
      EXPECT_NEAR(std::abs(s(m) - ref[m]), 0.0, 1e-14) << "n = " << n << ", m = " << m;
      if (m > 0 && m < n / 2) {
        EXPECT_NEAR(std::abs(s(-m) - std::conj(ref[m])), 0.0, 1e-14);
      }
    }
  }
}

TEST(Spectrum, RoundTrip) {
  const Grid g(128);
  const Field f = random_field(g, 3);
  EXPECT_LT(max_abs_difference(inverse_transform(forward_transform(f)), f), 1e-14);
}

TEST(Spectrum, CosineNormalisation) {
  const Grid g(32);
  const Spectrum s = forward_transform(Field::from_function(g, [](double x) { return 3.0 + std::cos(2 * x); }));
  EXPECT_NEAR(s(0).real(), 3.0, 1e-15);
  EXPECT_NEAR(s(2).real(), 0.5, 1e-15);
  EXPECT_NEAR(s(-2).real(), 0.5, 1e-15);
}

TEST(Derivative, ExactOnTrigonometricPolynomials) {
  const Grid g(64, 3.0);
  const double k = kTwoPi / 3.0;
  const Field f = Field::from_function(g, [k](double x) { return std::sin(5 * k * x); });
  const Field d1 = Field::from_function(g, [k](double x) { return 5 * k * std::cos(5 * k * x); });
  const Field d2 = Field::from_function(g, [k](double x) { return -25 * k * k * std::sin(5 * k * x); });
  EXPECT_LT(max_abs_difference(derivative(f, 1), d1), 1e-12);
  EXPECT_LT(max_abs_difference(derivative(f, 2), d2), 1e-11);
  EXPECT_EQ(max_abs_difference(derivative(f, 0), f), 0.0);
}

TEST(Derivative, OddOrderDropsNyquist) {
  const Grid g(16);
  const Field alt = Field::from_function(g, [](double x) { return std::cos(8 * x); });
  EXPECT_LT(derivative(alt, 1).max_abs(), 1e-13);
}

TEST(Dealias, KeepsLowModesOnly) {
  const Grid g(48);
  const Field low = Field::from_function(g, [](double x) { return std::cos(16 * x); });
  const Field high = Field::from_function(g, [](double x) { return std::sin(17 * x); });
  EXPECT_LT(max_abs_difference(dealias(low + high), low), 1e-13);
}

TEST(SpectralMultiplier, CompositionMultipliesSymbols) {
  const Grid g(32);
  const auto d1 = SpectralMultiplier::derivative(g, 1);
  const auto d2 = SpectralMultiplier::derivative(g, 2);
  const Field f = random_field(g, 5);
  EXPECT_LT(max_abs_difference((d1 * d1).apply(dealias(f)), d2.apply(dealias(f))), 1e-12);
}

TEST(WeightedPower, ParsevalForUnitWeight) {
  const Grid g(64);
  const Field f = random_field(g, 9);
  double sq = 0.0;
  for (double v : f.samples()) sq += v * v;
  EXPECT_NEAR(weighted_power(forward_transform(f), [](double) { return 1.0; }), sq / 64, 1e-13);
}
