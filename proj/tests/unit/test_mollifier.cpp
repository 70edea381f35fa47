#include <gtest/gtest.h>

#include <cmath>

#include "oracles/mollifier_quadrature.hpp"
#include "whitham/mollifier.hpp"
#include "whitham/spectral.hpp"

using namespace whitham;

TEST(Mollifier, NormalisationMatchesQuadrature) {
  // 1 / \int exp(-1/(1-x^2)) dx, the oracle's value frozen.
  const double mass = 0.44399381616807942;
  EXPECT_NEAR(oracle::bump_mass(), mass, 1e-15);
  EXPECT_NEAR(Mollifier::standard().normalization(), 1.0 / mass, 1e-13);
  EXPECT_NEAR(Mollifier::standard().profile(0.0), std::exp(-1.0) / mass, 1e-14);
  EXPECT_EQ(Mollifier::standard().profile(1.0), 0.0);
  EXPECT_EQ(Mollifier::standard().profile(-1.5), 0.0);
}

TEST(Mollifier, TransformMatchesGaussKronrod) {
  const Mollifier& m = Mollifier::standard();
  EXPECT_NEAR(m.rho_hat(0.0), 1.0, 1e-14);
  for (double xi : {0.1, 1.0, 2.5, 5.0, 12.0, 20.0, 40.0, 100.0}) {
    EXPECT_NEAR(m.rho_hat(xi), oracle::rho_hat(xi), 1e-13) << xi;
    EXPECT_EQ(m.rho_hat(-xi), m.rho_hat(xi));
  }
  // Frozen oracle values.
  EXPECT_NEAR(m.rho_hat(1.0), 0.92311901081790526, 1e-14);
  EXPECT_NEAR(m.rho_hat(5.0), -0.00047804700585547295, 1e-14);
}

TEST(Mollifier, MultiplierTablesAreCachedAndApplied) {
  const Grid g(64);
  const auto a = Mollifier::standard().multiplier(g, 0.25);
  const auto b = Mollifier::standard().multiplier(g, 0.25);
  EXPECT_EQ(a.get(), b.get());
  const Field f = Field::from_function(g, [](double x) { return std::cos(7 * x); });
  EXPECT_LT(max_abs_difference(mollify(f, 0.25), Mollifier::standard().rho_hat(1.75) * f), 1e-14);
}

TEST(Mollifier, TransformDecaysFasterThanPolynomials) {
  // |rho_hat(xi)| (1 + xi^2)^4 rises to a single peak near xi = 250 and then falls:
  // the envelope near the end of the range is well below the peak.
  const Mollifier& m = Mollifier::standard();
  auto weighted = [&](double xi) { return std::abs(m.rho_hat(xi)) * std::pow(1.0 + xi * xi, 4); };
  double peak = 0.0;
  for (double xi = 0.0; xi <= 380.0; xi += 2.0) peak = std::max(peak, weighted(xi));
  double tail = 0.0;
  for (double xi = 380.0; xi <= 400.0; xi += 0.5) tail = std::max(tail, weighted(xi));
  EXPECT_TRUE(std::isfinite(peak));
  EXPECT_LT(tail, 0.5 * peak);
}

TEST(Mollifier, RejectsEpsOutsideUnitInterval) {
  const Field f(Grid(8));
  EXPECT_ANY_THROW(mollify(f, 0.0));
  EXPECT_ANY_THROW(mollify(f, 1.5));
}

TEST(Mollifier, SmallEpsApproachesIdentityQuadratically) {
  // rho is even, so 1 - rho_hat(eps xi) = O(eps^2 xi^2).
  const Mollifier& m = Mollifier::standard();
  const double r1 = 1.0 - m.rho_hat(0.01);
  const double r2 = 1.0 - m.rho_hat(0.005);
  EXPECT_NEAR(r1 / r2, 4.0, 1e-3);
}
