#include <gtest/gtest.h>

#include <cmath>

#include "whitham/errors.hpp"
#include "whitham/symmetrize.hpp"

using namespace whitham;

namespace {
const Grid kGrid(32);
Field eta_of(double a) {
  return Field::from_function(kGrid, [a](double x) { return 1.0 + a * std::cos(x); });
}
}  // namespace

TEST(Symmetrize, RoundTrip) {
  const Field eta = eta_of(0.4);
  const Field zeta = to_symmetric(eta, 1.3);
  EXPECT_LT(max_abs_difference(from_symmetric(zeta, 1.3), eta), 1e-14);
  for (std::size_t j = 0; j < eta.size(); ++j) {
    EXPECT_NEAR(zeta[j], 2.0 * (std::sqrt(eta[j]) - std::sqrt(1.3)), 1e-15);
  }
}

TEST(Symmetrize, StateRoundTripKeepsTags) {
  const State p(eta_of(0.2), Field::constant(kGrid, 0.1), Representation::physical, 1.0);
  const State s = to_symmetric(p);
  EXPECT_EQ(s.representation, Representation::symmetric);
  EXPECT_EQ(s.eta_bar, 1.0);
  const State back = to_physical(s);
  EXPECT_EQ(back.representation, Representation::physical);
  EXPECT_LT(max_abs_difference(back.first, p.first), 1e-14);
  EXPECT_EQ(max_abs_difference(back.second, p.second), 0.0);
  EXPECT_ANY_THROW(to_symmetric(s));
  EXPECT_ANY_THROW(to_physical(p));
}

TEST(Symmetrize, NonPositiveElevationIsADomainError) {
  Field eta = eta_of(0.2);
  eta[5] = 0.0;
  try {
    to_symmetric(eta, 1.0);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.index(), 5);
  }
  EXPECT_THROW(from_symmetric(Field::constant(kGrid, -2.0), 1.0), DomainError);
}

TEST(MatrixA, SymmetricBitForBit) {
  const State s = to_symmetric(State(eta_of(0.3), eta_of(0.1), Representation::physical, 1.0));
  const FieldMatrix A = matrix_A(s);
  EXPECT_EQ(max_abs_difference(A.a12, A.a21), 0.0);
  EXPECT_EQ(max_abs_difference(A.a11, s.second), 0.0);
  EXPECT_EQ(max_abs_difference(A.a22, s.second), 0.0);
  // w / 2 = sqrt(eta).
  EXPECT_LT(max_abs_difference(A.a12, eta_of(0.3).map([](double v) { return std::sqrt(v); })), 1e-15);
}

TEST(MatrixB, InverseOfSqrtEta) {
  const State s = to_symmetric(State(eta_of(0.3), Field(kGrid), Representation::physical, 1.0));
  const FieldMatrix B = matrix_B(s);
  EXPECT_LT(max_abs_difference(B.a12, eta_of(0.3).map([](double v) { return 1.0 / std::sqrt(v); })), 1e-14);
  EXPECT_EQ(B.a11.max_abs() + B.a21.max_abs() + B.a22.max_abs(), 0.0);
}

TEST(Admissibility, LargestMu) {
  // w = 2 sqrt(eta) ranges over [2 sqrt(0.5), 2 sqrt(1.5)].
  const Field zeta = to_symmetric(eta_of(0.5), 1.0);
  const Admissibility a = admissible_mu(zeta, 1.0);
  const double lo = 2.0 * std::sqrt(0.5);
  const double hi = 2.0 * std::sqrt(1.5);
  EXPECT_NEAR(a.mu, std::min({lo / 2.0, 1.0 / (2.0 * hi), 1.0}), 1e-14);
  EXPECT_TRUE(a.holds_for(zeta));
  EXPECT_DOUBLE_EQ(a.lambda_bar, 1.0);
  EXPECT_THROW(admissible_mu(Field::constant(kGrid, -2.0), 1.0), AdmissibilityError);
}

TEST(Admissibility, LargeBackgroundLimitsMu) {
  const Field zeta(kGrid);
  EXPECT_NEAR(admissible_mu(zeta, 100.0).mu, 1.0 / 40.0, 1e-15);
}
