#include <gtest/gtest.h>

#include <cmath>
#include <cstring>

#include "whitham/harness/experiments.hpp"
#include "whitham/picard.hpp"
#include "whitham/symmetrize.hpp"

using namespace whitham;
using harness::reference_state;

namespace {
SolveConfig config(double T, double dt) {
  SolveConfig c;
  c.T = T;
  c.dt = dt;
  c.tol = 1e-11;
  c.max_iter = 60;
  return c;
}

bool bit_equal(const Field& a, const Field& b) {
  return a.size() == b.size() && std::memcmp(a.samples().data(), b.samples().data(), a.size() * sizeof(double)) == 0;
}
}  // namespace

TEST(Picard, ContractsAndMatchesDirectSolve) {
  const Grid g(64);
  const State U0 = reference_state(g, 0.1);
  const SolveConfig c = config(2.0, 0.01);
  const PicardResult r = picard_iterate(U0, c);
  EXPECT_TRUE(r.diagnostics.converged);
  EXPECT_LE(r.diagnostics.max_ratio_from(2), 0.5);
  EXPECT_LT(r.diagnostics.differences.back(), c.tol);
  EXPECT_FALSE(r.diagnostics.first_assumption_violation().has_value());
  const State P = to_physical(U0);
  const Trajectory d = solve_direct(P.first, P.second, c);
  EXPECT_LT(l2_norm(r.trajectory.final_state() - to_symmetric(d.final_state())), 1e-8);
}

TEST(Picard, FirstRatioUndefined) {
  const Grid g(32);
  const PicardResult r = picard_iterate(reference_state(g, 0.1), config(0.5, 0.01));
  ASSERT_GE(r.diagnostics.iterations(), 2);
  EXPECT_TRUE(std::isnan(r.diagnostics.ratios[0]));
  EXPECT_EQ(r.diagnostics.energy_maxima.size(), r.diagnostics.differences.size());
}

TEST(Picard, BitDeterministic) {
  const Grid g(32);
  const State U0 = reference_state(g, 0.1);
  const PicardResult a = picard_iterate(U0, config(1.0, 0.02));
  const PicardResult b = picard_iterate(U0, config(1.0, 0.02));
  ASSERT_EQ(a.diagnostics.differences, b.diagnostics.differences);
  for (std::size_t i = 0; i < a.trajectory.states.size(); ++i) {
    EXPECT_TRUE(bit_equal(a.trajectory.states[i].first, b.trajectory.states[i].first));
    EXPECT_TRUE(bit_equal(a.trajectory.states[i].second, b.trajectory.states[i].second));
  }
}

TEST(Picard, IdenticalProvidersGiveIdenticalSolutions) {
  const Grid g(32);
  const State U0 = reference_state(g, 0.1);
  auto tr = std::make_shared<const Trajectory>(picard_iterate(U0, config(0.5, 0.01)).trajectory);
  const Trajectory a = solve_linearized(U0, trajectory_provider(tr), config(0.5, 0.01));
  const Trajectory b = solve_linearized(U0, trajectory_provider(tr), config(0.5, 0.01));
  EXPECT_EQ(sup_l2_difference(a, b), 0.0);
}

TEST(Picard, IterationCapRaisesWithDiagnostics) {
  const Grid g(32);
  SolveConfig c = config(1.0, 0.02);
  c.max_iter = 2;
  try {
    picard_iterate(reference_state(g, 0.1), c);
    FAIL();
  } catch (const NonContractionError& e) {
    EXPECT_EQ(e.diagnostics().iterations(), 2);
    EXPECT_FALSE(e.diagnostics().converged);
  }
}

TEST(Picard, IgnoresEps) {
  const Grid g(32);
  SolveConfig c = config(0.5, 0.01);
  const PicardResult a = picard_iterate(reference_state(g, 0.1), c);
  c.eps = 0.5;
  const PicardResult b = picard_iterate(reference_state(g, 0.1), c);
  EXPECT_EQ(sup_l2_difference(a.trajectory, b.trajectory), 0.0);
}
