#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include "whitham/energy.hpp"
#include "whitham/harness/initial_data.hpp"
#include "whitham/harness/scenarios.hpp"

using namespace whitham;
using namespace whitham::harness;

namespace {

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("whitham_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

RunConfig small_model_compare() {
  RunConfig c;
  c.scenario = "model-compare";
  c.n = 32;
  c.solve.T = 0.4;
  c.params.set("dts", "0.1,0.05");
  c.params.set("ratio_factor", "100");
  return c;
}

}  // namespace

TEST(Rng, DeterministicAndInRange) {
  Rng a(5), b(5), c(6);
  for (int i = 0; i < 100; ++i) {
    const double x = a.uniform();
    EXPECT_EQ(x, b.uniform());
    EXPECT_GE(x, 0.0);
    EXPECT_LT(x, 1.0);
  }
  EXPECT_NE(Rng(5).uniform(), c.uniform());
  // mt19937_64 with seed 5489: first output 14514284786278117030, top 53 bits / 2^53.
  EXPECT_EQ(Rng(5489).uniform(), static_cast<double>(14514284786278117030ull >> 11) * 0x1.0p-53);
}

TEST(RandomBandlimited, BandLimitedNormalisedMeanZero) {
  const Grid g(64);
  Rng rng(1);
  const Field f = random_bandlimited(g, 5, rng);
  EXPECT_NEAR(f.max_abs(), 1.0, 1e-15);
  EXPECT_NEAR(f.mean(), 0.0, 1e-15);
  const Spectrum s = forward_transform(f);
  for (int m = 6; m <= 32; ++m) EXPECT_LT(std::abs(s(m)), 1e-15);
}

TEST(InitialData, Generators) {
  const Grid g(64);
  ParamMap p;
  p.set("generator", "cosine-bump");
  p.set("a", "1.0");
  p.set("b", "0.25");
  p.set("u_amplitude", "0.1");
  const InitialData d = make_initial_data(g, p, 1);
  EXPECT_NEAR(d.eta.max(), 1.25, 1e-15);
  EXPECT_NEAR(d.eta.min(), 0.75, 1e-15);
  EXPECT_NEAR(d.u.max(), 0.1, 1e-3);

  ParamMap q;
  q.set("generator", "gaussian-like");
  q.set("amplitude", "0.5");
  q.set("width", "0.5");
  const InitialData e = make_initial_data(g, q, 1);
  EXPECT_GT(e.eta.min(), 0.0);
  EXPECT_GT(e.eta.max(), e.eta.min());

  ParamMap r;
  r.set("generator", "random-bandlimited");
  r.set("cutoff", "4");
  const InitialData x1 = make_initial_data(g, r, 3);
  const InitialData x2 = make_initial_data(g, r, 3);
  const InitialData x3 = make_initial_data(g, r, 4);
  EXPECT_EQ(max_abs_difference(x1.eta, x2.eta), 0.0);
  EXPECT_GT(max_abs_difference(x1.eta, x3.eta), 0.0);

  ParamMap bad;
  bad.set("generator", "nope");
  EXPECT_THROW(make_initial_data(g, bad, 1), ConfigError);
  p.set("typo", "1");
  EXPECT_THROW(make_initial_data(g, p, 1), ConfigError);
}

TEST(Experiments, AmplitudeForEnergyInvertsEnergy) {
  const Grid g(64);
  const double a = amplitude_for_energy(g, 2, 0.2);
  EXPECT_NEAR(total_energy(reference_state(g, a), 2).total, 0.2, 1e-12);
}

TEST(Experiments, SeverityOrdering) {
  const BreakdownProxy mild{0.5, false, 4.0, 0.1, 0.4};
  const BreakdownProxy steep{0.1, false, 4.0, 0.3, 0.05};
  const BreakdownProxy late{0.05, true, 3.0, 0.2, 0.0};
  const BreakdownProxy early{0.02, true, 1.0, 0.1, 0.0};
  EXPECT_TRUE(less_severe(mild, steep));
  EXPECT_TRUE(less_severe(steep, late));
  EXPECT_TRUE(less_severe(late, early));
  EXPECT_FALSE(less_severe(early, late));
  EXPECT_FALSE(less_severe(mild, mild));
}

TEST(Scenarios, RegistryHasTheNineNames) {
  const std::vector<std::string> names = {"energy-bound", "picard-convergence", "epsilon-cauchy",
                                          "mollifier-lemma", "inequality-suite", "vanishing-elevation",
                                          "continuous-dependence", "dispersion-check", "model-compare"};
  ASSERT_EQ(scenarios().size(), names.size());
  for (const auto& n : names) EXPECT_EQ(find_scenario(n).name, n);
  EXPECT_THROW(find_scenario("no-such-thing"), ConfigError);
}

TEST(Scenarios, ValidationRejectsIgnoredKeys) {
  RunConfig c;
  c.scenario = "mollifier-lemma";
  c.solve.T = 1.0;
  EXPECT_THROW(validate_config(find_scenario(c.scenario), c), ConfigError);
  RunConfig d;
  d.params.set("bogus", "1");
  EXPECT_THROW(validate_config(find_scenario("energy-bound"), d), ConfigError);
  RunConfig e;
  e.solve.eps = 0.1;
  EXPECT_THROW(validate_config(find_scenario("energy-bound"), e), ConfigError);
  EXPECT_NO_THROW(validate_config(find_scenario("epsilon-cauchy"), e));
}

TEST(Scenarios, SweepKeys) {
  const ScenarioSpec& ec = find_scenario("epsilon-cauchy");
  EXPECT_EQ(sweep_key(ec, "eps"), "eps");
  EXPECT_EQ(sweep_key(ec, "amplitude"), "params.amplitude");
  EXPECT_EQ(sweep_key(ec, "params.amplitude"), "params.amplitude");
  EXPECT_EQ(sweep_key(ec, "n"), "n");
  EXPECT_THROW(sweep_key(ec, "width"), ConfigError);
  EXPECT_THROW(sweep_key(find_scenario("mollifier-lemma"), "T"), ConfigError);
}

TEST(Manifest, JsonRoundTrip) {
  RunManifest m;
  m.scenario = "energy-bound";
  m.seed = 3;
  m.solve = SolveConfig{};
  m.n = 64;
  m.cfl = 0.4;
  m.version = "x";
  m.constants = {{"c", 16.0}};
  m.metrics = {{"a", 1.0 / 3.0}, {"inf", INFINITY}, {"nan", NAN}};
  m.checks = {Check{"name", "req", 0.5, true}};
  m.headline = "a";
  m.outputs = {"config.ini"};
  m.exit_code = 5;
  m.config_ini = "[scenario]\nname = energy-bound\n";
  const RunManifest back = manifest_from_json(m.to_json());
  EXPECT_EQ(back.to_json(), m.to_json());
  EXPECT_EQ(back.headline_value(), 1.0 / 3.0);
  EXPECT_TRUE(std::isinf(back.metrics.at("inf")));
  EXPECT_TRUE(std::isnan(back.metrics.at("nan")));
}

TEST(Manifest, WriterAppendsOneLinePerManifestAcrossThreads) {
  const auto dir = scratch("writer");
  ManifestWriter w(dir);
  std::vector<std::jthread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&w, t] {
      for (int i = 0; i < 25; ++i) {
        RunManifest m;
        m.scenario = "s" + std::to_string(t);
        w.append(m);
      }
    });
  }
  threads.clear();
  std::ifstream in(w.path());
  int lines = 0;
  for (std::string line; std::getline(in, line);) {
    EXPECT_NO_THROW(manifest_from_json(line));
    ++lines;
  }
  EXPECT_EQ(lines, 100);
}

TEST(RunScenario, WritesOutputsAndReproducesBitForBit) {
  const auto root = scratch("run");
  ManifestWriter w(root);
  const RunManifest a = run_scenario(small_model_compare(), root / "a", &w, nullptr);
  EXPECT_EQ(a.exit_code, kExitPass) << a.error;
  for (const auto& f : a.outputs) EXPECT_TRUE(std::filesystem::exists(root / "a" / f)) << f;
  // Re-run from the recorded config.ini.
  const RunConfig again = load_config(root / "a" / "config.ini");
  const RunManifest b = run_scenario(again, root / "b", &w, nullptr);
  ASSERT_EQ(a.outputs, b.outputs);
  for (const auto& f : a.outputs) {
    if (f == "manifest.json") continue;
    EXPECT_EQ(slurp(root / "a" / f), slurp(root / "b" / f)) << f;
  }
  std::ifstream in(w.path());
  int lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  EXPECT_EQ(lines, 2);
}

TEST(RunScenario, ExitCodes) {
  const auto root = scratch("codes");
  RunConfig unknown;
  unknown.scenario = "nope";
  EXPECT_EQ(run_scenario(unknown, root / "u", nullptr, nullptr).exit_code, kExitConfigError);

  RunConfig inadmissible = small_model_compare();
  inadmissible.data.set("generator", "cosine-bump");
  inadmissible.data.set("a", "1");
  inadmissible.data.set("b", "2");
  EXPECT_EQ(run_scenario(inadmissible, root / "a", nullptr, nullptr).exit_code, kExitAdmissibilityError);

  RunConfig draining;
  draining.scenario = "energy-bound";
  draining.solve.T = 4.0;
  draining.solve.dt = 0.005;
  draining.data.set("generator", "cosine-bump");
  draining.data.set("a", "0.07");
  draining.data.set("b", "0.05");
  draining.data.set("u_amplitude", "-0.1");
  const RunManifest m = run_scenario(draining, root / "b", nullptr, nullptr);
  EXPECT_EQ(m.exit_code, kExitBlowUp) << m.error;

  RunConfig strict = small_model_compare();
  strict.params.set("ratio_factor", "1.0001");
  strict.params.set("ratio_target", "1");
  EXPECT_EQ(run_scenario(strict, root / "c", nullptr, nullptr).exit_code, kExitAssertionFailure);
}

TEST(Sweep, AggregateJoinsValuesToChildren) {
  const auto root = scratch("sweep");
  RunConfig base;
  base.scenario = "continuous-dependence";
  base.n = 32;
  base.solve.T = 0.5;
  const SweepResult r = sweep(base, "amplitude", {"0.05", "0.1"}, root, 2, nullptr);
  ASSERT_EQ(r.children.size(), 2u);
  EXPECT_EQ(r.exit_code, 0);
  const std::string agg = slurp(r.aggregate);
  EXPECT_EQ(agg.substr(0, agg.find('\n')), "value,child,exit_code,headline_value");
  EXPECT_NE(agg.find("\n0.050000000000000003,0,0,"), std::string::npos);
  EXPECT_NE(agg.find("\n0.10000000000000001,1,0,"), std::string::npos);
  EXPECT_NE(r.children[0].config_ini.find("amplitude = 0.05"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(r.directory / "fit.csv"));
}

TEST(Sweep, EmptyListIsAnError) {
  RunConfig base;
  base.scenario = "energy-bound";
  EXPECT_THROW(sweep(base, "amplitude", {}, scratch("empty"), 1, nullptr), ConfigError);
  EXPECT_THROW(sweep(base, "nonexistent", {"1"}, scratch("empty2"), 1, nullptr), ConfigError);
}

TEST(OutputRoot, FromEnvironment) {
  ::setenv(kOutputRootVariable, "/tmp/whitham_env_root", 1);
  EXPECT_EQ(output_root(), std::filesystem::path("/tmp/whitham_env_root"));
  ::unsetenv(kOutputRootVariable);
  EXPECT_EQ(output_root(), std::filesystem::current_path() / "runs");
}
