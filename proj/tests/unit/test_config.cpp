#include <gtest/gtest.h>

#include <sstream>

#include "whitham/harness/config.hpp"
#include "whitham/harness/csv.hpp"

using namespace whitham;
using namespace whitham::harness;

namespace {
RunConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}
}  // namespace

TEST(Config, ParsesAllSections) {
  const RunConfig c = parse(R"(
[scenario]
name = energy-bound
seed = 42

[grid]
n = 128
period = 6.5

[solve]
T = 2.5
dt = 0.01
N = 3
eps = 0.125
eta_bar = 1.5
dealias = false
tol = 1e-9
max_iter = 20
cfl = 0.3

[data]
generator = cosine-bump
a = 1

[params]
amplitude = 0.2
)");
  EXPECT_EQ(c.scenario, "energy-bound");
  EXPECT_EQ(c.seed, 42u);
  EXPECT_EQ(c.n, 128);
  EXPECT_EQ(c.period, 6.5);
  EXPECT_EQ(c.solve.T, 2.5);
  EXPECT_EQ(c.solve.dt, 0.01);
  EXPECT_EQ(c.solve.N, 3);
  EXPECT_EQ(c.solve.eps, 0.125);
  EXPECT_EQ(c.solve.eta_bar, 1.5);
  EXPECT_EQ(c.solve.dealias, false);
  EXPECT_EQ(c.solve.tol, 1e-9);
  EXPECT_EQ(c.solve.max_iter, 20);
  EXPECT_EQ(c.cfl, 0.3);
  EXPECT_EQ(c.data.get_string("generator", ""), "cosine-bump");
  EXPECT_EQ(c.params.get_double("amplitude", 0), 0.2);
}

TEST(Config, IniRoundTrip) {
  RunConfig c;
  c.scenario = "model-compare";
  c.seed = 7;
  c.n = 96;
  c.solve.T = 1.0 / 3.0;
  c.solve.dealias = true;
  c.params.set("dts", "0.1, 0.05");
  const RunConfig back = parse(c.to_ini());
  EXPECT_EQ(back.to_ini(), c.to_ini());
  EXPECT_EQ(back.solve.T, 1.0 / 3.0);
  EXPECT_EQ(back.params.get_list("dts", {}), (std::vector<double>{0.1, 0.05}));
}

TEST(Config, RejectsUnknownKeysAndBadValues) {
  EXPECT_THROW(parse("[solve]\nbogus = 1\n"), ConfigError);
  EXPECT_THROW(parse("[nowhere]\nx = 1\n"), ConfigError);
  EXPECT_THROW(parse("[solve]\nT = fast\n"), ConfigError);
  EXPECT_THROW(parse("[solve]\nN = 2.5\n"), ConfigError);
  EXPECT_THROW(parse("[solve]\ndealias = maybe\n"), ConfigError);
  EXPECT_THROW(parse("[solve\nT = 1\n"), ConfigError);
}

TEST(Config, EverySolveFieldHasAnOverride) {
  RunConfig c;
  for (const auto& key : solve_config_keys()) {
    const std::string value = key == "dealias" ? "false" : (key == "N" || key == "max_iter") ? "4" : "0.5";
    EXPECT_NO_THROW(apply_override(c, key, value)) << key;
  }
  const SolveConfig s = resolve_solve_config(c, SolveConfig{});
  EXPECT_EQ(s.T, 0.5);
  EXPECT_EQ(s.dt, 0.5);
  EXPECT_EQ(s.N, 4);
  EXPECT_EQ(s.eps, 0.5);
  EXPECT_EQ(s.eta_bar, 0.5);
  EXPECT_FALSE(s.dealias);
  EXPECT_EQ(s.tol, 0.5);
  EXPECT_EQ(s.max_iter, 4);
  EXPECT_EQ(solve_config_keys().size(), 8u);
}

TEST(Config, DottedOverrides) {
  RunConfig c;
  apply_override(c, "params.deltas", "0.5,0.1");
  apply_override(c, "data.generator", "gaussian-like");
  apply_override(c, "n", "64");
  apply_override(c, "seed", "9");
  EXPECT_EQ(c.params.get_list("deltas", {}), (std::vector<double>{0.5, 0.1}));
  EXPECT_EQ(c.data.get_string("generator", ""), "gaussian-like");
  EXPECT_EQ(c.n, 64);
  EXPECT_EQ(c.seed, 9u);
  EXPECT_THROW(apply_override(c, "nonsense", "1"), ConfigError);
}

TEST(Config, ResolveValidates) {
  RunConfig c;
  c.solve.dt = 2.0;
  c.solve.T = 1.0;
  EXPECT_THROW(resolve_solve_config(c, SolveConfig{}), ConfigError);
}

TEST(Csv, SeventeenDigits) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(1e-300), "1e-300");
  EXPECT_EQ(format_double(2.0 / 3.0), "0.66666666666666663");
  CsvTable t{"t", {"a", "b"}, {}};
  t.add_row({1.0 / 3.0, 2.0});
  EXPECT_EQ(t.to_string(), "a,b\n0.33333333333333331,2\n");
  EXPECT_ANY_THROW(t.add_row({1.0}));
}
