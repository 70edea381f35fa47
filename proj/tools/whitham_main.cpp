// Command-line front end: run, sweep and verify.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "whitham/harness/scenarios.hpp"

namespace wh = whitham::harness;

namespace {

// One optional string per override flag; only flags given on the command line apply.
struct Overrides {
  std::vector<std::pair<std::string, std::optional<std::string>>> flags;
  std::vector<std::string> sets;

  void attach(CLI::App* app) {
    std::vector<std::string> keys = wh::solve_config_keys();
    for (const char* k : {"cfl", "n", "period", "seed"}) keys.emplace_back(k);
    flags.reserve(keys.size());
    for (const auto& k : keys) {
      flags.emplace_back(k, std::nullopt);
      app->add_option("--" + k, flags.back().second, "override " + k);
    }
    app->add_option("--set", sets, "override any key, e.g. params.amplitude=0.2 or data.a=1")
        ->type_name("KEY=VALUE");
  }

  void apply(wh::RunConfig& cfg) const {
    for (const auto& [k, v] : flags) {
      if (v) wh::apply_override(cfg, k, *v);
    }
    for (const auto& s : sets) {
      const auto eq = s.find('=');
      if (eq == std::string::npos || eq == 0) throw wh::ConfigError("--set expects KEY=VALUE, got '" + s + "'");
      wh::apply_override(cfg, s.substr(0, eq), s.substr(eq + 1));
    }
  }
};

wh::RunConfig load(const std::string& path) {
  return path.empty() ? wh::RunConfig{} : wh::load_config(path);
}

int run_one(wh::RunConfig cfg) {
  const wh::ScenarioSpec& spec = wh::find_scenario(cfg.scenario);
  wh::validate_config(spec, cfg);
  const auto root = wh::output_root();
  wh::ManifestWriter writer(root);
  const auto dir = wh::new_run_directory(root, cfg.scenario);
  const wh::RunManifest m = wh::run_scenario(cfg, dir, &writer, &std::cout);
  std::cout << "outputs: " << dir.string() << "\nexit " << m.exit_code << '\n';
  return m.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudo-spectral experiments for the bidirectional Whitham system"};
  app.require_subcommand(1);

  std::string config_path;
  std::string scenario;
  Overrides run_over;
  CLI::App* run = app.add_subcommand("run", "run one scenario");
  run->add_option("scenario", scenario, "scenario name")->required();
  run->add_option("--config", config_path, "INI configuration file")->check(CLI::ExistingFile);
  run_over.attach(run);

  std::string parameter;
  std::string values;
  unsigned jobs = 0;
  Overrides sweep_over;
  CLI::App* sw = app.add_subcommand("sweep", "run a scenario once per parameter value");
  sw->add_option("parameter", parameter, "swept key, e.g. eps, n or params.amplitude")->required();
  sw->add_option("values", values, "comma-separated values")->required();
  sw->add_option("--config", config_path, "INI configuration file naming the scenario")
      ->check(CLI::ExistingFile);
  sw->add_option("--scenario", scenario, "scenario, when the file does not name one");
  sw->add_option("--jobs", jobs, "parallel children (0: one per core)");
  sweep_over.attach(sw);

  Overrides verify_over;
  CLI::App* verify = app.add_subcommand("verify", "run the full inequality suite");
  verify->add_option("--config", config_path, "INI configuration file")->check(CLI::ExistingFile);
  verify_over.attach(verify);

  CLI::App* list = app.add_subcommand("list", "list scenarios and their parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : wh::kExitConfigError;
  }

  try {
    if (*list) {
      for (const auto& s : wh::scenarios()) {
        std::cout << s.name << ": " << s.summary << "\n  params:";
        for (const auto& p : s.params) std::cout << ' ' << p;
        std::cout << "\n  solve:";
        for (const auto& p : s.solve_keys) std::cout << ' ' << p;
        std::cout << (s.data ? "\n  accepts [data]\n" : "\n");
      }
      return 0;
    }
    if (*run) {
      wh::RunConfig cfg = load(config_path);
      cfg.scenario = scenario;
      run_over.apply(cfg);
      return run_one(std::move(cfg));
    }
    if (*verify) {
      wh::RunConfig cfg = load(config_path);
      cfg.scenario = "inequality-suite";
      verify_over.apply(cfg);
      return run_one(std::move(cfg));
    }
    wh::RunConfig cfg = load(config_path);
    if (!scenario.empty()) cfg.scenario = scenario;
    if (cfg.scenario.empty()) throw wh::ConfigError("sweep needs a scenario: [scenario] name or --scenario");
    sweep_over.apply(cfg);
    const wh::SweepResult r =
        wh::sweep(cfg, parameter, wh::split_values(values), wh::output_root(), jobs, &std::cout);
    std::cout << "aggregate: " << r.aggregate.string() << "\nexit " << r.exit_code << '\n';
    return r.exit_code;
  } catch (const wh::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return wh::kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
