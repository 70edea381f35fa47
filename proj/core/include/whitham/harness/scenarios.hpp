#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "whitham/harness/config.hpp"
#include "whitham/harness/experiments.hpp"
#include "whitham/harness/manifest.hpp"

namespace whitham::harness {

/// A named experiment with its parameter schema.
struct ScenarioSpec {
  std::string name;
  std::string summary;
  std::vector<std::string> params;      ///< accepted keys of [params]
  std::vector<std::string> solve_keys;  ///< SolveConfig keys the scenario honours
  bool grid_n = false;                  ///< honours [grid] n
  bool cfl = false;                     ///< honours [solve] cfl
  bool data = false;                    ///< accepts an initial-data generator in [data]
  std::function<ExperimentReport(const RunConfig&)> run;
};

/// The nine scenarios, in a fixed order.
const std::vector<ScenarioSpec>& scenarios();

/// Throws ConfigError for unknown names.
const ScenarioSpec& find_scenario(std::string_view name);

/// Rejects keys the scenario would silently ignore. Throws ConfigError.
void validate_config(const ScenarioSpec& spec, const RunConfig& cfg);

/// Canonical override key for a swept parameter: SolveConfig keys, n, cfl and seed map
/// to themselves, a bare schema key to params.<key>; data.<key> passes through when the
/// scenario takes initial data. Throws ConfigError when the scenario has no such parameter.
std::string sweep_key(const ScenarioSpec& spec, std::string_view parameter);

/// Fresh directory `<root>/<stem>-<UTC time>[-k]`.
std::filesystem::path new_run_directory(const std::filesystem::path& root, const std::string& stem);

/// Runs cfg.scenario, writing config.ini, CSV tables, trajectory exports and
/// manifest.json into `directory`, and appends the manifest through `writer` if given.
/// The returned manifest carries the exit code; nothing is thrown for failures that
/// happen once the scenario has started. `log` receives one line per check.
RunManifest run_scenario(const RunConfig& cfg, const std::filesystem::path& directory,
                         ManifestWriter* writer, std::ostream* log);

/// Loads `config_path` (defaults when empty), names the scenario, validates, and runs it
/// in a fresh directory under output_root(), appending to its manifests.jsonl.
/// Throws ConfigError when the file or the parameters are invalid.
RunManifest run_scenario(std::string_view scenario, const std::filesystem::path& config_path,
                         std::ostream* log);

/// Outcome of a sweep: one manifest per value plus the aggregate files.
struct SweepResult {
  std::vector<RunManifest> children;
  std::filesystem::path directory;
  std::filesystem::path aggregate;
  int exit_code = 0;  ///< 0 iff every child passed, otherwise the first non-zero child code
};

/// Independent runs of `base` with `parameter` set to each of `values`, at most
/// `jobs` at a time (0: hardware concurrency). Writes aggregate.csv joining each
/// value to the child's headline metric and, when every value and headline is
/// positive, fit.csv with the log-log slope. Throws ConfigError on an empty list.
SweepResult sweep(const RunConfig& base, std::string_view parameter,
                  const std::vector<std::string>& values, const std::filesystem::path& root,
                  unsigned jobs, std::ostream* log);

/// Splits "a,b c" into items.
std::vector<std::string> split_values(std::string_view text);

}  // namespace whitham::harness
