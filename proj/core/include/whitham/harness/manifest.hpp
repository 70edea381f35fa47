#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "whitham/harness/experiments.hpp"

namespace whitham::harness {

/// Environment variable naming the output root; the working directory's `runs/` otherwise.
inline constexpr const char* kOutputRootVariable = "WHITHAM_OUTPUT_DIR";

std::filesystem::path output_root();

/// Code version recorded in every manifest.
std::string version_string();

/// Record of one scenario run, serialised as one JSON object.
struct RunManifest {
  std::string scenario;
  std::uint64_t seed = 0;
  std::optional<SolveConfig> solve;
  int n = 0;  ///< 0 when the scenario spans several grids
  double period = kTwoPi;
  double cfl = 0.0;
  std::string version;
  std::map<std::string, double> constants;
  std::map<std::string, double> metrics;
  std::vector<Check> checks;
  std::string headline;
  std::string started;   ///< ISO 8601, UTC
  std::string finished;  ///< ISO 8601, UTC
  std::filesystem::path directory;
  std::vector<std::string> outputs;  ///< paths relative to `directory`
  int exit_code = 0;
  std::string error;  ///< message of the exception that ended the run, if any
  std::string config_ini;

  std::string to_json() const;
  /// Headline metric, NaN when absent.
  double headline_value() const;
};

RunManifest manifest_from_json(const std::string& text);

/// Appends manifests to `<root>/manifests.jsonl`, one line each, under a mutex.
class ManifestWriter {
 public:
  explicit ManifestWriter(std::filesystem::path root);
  void append(const RunManifest& m);
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::mutex mutex_;
};

/// Current UTC time as 2026-01-31T12:00:00.123Z.
std::string utc_timestamp();

}  // namespace whitham::harness
