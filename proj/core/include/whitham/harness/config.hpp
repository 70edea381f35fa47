#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "whitham/grid.hpp"
#include "whitham/solvers.hpp"

namespace whitham::harness {

/// Process exit status of `whitham run` and friends.
enum ExitCode : int {
  kExitPass = 0,
  kExitConfigError = 2,
  kExitAdmissibilityError = 3,
  kExitBlowUp = 4,
  kExitAssertionFailure = 5,
};

/// Unparsable file, unknown key or an out-of-range value.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// String-valued key/value section with typed, validating accessors.
class ParamMap {
 public:
  void set(std::string key, std::string value) { entries_[std::move(key)] = std::move(value); }
  bool has(const std::string& key) const { return entries_.count(key) != 0; }
  const std::map<std::string, std::string>& entries() const { return entries_; }

  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  int get_int(const std::string& key, int fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  /// Comma- or space-separated list of numbers.
  std::vector<double> get_list(const std::string& key, const std::vector<double>& fallback) const;

 private:
  std::map<std::string, std::string> entries_;
};

double parse_double(std::string_view text, std::string_view what);
int parse_int(std::string_view text, std::string_view what);
bool parse_bool(std::string_view text, std::string_view what);
std::vector<double> parse_list(std::string_view text, std::string_view what);

/// SolveConfig fields given explicitly in the file or on the command line.
struct SolveOverrides {
  std::optional<double> T, dt, eps, eta_bar, tol;
  std::optional<int> N, max_iter;
  std::optional<bool> dealias;
};

/// Everything needed to reproduce one scenario run.
///
///   [scenario] name, seed
///   [grid]     n, period
///   [solve]    T, dt, N, eps, eta_bar, dealias, tol, max_iter, cfl
///   [data]     generator and its parameters
///   [params]   scenario parameters
struct RunConfig {
  std::string scenario;
  std::uint64_t seed = 1;
  std::optional<int> n;
  double period = kTwoPi;
  double cfl = 0.4;
  SolveOverrides solve;
  ParamMap data;
  ParamMap params;

  /// INI text that parses back to an equal configuration.
  std::string to_ini() const;
};

RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::filesystem::path& path);

/// The CLI flag names that map onto SolveConfig fields, in declaration order.
const std::vector<std::string>& solve_config_keys();

/// Apply one override. Keys: any SolveConfig field, cfl, n, period, seed, scenario,
/// or data.<key> / params.<key>.
void apply_override(RunConfig& cfg, std::string_view key, std::string_view value);

/// Scenario defaults overlaid with the explicit values of `cfg`; validated.
SolveConfig resolve_solve_config(const RunConfig& cfg, SolveConfig defaults);

}  // namespace whitham::harness
