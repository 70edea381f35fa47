#include "whitham/harness/manifest.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <limits>
#include "json.hpp"

namespace whitham::harness {
namespace {

using nlohmann::json;

// JSON has no NaN or infinity; those are written as strings.
json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

double read_number(const json& j) {
  if (j.is_number()) return j.get<double>();
  const auto s = j.get<std::string>();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  return std::numeric_limits<double>::quiet_NaN();
}

json number_map(const std::map<std::string, double>& m) {
  json j = json::object();
  for (const auto& [k, v] : m) j[k] = number(v);
  return j;
}

std::map<std::string, double> read_number_map(const json& j) {
  std::map<std::string, double> m;
  for (const auto& [k, v] : j.items()) m[k] = read_number(v);
  return m;
}

}  // namespace

std::filesystem::path output_root() {
  if (const char* env = std::getenv(kOutputRootVariable); env != nullptr && *env != '\0') {
    return env;
  }
  return std::filesystem::current_path() / "runs";
}

std::string version_string() {
#ifdef WHITHAM_VERSION_STRING
  return WHITHAM_VERSION_STRING;
#else
  return "unknown";
#endif
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", &tm);
  char out[40];
  std::snprintf(out, sizeof out, "%s.%03dZ", buf, static_cast<int>(ms));
  return out;
}

std::string RunManifest::to_json() const {
  json j;
  j["scenario"] = scenario;
  j["seed"] = seed;
  if (solve) {
    j["solve"] = {{"T", number(solve->T)},          {"dt", number(solve->dt)},
                  {"N", solve->N},                   {"eps", number(solve->eps)},
                  {"eta_bar", number(solve->eta_bar)}, {"dealias", solve->dealias},
                  {"tol", number(solve->tol)},       {"max_iter", solve->max_iter}};
  } else {
    j["solve"] = nullptr;
  }
  j["grid"] = {{"n", n}, {"period", number(period)}};
  j["cfl"] = number(cfl);
  j["version"] = version;
  j["constants"] = number_map(constants);
  j["metrics"] = number_map(metrics);
  j["headline"] = headline;
  json cs = json::array();
  for (const auto& c : checks) {
    cs.push_back({{"name", c.name}, {"requirement", c.requirement}, {"value", number(c.value)},
                  {"pass", c.pass}});
  }
  j["checks"] = cs;
  j["started"] = started;
  j["finished"] = finished;
  j["directory"] = directory.string();
  j["outputs"] = outputs;
  j["exit_code"] = exit_code;
  j["error"] = error;
  j["config_ini"] = config_ini;
  return j.dump();
}

double RunManifest::headline_value() const {
  const auto it = metrics.find(headline);
  return it == metrics.end() ? std::numeric_limits<double>::quiet_NaN() : it->second;
}

RunManifest manifest_from_json(const std::string& text) {
  const json j = json::parse(text);
  RunManifest m;
  m.scenario = j.at("scenario").get<std::string>();
  m.seed = j.at("seed").get<std::uint64_t>();
  if (!j.at("solve").is_null()) {
    const json& s = j.at("solve");
    SolveConfig c;
    c.T = read_number(s.at("T"));
    c.dt = read_number(s.at("dt"));
    c.N = s.at("N").get<int>();
    c.eps = read_number(s.at("eps"));
    c.eta_bar = read_number(s.at("eta_bar"));
    c.dealias = s.at("dealias").get<bool>();
    c.tol = read_number(s.at("tol"));
    c.max_iter = s.at("max_iter").get<int>();
    m.solve = c;
  }
  m.n = j.at("grid").at("n").get<int>();
  m.period = read_number(j.at("grid").at("period"));
  m.cfl = read_number(j.at("cfl"));
  m.version = j.at("version").get<std::string>();
  m.constants = read_number_map(j.at("constants"));
  m.metrics = read_number_map(j.at("metrics"));
  m.headline = j.at("headline").get<std::string>();
  for (const auto& c : j.at("checks")) {
    m.checks.push_back(Check{c.at("name").get<std::string>(), c.at("requirement").get<std::string>(),
                             read_number(c.at("value")), c.at("pass").get<bool>()});
  }
  m.started = j.at("started").get<std::string>();
  m.finished = j.at("finished").get<std::string>();
  m.directory = j.at("directory").get<std::string>();
  m.outputs = j.at("outputs").get<std::vector<std::string>>();
  m.exit_code = j.at("exit_code").get<int>();
  m.error = j.at("error").get<std::string>();
  m.config_ini = j.at("config_ini").get<std::string>();
  return m;
}

ManifestWriter::ManifestWriter(std::filesystem::path root) : path_(std::move(root) / "manifests.jsonl") {}

void ManifestWriter::append(const RunManifest& m) {
  const std::string line = m.to_json();
  std::lock_guard lock(mutex_);
  std::filesystem::create_directories(path_.parent_path());
  std::ofstream out(path_, std::ios::app);
  out << line << '\n';
  if (!out) throw std::runtime_error("cannot append to " + path_.string());
}

}  // namespace whitham::harness
