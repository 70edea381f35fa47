#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "whitham/fit.hpp"
#include "whitham/harness/scenarios.hpp"

namespace whitham::harness {

std::vector<std::string> split_values(std::string_view text) {
  std::string t(text);
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream in(t);
  std::vector<std::string> out;
  for (std::string item; in >> item;) out.push_back(item);
  return out;
}

SweepResult sweep(const RunConfig& base, std::string_view parameter,
                  const std::vector<std::string>& values, const std::filesystem::path& root,
                  unsigned jobs, std::ostream* log) {
  if (values.empty()) throw ConfigError("sweep needs at least one value");
  const ScenarioSpec& spec = find_scenario(base.scenario);
  const std::string key = sweep_key(spec, parameter);
  std::vector<RunConfig> configs;
  std::vector<double> numeric;
  for (const auto& v : values) {
    RunConfig c = base;
    apply_override(c, key, v);
    validate_config(spec, c);
    configs.push_back(std::move(c));
    numeric.push_back(parse_double(v, key));
  }

  SweepResult result;
  result.directory = new_run_directory(root, "sweep-" + base.scenario);
  ManifestWriter writer(root);
  result.children.resize(configs.size());
  std::mutex log_mutex;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < configs.size(); i = next++) {
      std::ostringstream child_log;
      const auto dir = result.directory / ("child-" + std::to_string(i));
      result.children[i] = run_scenario(configs[i], dir, &writer, &child_log);
      if (log) {
        std::lock_guard lock(log_mutex);
        *log << "[" << key << " = " << values[i] << "] exit " << result.children[i].exit_code << '\n'
             << child_log.str();
      }
    }
  };
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(configs.size()));
  std::vector<std::jthread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  pool.clear();

  CsvTable aggregate{"aggregate", {"value", "child", "exit_code", "headline_value"}, {}};
  std::vector<double> xs;
  std::vector<double> ys;
  bool fit_ok = true;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    const RunManifest& m = result.children[i];
    const double h = m.headline_value();
    aggregate.add_row({numeric[i], double(i), double(m.exit_code), h});
    if (m.exit_code != 0 && result.exit_code == 0) result.exit_code = m.exit_code;
    fit_ok = fit_ok && numeric[i] > 0.0 && h > 0.0 && std::isfinite(h);
    xs.push_back(numeric[i]);
    ys.push_back(h);
  }
  result.aggregate = result.directory / "aggregate.csv";
  aggregate.write(result.aggregate);

  std::ostringstream meta;
  meta << "parameter," << key << "\nscenario," << base.scenario << "\nheadline,"
       << (result.children.empty() ? "" : result.children.front().headline) << '\n';
  for (std::size_t i = 0; i < configs.size(); ++i) {
    meta << "child-" << i << ',' << result.children[i].directory.string() << '\n';
  }
  {
    std::ofstream out(result.directory / "sweep.csv");
    out << meta.str();
  }
  if (fit_ok && xs.size() >= 2) {
    const LineFit f = fit_loglog(xs, ys);
    CsvTable fit{"fit", {"slope", "intercept", "r_squared"}, {}};
    fit.add_row({f.slope, f.intercept, f.r_squared});
    fit.write(result.directory / "fit.csv");
    if (log) *log << "log-log slope of headline vs " << key << ": " << format_double(f.slope) << '\n';
  }
  return result;
}

}  // namespace whitham::harness
