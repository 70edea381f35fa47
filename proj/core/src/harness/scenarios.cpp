#include <fstream>
#include <ostream>

#include "whitham/errors.hpp"
#include "whitham/harness/scenarios.hpp"
#include "whitham/picard.hpp"
#include "whitham/trajectory_io.hpp"

namespace whitham::harness {
namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

// Grid recorded in the manifest: the scenario's main grid, or 0 when it spans several.
int manifest_grid(const RunConfig& cfg) {
  if (cfg.n) return *cfg.n;
  if (cfg.scenario == "mollifier-lemma") return MollifierParams{}.n;
  if (cfg.scenario == "dispersion-check") return DispersionParams{}.n;
  if (cfg.scenario == "vanishing-elevation") return VanishingElevationParams{}.n;
  if (cfg.scenario == "inequality-suite") return 0;
  return ReferenceRun{}.n;
}

void write_outputs(const ExperimentReport& r, const std::filesystem::path& dir, RunManifest& m) {
  for (const auto& t : r.tables) {
    t.write(dir / (t.name + ".csv"));
    m.outputs.push_back(t.name + ".csv");
  }
  for (const auto& [stem, tr] : r.trajectories) {
    {
      std::ofstream out(dir / (stem + ".csv"), std::ios::binary);
      write_trajectory_csv(out, *tr);
      if (!out) throw std::runtime_error("cannot write " + stem + ".csv");
    }
    {
      std::ofstream out(dir / (stem + ".bin"), std::ios::binary);
      write_binary_dump(out, *tr);
      if (!out) throw std::runtime_error("cannot write " + stem + ".bin");
    }
    m.outputs.push_back(stem + ".csv");
    m.outputs.push_back(stem + ".bin");
  }
  if (!r.log.empty()) {
    std::string text;
    for (const auto& line : r.log) text += line + '\n';
    write_text(dir / "log.txt", text);
    m.outputs.push_back("log.txt");
  }
}

}  // namespace

std::filesystem::path new_run_directory(const std::filesystem::path& root, const std::string& stem) {
  std::filesystem::create_directories(root);
  std::string stamp = utc_timestamp();
  std::erase(stamp, ':');
  std::erase(stamp, '-');
  const std::string base = stem + "-" + stamp;
  for (int k = 0;; ++k) {
    const auto dir = root / (k == 0 ? base : base + "-" + std::to_string(k));
    if (std::filesystem::create_directory(dir)) return dir;
  }
}

RunManifest run_scenario(const RunConfig& cfg, const std::filesystem::path& directory,
                         ManifestWriter* writer, std::ostream* log) {
  RunManifest m;
  m.scenario = cfg.scenario;
  m.seed = cfg.seed;
  m.n = manifest_grid(cfg);
  m.period = cfg.period;
  m.cfl = cfg.cfl;
  m.version = version_string();
  m.directory = directory;
  m.config_ini = cfg.to_ini();
  m.started = utc_timestamp();
  std::filesystem::create_directories(directory);
  write_text(directory / "config.ini", m.config_ini);
  m.outputs.push_back("config.ini");

  auto fail = [&](int code, const std::string& what) {
    m.exit_code = code;
    m.error = what;
    if (log) *log << cfg.scenario << ": " << what << '\n';
  };
  try {
    const ScenarioSpec& spec = find_scenario(cfg.scenario);
    validate_config(spec, cfg);
    const ExperimentReport r = spec.run(cfg);
    m.solve = r.solve;
    m.constants = r.constants;
    m.metrics = r.metrics;
    m.checks = r.checks;
    m.headline = r.headline;
    write_outputs(r, directory, m);
    m.exit_code = r.passed() ? kExitPass : kExitAssertionFailure;
    if (log) {
      for (const auto& c : r.checks) {
        *log << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << format_double(c.value) << " ("
             << c.requirement << ")\n";
      }
    }
  } catch (const ConfigError& e) {
    fail(kExitConfigError, std::string("configuration error: ") + e.what());
  } catch (const std::invalid_argument& e) {
    fail(kExitConfigError, std::string("invalid parameter: ") + e.what());
  } catch (const AdmissibilityError& e) {
    fail(kExitAdmissibilityError, std::string("admissibility error: ") + e.what());
  } catch (const DomainError& e) {
    fail(kExitAdmissibilityError, std::string("admissibility error: ") + e.what());
  } catch (const AssumptionViolated& e) {
    fail(kExitAdmissibilityError, std::string("coefficient state left the admissible set: ") + e.what());
  } catch (const BlowUpError& e) {
    fail(kExitBlowUp, std::string("blow-up: ") + e.what());
  } catch (const NumericError& e) {
    fail(kExitBlowUp, std::string("non-finite value: ") + e.what());
  } catch (const NonContractionError& e) {
    fail(kExitAssertionFailure, std::string("Picard iteration failed: ") + e.what());
  }
  m.finished = utc_timestamp();
  m.outputs.push_back("manifest.json");
  write_text(directory / "manifest.json", m.to_json() + "\n");
  if (writer) writer->append(m);
  return m;
}

RunManifest run_scenario(std::string_view scenario, const std::filesystem::path& config_path,
                         std::ostream* log) {
  RunConfig cfg = config_path.empty() ? RunConfig{} : load_config(config_path);
  cfg.scenario = std::string(scenario);
  validate_config(find_scenario(cfg.scenario), cfg);
  const auto root = output_root();
  ManifestWriter writer(root);
  return run_scenario(cfg, new_run_directory(root, cfg.scenario), &writer, log);
}

}  // namespace whitham::harness
