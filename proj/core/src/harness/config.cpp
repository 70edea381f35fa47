#include "whitham/harness/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "whitham/harness/csv.hpp"

namespace whitham::harness {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string in_quotes(std::string_view what) { return "'" + std::string(what) + "'"; }

}  // namespace

double parse_double(std::string_view text, std::string_view what) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw ConfigError("value of " + in_quotes(what) + " is not a number: " + in_quotes(text));
  }
  return v;
}

int parse_int(std::string_view text, std::string_view what) {
  const std::string t = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw ConfigError("value of " + in_quotes(what) + " is not an integer: " + in_quotes(text));
  }
  return v;
}

bool parse_bool(std::string_view text, std::string_view what) {
  const std::string t = trim(text);
  if (t == "true" || t == "1" || t == "yes" || t == "on") return true;
  if (t == "false" || t == "0" || t == "no" || t == "off") return false;
  throw ConfigError("value of " + in_quotes(what) + " is not a boolean: " + in_quotes(text));
}

std::vector<double> parse_list(std::string_view text, std::string_view what) {
  std::string t(text);
  for (char& c : t) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(t);
  std::vector<double> out;
  std::string item;
  while (in >> item) out.push_back(parse_double(item, what));
  return out;
}

std::string ParamMap::get_string(const std::string& key, const std::string& fallback) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? fallback : it->second;
}

double ParamMap::get_double(const std::string& key, double fallback) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? fallback : parse_double(it->second, key);
}

int ParamMap::get_int(const std::string& key, int fallback) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? fallback : parse_int(it->second, key);
}

bool ParamMap::get_bool(const std::string& key, bool fallback) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? fallback : parse_bool(it->second, key);
}

std::vector<double> ParamMap::get_list(const std::string& key,
                                       const std::vector<double>& fallback) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? fallback : parse_list(it->second, key);
}

const std::vector<std::string>& solve_config_keys() {
  static const std::vector<std::string> keys = {"T",       "dt",  "N",        "eps",
                                                "eta_bar", "dealias", "tol", "max_iter"};
  return keys;
}

void apply_override(RunConfig& cfg, std::string_view key, std::string_view value) {
  const std::string k(key);
  if (k == "T") cfg.solve.T = parse_double(value, k);
  else if (k == "dt") cfg.solve.dt = parse_double(value, k);
  else if (k == "N") cfg.solve.N = parse_int(value, k);
  else if (k == "eps") cfg.solve.eps = parse_double(value, k);
  else if (k == "eta_bar") cfg.solve.eta_bar = parse_double(value, k);
  else if (k == "dealias") cfg.solve.dealias = parse_bool(value, k);
  else if (k == "tol") cfg.solve.tol = parse_double(value, k);
  else if (k == "max_iter") cfg.solve.max_iter = parse_int(value, k);
  else if (k == "cfl") cfg.cfl = parse_double(value, k);
  else if (k == "n") cfg.n = parse_int(value, k);
  else if (k == "period") cfg.period = parse_double(value, k);
  else if (k == "seed") {
    const int s = parse_int(value, k);
    if (s < 0) throw ConfigError("seed must be non-negative");
    cfg.seed = static_cast<std::uint64_t>(s);
  } else if (k == "scenario" || k == "name") cfg.scenario = trim(value);
  else if (k.rfind("data.", 0) == 0) cfg.data.set(k.substr(5), trim(value));
  else if (k.rfind("params.", 0) == 0) cfg.params.set(k.substr(7), trim(value));
  else throw ConfigError("unknown configuration key " + in_quotes(k));
}

RunConfig parse_config(std::istream& in) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("cannot parse configuration: ") + e.what());
  }
  RunConfig cfg;
  for (const auto& [section, body] : tree) {
    if (body.empty() && !body.data().empty()) {
      throw ConfigError("key " + in_quotes(section) + " must live inside a section");
    }
    for (const auto& [key, node] : body) {
      const std::string value = node.get_value<std::string>();
      if (section == "scenario") {
        if (key != "name" && key != "seed") throw ConfigError("unknown key [scenario] " + key);
        apply_override(cfg, key, value);
      } else if (section == "grid") {
        if (key != "n" && key != "period") throw ConfigError("unknown key [grid] " + key);
        apply_override(cfg, key, value);
      } else if (section == "solve") {
        const auto& keys = solve_config_keys();
        if (key != "cfl" && std::find(keys.begin(), keys.end(), key) == keys.end()) {
          throw ConfigError("unknown key [solve] " + key);
        }
        apply_override(cfg, key, value);
      } else if (section == "data") {
        cfg.data.set(key, trim(value));
      } else if (section == "params") {
        cfg.params.set(key, trim(value));
      } else {
        throw ConfigError("unknown section [" + section + "]");
      }
    }
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open configuration file " + path.string());
  return parse_config(f);
}

std::string RunConfig::to_ini() const {
  std::ostringstream o;
  o << "[scenario]\nname = " << scenario << "\nseed = " << seed << "\n\n[grid]\n";
  if (n) o << "n = " << *n << "\n";
  o << "period = " << format_double(period) << "\n\n[solve]\n";
  if (solve.T) o << "T = " << format_double(*solve.T) << "\n";
  if (solve.dt) o << "dt = " << format_double(*solve.dt) << "\n";
  if (solve.N) o << "N = " << *solve.N << "\n";
  if (solve.eps) o << "eps = " << format_double(*solve.eps) << "\n";
  if (solve.eta_bar) o << "eta_bar = " << format_double(*solve.eta_bar) << "\n";
  if (solve.dealias) o << "dealias = " << (*solve.dealias ? "true" : "false") << "\n";
  if (solve.tol) o << "tol = " << format_double(*solve.tol) << "\n";
  if (solve.max_iter) o << "max_iter = " << *solve.max_iter << "\n";
  o << "cfl = " << format_double(cfl) << "\n";
  if (!data.entries().empty()) {
    o << "\n[data]\n";
    for (const auto& [k, v] : data.entries()) o << k << " = " << v << "\n";
  }
  if (!params.entries().empty()) {
    o << "\n[params]\n";
    for (const auto& [k, v] : params.entries()) o << k << " = " << v << "\n";
  }
  return o.str();
}

SolveConfig resolve_solve_config(const RunConfig& cfg, SolveConfig d) {
  const SolveOverrides& s = cfg.solve;
  if (s.T) d.T = *s.T;
  if (s.dt) d.dt = *s.dt;
  if (s.N) d.N = *s.N;
  if (s.eps) d.eps = *s.eps;
  if (s.eta_bar) d.eta_bar = *s.eta_bar;
  if (s.dealias) d.dealias = *s.dealias;
  if (s.tol) d.tol = *s.tol;
  if (s.max_iter) d.max_iter = *s.max_iter;
  try {
    d.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid solve configuration: ") + e.what());
  }
  return d;
}

}  // namespace whitham::harness
