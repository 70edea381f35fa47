#include "whitham/harness/initial_data.hpp"

#include <cmath>
#include <set>

namespace whitham::harness {
namespace {

void require_keys(const ParamMap& data, const std::set<std::string>& allowed) {
  for (const auto& [k, v] : data.entries()) {
    if (!allowed.count(k)) throw ConfigError("unknown data key '" + k + "'");
  }
}

}  // namespace

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

Field random_bandlimited(const Grid& grid, int cutoff, Rng& rng, double decay) {
  if (cutoff < 1 || cutoff > grid.nyquist() - 1) {
    throw ConfigError("random-bandlimited cutoff must lie in [1, n/2 - 1]");
  }
  std::vector<double> a(static_cast<std::size_t>(cutoff + 1));
  std::vector<double> b(a.size());
  for (int m = 1; m <= cutoff; ++m) {
    const double scale = std::pow(1.0 + m, -decay);
    a[m] = scale * rng.uniform(-1.0, 1.0);
    b[m] = scale * rng.uniform(-1.0, 1.0);
  }
  const double k = kTwoPi / grid.period();
  Field f = Field::from_function(grid, [&](double x) {
    double s = 0.0;
    for (int m = 1; m <= cutoff; ++m) s += a[m] * std::cos(m * k * x) + b[m] * std::sin(m * k * x);
    return s;
  });
  const double peak = f.max_abs();
  if (peak > 0.0) f *= 1.0 / peak;
  return f;
}

InitialData make_initial_data(const Grid& grid, const ParamMap& data, std::uint64_t seed) {
  const std::string gen = data.get_string("generator", "cosine-bump");
  const double k = kTwoPi / grid.period();
  if (gen == "cosine-bump") {
    require_keys(data, {"generator", "a", "b", "u_amplitude"});
    const double a = data.get_double("a", 1.0);
    const double b = data.get_double("b", 0.1);
    const double c = data.get_double("u_amplitude", 0.0);
    return {Field::from_function(grid, [&](double x) { return a + b * std::cos(k * x); }),
            Field::from_function(grid, [&](double x) { return c * std::sin(k * x); })};
  }
  if (gen == "gaussian-like") {
    require_keys(data, {"generator", "background", "amplitude", "width", "centre", "u_scale"});
    const double bg = data.get_double("background", 1.0);
    const double amp = data.get_double("amplitude", 0.1);
    const double width = data.get_double("width", 0.5);
    const double centre = data.get_double("centre", 0.5 * grid.period());
    const double us = data.get_double("u_scale", 0.0);
    if (!(width > 0.0)) throw ConfigError("gaussian-like width must be positive");
    const double P = grid.period();
    Field eta = Field::from_function(grid, [&](double x) {
      double s = 0.0;
      for (int j = -3; j <= 3; ++j) {
        const double z = (x - centre + j * P) / width;
        s += std::exp(-z * z);
      }
      return bg + amp * s;
    });
    Field u = (eta + (-bg)) * us;
    return {std::move(eta), std::move(u)};
  }
  if (gen == "random-bandlimited") {
    require_keys(data, {"generator", "background", "amplitude", "u_amplitude", "cutoff", "seed"});
    Rng rng(static_cast<std::uint64_t>(data.get_int("seed", static_cast<int>(seed))));
    const int cutoff = data.get_int("cutoff", 4);
    const double bg = data.get_double("background", 1.0);
    const double amp = data.get_double("amplitude", 0.1);
    const double ua = data.get_double("u_amplitude", 0.1);
    Field f = random_bandlimited(grid, cutoff, rng);
    Field g = random_bandlimited(grid, cutoff, rng);
    return {f * amp + bg, g * ua};
  }
  throw ConfigError("unknown data generator '" + gen + "'");
}

}  // namespace whitham::harness
