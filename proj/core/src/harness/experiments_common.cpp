#include <cmath>
#include <stdexcept>

#include "whitham/energy.hpp"
#include "whitham/harness/experiments.hpp"
#include "whitham/symmetrize.hpp"

namespace whitham::harness {

bool ExperimentReport::passed() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

void ExperimentReport::check(std::string name, std::string requirement, double value, bool pass) {
  checks.push_back(Check{std::move(name), std::move(requirement), value, pass});
}

State reference_state(const Grid& grid, double amplitude) {
  const double k = kTwoPi / grid.period();
  const Field eta = Field::from_function(grid, [&](double x) { return 1.0 + amplitude * std::cos(k * x); });
  const Field u = Field::from_function(grid, [&](double x) { return amplitude * std::sin(k * x); });
  return to_symmetric(State(eta, u, Representation::physical, 1.0));
}

double amplitude_for_energy(const Grid& grid, int N, double target) {
  if (!(target > 0.0)) throw std::invalid_argument("target energy must be positive");
  auto energy = [&](double a) { return total_energy(reference_state(grid, a), N).total; };
  double lo = 0.0;
  double hi = 0.999;
  if (energy(hi) < target) throw std::invalid_argument("target energy needs eta0 <= 0");
  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (energy(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double cfl_dt(const State& s, double cfl, double T) {
  const double h = cfl_time_step(s, cfl);
  const double steps = std::ceil(T / h);
  return T / steps;
}

bool less_severe(const BreakdownProxy& a, const BreakdownProxy& b) {
  if (a.broke_down != b.broke_down) return b.broke_down;
  if (a.broke_down) return a.stop_time > b.stop_time;
  return a.max_slope < b.max_slope;
}

}  // namespace whitham::harness
