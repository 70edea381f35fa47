#include "whitham/mollifier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace whitham {
namespace {

double bump(double x) {
  const double s = 1.0 - x * x;
  return s > 0.0 ? std::exp(-1.0 / s) : 0.0;
}

// |rho_hat(xi)| < 1e-18 beyond this distance from the evaluation point.
constexpr double kAliasGuard = 2200.0;

}  // namespace

const Mollifier& Mollifier::standard() {
  static const Mollifier instance;
  return instance;
}

Mollifier::Mollifier() {
  const int panels = panels_for(0.0);
  const double h = 2.0 / panels;
  double sum = bump(0.0);
  for (int i = 1; i < panels / 2; ++i) sum += 2.0 * bump(i * h);
  normalization_ = 1.0 / (sum * h);
}

int Mollifier::panels_for(double xi_max) {
  const int p = static_cast<int>(std::ceil((std::abs(xi_max) + kAliasGuard) / std::numbers::pi));
  return p + (p % 2);
}

double Mollifier::profile(double x) const { return normalization_ * bump(x); }

std::vector<double> Mollifier::rho_hat_many(const std::vector<double>& xi) const {
  double xi_max = 0.0;
  for (double v : xi) xi_max = std::max(xi_max, std::abs(v));
  const int panels = panels_for(xi_max);
  const double h = 2.0 / panels;
  const int half = panels / 2;
  std::vector<double> node(static_cast<std::size_t>(half));
  std::vector<double> weight(static_cast<std::size_t>(half));
  for (int i = 1; i < half; ++i) {
    node[i] = i * h;
    weight[i] = 2.0 * h * profile(i * h);
  }
  const double centre = h * profile(0.0);

  std::vector<double> out(xi.size());
  for (std::size_t k = 0; k < xi.size(); ++k) {
    double sum = 0.0;
    // Sum from the edge inwards: the small terms first.
    for (int i = half - 1; i >= 1; --i) sum += weight[i] * std::cos(xi[k] * node[i]);
    out[k] = sum + centre;
  }
  return out;
}

double Mollifier::rho_hat(double xi) const { return rho_hat_many({xi}).front(); }

std::shared_ptr<const SpectralMultiplier> Mollifier::multiplier(const Grid& grid,
                                                                double eps) const {
  const auto key = std::make_tuple(grid.size(), grid.period(), eps);
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  std::vector<double> xi(static_cast<std::size_t>(grid.nyquist() + 1));
  for (int m = 0; m <= grid.nyquist(); ++m) xi[m] = eps * grid.wavenumber(m);
  const auto values = rho_hat_many(xi);
  std::vector<Complex> table(values.begin(), values.end());
  // rho_hat(0) = 1 analytically; the quadrature agrees to round-off.
  table[0] = 1.0;
  auto built = std::make_shared<const SpectralMultiplier>(grid, std::move(table));

  std::lock_guard lock(cache_mutex_);
  auto [it, inserted] = cache_.emplace(key, std::move(built));
  return it->second;
}

Field mollify(const Field& f, double eps) {
  if (!(eps > 0.0) || eps > 1.0) {
    throw std::invalid_argument("mollification parameter must lie in (0, 1]");
  }
  return Mollifier::standard().multiplier(f.grid(), eps)->apply(f);
}

}  // namespace whitham
