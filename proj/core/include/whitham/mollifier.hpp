#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "whitham/field.hpp"
#include "whitham/spectral.hpp"

namespace whitham {

/// The standard bump mollifier rho(x) = C exp(-1/(1-x^2)) on |x| < 1, with C chosen
/// so that rho integrates to one, and its Fourier transform rho_hat.
///
/// rho_hat(xi) = \int rho(x) exp(-i xi x) dx is real and even. It is evaluated with
/// the trapezoid rule on [-1, 1]: rho vanishes to all orders at +-1, so the rule's
/// only error is the aliased tail sum_{k != 0} rho_hat(xi + k*pi*P), and P is chosen
/// to push that tail below double round-off.
///
/// Multiplier tables xi_m -> rho_hat(eps * xi_m) are built on first use for each
/// (grid, eps) and shared read-only afterwards; the cache is internally locked.
class Mollifier {
 public:
  static const Mollifier& standard();

  double profile(double x) const;
  double normalization() const noexcept { return normalization_; }
  double rho_hat(double xi) const;

  std::shared_ptr<const SpectralMultiplier> multiplier(const Grid& grid, double eps) const;

 private:
  Mollifier();
  // Trapezoid panel count giving an aliasing error far below 1e-17 up to |xi| = xi_max.
  static int panels_for(double xi_max);
  std::vector<double> rho_hat_many(const std::vector<double>& xi) const;

  double normalization_ = 1.0;

  mutable std::mutex cache_mutex_;
  mutable std::map<std::tuple<int, double, double>, std::shared_ptr<const SpectralMultiplier>>
      cache_;
};

/// J_eps f, with (J_eps f)^(m) = rho_hat(eps xi_m) f^(m). Requires 0 < eps <= 1.
Field mollify(const Field& f, double eps);

}  // namespace whitham
