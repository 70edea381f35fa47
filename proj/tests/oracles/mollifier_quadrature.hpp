#pragma once

// Mollifier transform by adaptive Gauss-Kronrod quadrature, independent of the
// trapezoid rule used in the library.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

namespace oracle {

inline double bump(double x) { return std::abs(x) < 1.0 ? std::exp(-1.0 / (1.0 - x * x)) : 0.0; }

/// \int_{-1}^{1} exp(-1/(1-x^2)) dx.
inline double bump_mass() {
  using boost::math::quadrature::gauss_kronrod;
  return 2.0 * gauss_kronrod<double, 61>::integrate(bump, 0.0, 1.0, 8, 1e-15);
}

/// \int rho(x) cos(xi x) dx with rho = bump / bump_mass().
inline double rho_hat(double xi) {
  using boost::math::quadrature::gauss_kronrod;
  auto f = [xi](double x) { return bump(x) * std::cos(xi * x); };
  return 2.0 * gauss_kronrod<double, 61>::integrate(f, 0.0, 1.0, 8, 1e-15) / bump_mass();
}

}  // namespace oracle
