#include "whitham/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace whitham {

double whitham_symbol(double xi) {
  if (xi == 0.0) return 1.0;
  return std::tanh(xi) / xi;
}

double whitham_sqrt_symbol(double xi) { return std::sqrt(whitham_symbol(xi)); }

SpectralMultiplier whitham_multiplier(const Grid& grid) {
  return SpectralMultiplier::from_real_symbol(grid, whitham_symbol);
}

SpectralMultiplier whitham_sqrt_multiplier(const Grid& grid) {
  return SpectralMultiplier::from_real_symbol(grid, whitham_sqrt_symbol);
}

Field apply_K(const Field& f) { return whitham_multiplier(f.grid()).apply(f); }

Field apply_K_sqrt(const Field& f) { return whitham_sqrt_multiplier(f.grid()).apply(f); }

double periodic_kernel_Kp(double x, int truncation) {
  if (truncation < 0) throw std::invalid_argument("kernel truncation must be non-negative");
  double sum = 1.0;
  // Pair +m and -m: 2 tanh(m)/m cos(mx). Summed from the small tail terms up.
  for (int m = truncation; m >= 1; --m) sum += 2.0 * (std::tanh(m) / m) * std::cos(m * x);
  return sum;
}

}  // namespace whitham
