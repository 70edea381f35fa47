#pragma once

// Truncated periodic kernel 1 + 2 sum_{m=1}^{M} tanh(m)/m cos(m x), summed in long double.

#include <cmath>

namespace oracle {

inline double kernel_Kp(double x, int M) {
  long double s = 1.0L;
  for (int m = 1; m <= M; ++m) {
    s += 2.0L * std::tanh(static_cast<long double>(m)) / m * std::cos(static_cast<long double>(m) * x);
  }
  return static_cast<double>(s);
}

}  // namespace oracle
