#pragma once

#include <span>

namespace whitham {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Least-squares line y = slope * x + intercept. Needs at least two distinct x.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

/// Slope of log(y) against log(x); every x and y must be positive.
LineFit fit_loglog(std::span<const double> x, std::span<const double> y);

}  // namespace whitham
