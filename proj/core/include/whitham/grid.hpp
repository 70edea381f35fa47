#pragma once

#include <numbers>
#include <vector>

namespace whitham {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Uniform periodic collocation grid on [0, period).
///
/// Modes are indexed m = -n/2 .. n/2-1; mode m has the scaled wavenumber
/// m * 2*pi / period. Grids are small immutable values and compare by value.
class Grid {
 public:
  /// Throws std::invalid_argument unless n is even, n >= 8 and period > 0.
  Grid(int n, double period = kTwoPi);

  int size() const noexcept { return n_; }
  double period() const noexcept { return period_; }
  double spacing() const noexcept { return period_ / n_; }

  /// x_j = j * period / n.
  double point(int j) const noexcept { return j * spacing(); }
  std::vector<double> points() const;

  double wavenumber(int m) const noexcept { return m * (kTwoPi / period_); }

  int nyquist() const noexcept { return n_ / 2; }
  /// Largest |m| kept by the 2/3 dealiasing rule.
  int dealias_cutoff() const noexcept { return n_ / 3; }

  bool operator==(const Grid&) const = default;

 private:
  int n_;
  double period_;
};

Grid make_grid(int n, double period = kTwoPi);

}  // namespace whitham
