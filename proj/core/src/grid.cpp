#include "whitham/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace whitham {

Grid::Grid(int n, double period) : n_(n), period_(period) {
  if (n < 8 || n % 2 != 0) {
    throw std::invalid_argument("grid size must be even and >= 8, got " + std::to_string(n));
  }
  if (!(period > 0.0) || !std::isfinite(period)) {
    throw std::invalid_argument("grid period must be positive and finite");
  }
}

std::vector<double> Grid::points() const {
  std::vector<double> x(n_);
  for (int j = 0; j < n_; ++j) x[j] = point(j);
  return x;
}

Grid make_grid(int n, double period) { return Grid(n, period); }

}  // namespace whitham
