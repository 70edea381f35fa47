#include "whitham/field.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace whitham {

Field::Field(Grid grid) : grid_(grid), samples_(static_cast<std::size_t>(grid.size()), 0.0) {}

Field::Field(Grid grid, std::vector<double> samples) : grid_(grid), samples_(std::move(samples)) {
  if (samples_.size() != static_cast<std::size_t>(grid_.size())) {
    throw std::invalid_argument("field sample count does not match grid size");
  }
}

Field Field::constant(const Grid& grid, double value) {
  return Field(grid, std::vector<double>(static_cast<std::size_t>(grid.size()), value));
}

Field Field::from_function(const Grid& grid, const std::function<double(double)>& f) {
  std::vector<double> s(static_cast<std::size_t>(grid.size()));
  for (int j = 0; j < grid.size(); ++j) s[j] = f(grid.point(j));
  return Field(grid, std::move(s));
}

double Field::min() const { return *std::min_element(samples_.begin(), samples_.end()); }
double Field::max() const { return *std::max_element(samples_.begin(), samples_.end()); }

double Field::max_abs() const {
  double m = 0.0;
  for (double v : samples_) m = std::max(m, std::abs(v));
  return m;
}

double Field::mean() const {
  return std::accumulate(samples_.begin(), samples_.end(), 0.0) / static_cast<double>(size());
}

double Field::integral() const {
  return std::accumulate(samples_.begin(), samples_.end(), 0.0) * grid_.spacing();
}

bool Field::all_finite() const {
  return std::all_of(samples_.begin(), samples_.end(), [](double v) { return std::isfinite(v); });
}

void Field::check_same_grid(const Field& other) const {
  if (!(grid_ == other.grid_)) throw std::invalid_argument("fields live on different grids");
}

Field& Field::operator+=(const Field& other) {
  check_same_grid(other);
  for (std::size_t j = 0; j < samples_.size(); ++j) samples_[j] += other.samples_[j];
  return *this;
}

Field& Field::operator-=(const Field& other) {
  check_same_grid(other);
  for (std::size_t j = 0; j < samples_.size(); ++j) samples_[j] -= other.samples_[j];
  return *this;
}

Field& Field::operator*=(const Field& other) {
  check_same_grid(other);
  for (std::size_t j = 0; j < samples_.size(); ++j) samples_[j] *= other.samples_[j];
  return *this;
}

Field& Field::operator*=(double s) {
  for (double& v : samples_) v *= s;
  return *this;
}

Field& Field::operator+=(double c) {
  for (double& v : samples_) v += c;
  return *this;
}

Field Field::map(const std::function<double(double)>& f) const {
  Field out(grid_);
  for (std::size_t j = 0; j < samples_.size(); ++j) out.samples_[j] = f(samples_[j]);
  return out;
}

void axpy(Field& a, double s, const Field& b) {
  if (!(a.grid() == b.grid())) throw std::invalid_argument("fields live on different grids");
  auto x = a.samples();
  auto y = b.samples();
  for (std::size_t j = 0; j < x.size(); ++j) x[j] += s * y[j];
}

double max_abs_difference(const Field& a, const Field& b) {
  if (!(a.grid() == b.grid())) throw std::invalid_argument("fields live on different grids");
  double m = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
  return m;
}

}  // namespace whitham
