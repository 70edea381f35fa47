#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "whitham/grid.hpp"

namespace whitham {

/// A real periodic scalar function sampled on a Grid.
///
/// The physical-space samples are the stored representation; spectral
/// coefficients are obtained on demand with forward_transform().
class Field {
 public:
  explicit Field(Grid grid);
  Field(Grid grid, std::vector<double> samples);

  static Field constant(const Grid& grid, double value);
  static Field from_function(const Grid& grid, const std::function<double(double)>& f);

  const Grid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return samples_.size(); }

  std::span<const double> samples() const noexcept { return samples_; }
  std::span<double> samples() noexcept { return samples_; }

  double operator[](std::size_t j) const noexcept { return samples_[j]; }
  double& operator[](std::size_t j) noexcept { return samples_[j]; }

  double min() const;
  double max() const;
  double max_abs() const;
  /// Spatial mean (1/n) sum_j f_j, equal to the mode-0 coefficient.
  double mean() const;
  /// Trapezoid integral over one period, sum_j f_j * spacing.
  double integral() const;
  bool all_finite() const;

  Field& operator+=(const Field& other);
  Field& operator-=(const Field& other);
  Field& operator*=(const Field& other);
  Field& operator*=(double s);
  Field& operator+=(double c);

  friend Field operator+(Field a, const Field& b) { return a += b; }
  friend Field operator-(Field a, const Field& b) { return a -= b; }
  friend Field operator*(Field a, const Field& b) { return a *= b; }
  friend Field operator*(double s, Field a) { return a *= s; }
  friend Field operator*(Field a, double s) { return a *= s; }
  friend Field operator+(Field a, double c) { return a += c; }
  friend Field operator-(Field a) { return a *= -1.0; }

  /// Pointwise map y_j = f(x_j).
  Field map(const std::function<double(double)>& f) const;

 private:
  void check_same_grid(const Field& other) const;

  Grid grid_;
  std::vector<double> samples_;
};

/// a += s * b, the RK workhorse.
void axpy(Field& a, double s, const Field& b);

double max_abs_difference(const Field& a, const Field& b);

}  // namespace whitham
