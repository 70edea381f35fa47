#include "whitham/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fft.hpp"
#include "whitham/errors.hpp"

namespace whitham {

Spectrum::Spectrum(Grid grid)
    : grid_(grid), half_(static_cast<std::size_t>(grid.nyquist() + 1), Complex{}) {}

Spectrum::Spectrum(Grid grid, std::vector<Complex> half) : grid_(grid), half_(std::move(half)) {
  if (half_.size() != static_cast<std::size_t>(grid_.nyquist() + 1)) {
    throw std::invalid_argument("half spectrum must hold n/2 + 1 coefficients");
  }
}

Complex Spectrum::operator()(int m) const {
  const int nyq = grid_.nyquist();
  if (m < -nyq || m > nyq) throw std::out_of_range("mode index outside [-n/2, n/2]");
  if (m >= 0) return half_[static_cast<std::size_t>(m)];
  return std::conj(half_[static_cast<std::size_t>(-m)]);
}

Spectrum forward_transform(const Field& f) {
  Spectrum s(f.grid());
  detail::forward_dft(f.samples(), s.half());
  const double inv_n = 1.0 / f.grid().size();
  for (auto& c : s.half()) c *= inv_n;
  return s;
}

Field inverse_transform(const Spectrum& s) {
  Field f(s.grid());
  detail::inverse_dft(s.half(), f.samples());
  return f;
}

double weighted_power(const Spectrum& s, const std::function<double(double)>& weight) {
  const auto& g = s.grid();
  const int nyq = g.nyquist();
  const auto half = s.half();
  double total = weight(0.0) * std::norm(half[0]);
  for (int m = 1; m < nyq; ++m) total += 2.0 * weight(g.wavenumber(m)) * std::norm(half[m]);
  total += weight(g.wavenumber(nyq)) * std::norm(half[nyq]);
  return total;
}

SpectralMultiplier::SpectralMultiplier(Grid grid, std::vector<Complex> table)
    : grid_(grid), table_(std::move(table)) {
  if (table_.size() != static_cast<std::size_t>(grid_.nyquist() + 1)) {
    throw std::invalid_argument("multiplier table must hold n/2 + 1 entries");
  }
}

SpectralMultiplier SpectralMultiplier::from_real_symbol(
    const Grid& grid, const std::function<double(double)>& symbol) {
  std::vector<Complex> t(static_cast<std::size_t>(grid.nyquist() + 1));
  for (int m = 0; m <= grid.nyquist(); ++m) {
    const double value = symbol(std::abs(grid.wavenumber(m)));
    if (!std::isfinite(value)) {
      throw NumericError("multiplier symbol is not finite at mode " + std::to_string(m));
    }
    t[m] = value;
  }
  return SpectralMultiplier(grid, std::move(t));
}

SpectralMultiplier SpectralMultiplier::derivative(const Grid& grid, int order) {
  if (order < 0) throw std::invalid_argument("derivative order must be non-negative");
  const int nyq = grid.nyquist();
  std::vector<Complex> t(static_cast<std::size_t>(nyq + 1));
  for (int m = 0; m <= nyq; ++m) t[m] = std::pow(Complex(0.0, grid.wavenumber(m)), order);
  // (i xi)^k at the Nyquist mode has no real-field counterpart for odd k.
  if (order % 2 == 1) t[nyq] = 0.0;
  return SpectralMultiplier(grid, std::move(t));
}

SpectralMultiplier SpectralMultiplier::dealias(const Grid& grid) {
  std::vector<Complex> t(static_cast<std::size_t>(grid.nyquist() + 1));
  for (int m = 0; m <= grid.nyquist(); ++m) t[m] = (m <= grid.dealias_cutoff()) ? 1.0 : 0.0;
  return SpectralMultiplier(grid, std::move(t));
}

SpectralMultiplier SpectralMultiplier::identity(const Grid& grid) {
  return SpectralMultiplier(grid,
                            std::vector<Complex>(static_cast<std::size_t>(grid.nyquist() + 1), 1.0));
}

void SpectralMultiplier::apply_in_place(Spectrum& s) const {
  if (!(s.grid() == grid_)) throw std::invalid_argument("multiplier and spectrum grids differ");
  auto half = s.half();
  for (std::size_t m = 0; m < half.size(); ++m) half[m] *= table_[m];
  // Keep the Nyquist coefficient real so the inverse transform stays real.
  half.back() = half.back().real();
}

Field SpectralMultiplier::apply(const Field& f) const {
  Spectrum s = forward_transform(f);
  apply_in_place(s);
  return inverse_transform(s);
}

SpectralMultiplier operator*(const SpectralMultiplier& a, const SpectralMultiplier& b) {
  if (!(a.grid_ == b.grid_)) throw std::invalid_argument("multiplier grids differ");
  std::vector<Complex> t(a.table_.size());
  for (std::size_t m = 0; m < t.size(); ++m) t[m] = a.table_[m] * b.table_[m];
  return SpectralMultiplier(a.grid_, std::move(t));
}

Field derivative(const Field& f, int order) {
  if (order < 0) throw std::invalid_argument("derivative order must be non-negative");
  if (order == 0) return f;
  return SpectralMultiplier::derivative(f.grid(), order).apply(f);
}

Field apply_multiplier(const Field& f, const std::function<double(double)>& symbol) {
  return SpectralMultiplier::from_real_symbol(f.grid(), symbol).apply(f);
}

Field dealias(const Field& f) { return SpectralMultiplier::dealias(f.grid()).apply(f); }

}  // namespace whitham
