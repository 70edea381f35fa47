#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "whitham/field.hpp"
#include "whitham/grid.hpp"

namespace whitham {

using Complex = std::complex<double>;

/// Fourier coefficients of a real field, stored as the half spectrum m = 0 .. n/2.
///
/// Normalisation: c(m) = (1/n) sum_j f_j exp(-2*pi*i*m*j/n), so a constant field c
/// has c(0) = c and cos(x) on a 2*pi grid has c(+-1) = 1/2. Negative modes follow
/// from conjugate symmetry; the single Nyquist coefficient is shared by m = +-n/2.
class Spectrum {
 public:
  explicit Spectrum(Grid grid);
  Spectrum(Grid grid, std::vector<Complex> half);

  const Grid& grid() const noexcept { return grid_; }
  int max_mode() const noexcept { return grid_.nyquist(); }

  /// Coefficient of mode m, |m| <= n/2.
  Complex operator()(int m) const;

  std::span<const Complex> half() const noexcept { return half_; }
  std::span<Complex> half() noexcept { return half_; }

 private:
  Grid grid_;
  std::vector<Complex> half_;
};

Spectrum forward_transform(const Field& f);
Field inverse_transform(const Spectrum& s);

/// sum over all n modes of w(xi_m) |c(m)|^2, with xi_m the scaled wavenumber.
double weighted_power(const Spectrum& s, const std::function<double(double)>& weight);

/// Diagonal Fourier-space operator, stored as its action on modes 0 .. n/2.
///
/// Tables are built once per grid and reused; a multiplier is an immutable value.
class SpectralMultiplier {
 public:
  SpectralMultiplier(Grid grid, std::vector<Complex> table);

  /// Even, real symbol evaluated at |xi_m|. Throws NumericError on a non-finite value.
  static SpectralMultiplier from_real_symbol(const Grid& grid,
                                             const std::function<double(double)>& symbol);
  /// (i xi)^k with the Nyquist entry zeroed for odd k.
  static SpectralMultiplier derivative(const Grid& grid, int order);
  /// Indicator of |m| <= n/3.
  static SpectralMultiplier dealias(const Grid& grid);
  static SpectralMultiplier identity(const Grid& grid);

  const Grid& grid() const noexcept { return grid_; }
  Complex operator[](int m) const { return table_[static_cast<std::size_t>(m)]; }
  std::span<const Complex> table() const noexcept { return table_; }

  Field apply(const Field& f) const;
  void apply_in_place(Spectrum& s) const;

  /// Product of the two symbols (composition of the operators).
  friend SpectralMultiplier operator*(const SpectralMultiplier& a, const SpectralMultiplier& b);

 private:
  Grid grid_;
  std::vector<Complex> table_;
};

/// Spectral k-th derivative; order 0 returns f unchanged.
Field derivative(const Field& f, int order);

/// g^(m) = symbol(xi_m) f^(m) for a real symbol, even-extended.
Field apply_multiplier(const Field& f, const std::function<double(double)>& symbol);

/// Zero every coefficient with |m| > n/3.
Field dealias(const Field& f);

}  // namespace whitham
