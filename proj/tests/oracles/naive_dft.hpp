#pragma once

// O(n^2) discrete Fourier transform, the reference for the FFT-backed Spectrum.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace oracle {

/// c(m) = (1/n) sum_j f_j exp(-2 pi i m j / n) for m = 0 .. n/2.
inline std::vector<std::complex<double>> naive_dft(const std::vector<double>& f) {
  const std::size_t n = f.size();
  std::vector<std::complex<double>> c(n / 2 + 1);
  for (std::size_t m = 0; m <= n / 2; ++m) {
    std::complex<long double> acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const long double phase = -2.0L * std::numbers::pi_v<long double> * static_cast<long double>((m * j) % n) / n;
      acc += static_cast<long double>(f[j]) * std::complex<long double>(std::cos(phase), std::sin(phase));
    }
    c[m] = std::complex<double>(static_cast<double>(acc.real() / n), static_cast<double>(acc.imag() / n));
  }
  return c;
}

}  // namespace oracle
