#pragma once

#include <complex>
#include <span>

namespace whitham::detail {

// Unnormalised real-to-half-complex DFT, out[k] = sum_j in[j] exp(-2 pi i jk/n).
void forward_dft(std::span<const double> in, std::span<std::complex<double>> out);

// Inverse of forward_dft up to a factor n: out[j] = sum_k X[k] exp(2 pi i jk/n)
// with Hermitian extension. The input is not modified.
void inverse_dft(std::span<const std::complex<double>> in, std::span<double> out);

}  // namespace whitham::detail
