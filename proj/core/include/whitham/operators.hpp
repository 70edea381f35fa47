#pragma once

#include "whitham/field.hpp"
#include "whitham/spectral.hpp"

namespace whitham {

/// tanh(xi)/xi, with the continuous value 1 at xi = 0.
double whitham_symbol(double xi);

/// sqrt(tanh(xi)/xi).
double whitham_sqrt_symbol(double xi);

/// Dispersion operator K, the Fourier multiplier with symbol tanh(xi)/xi.
Field apply_K(const Field& f);

/// K^{1/2}, so that apply_K_sqrt(apply_K_sqrt(f)) == apply_K(f).
Field apply_K_sqrt(const Field& f);

/// Multiplier tables for K and K^{1/2} on a grid.
SpectralMultiplier whitham_multiplier(const Grid& grid);
SpectralMultiplier whitham_sqrt_multiplier(const Grid& grid);

/// Truncated periodic kernel K_p(x) = sum_{|m| <= M} tanh(m)/m e^{imx} on the 2*pi torus,
/// the m = 0 term being 1. Real and even in x.
///
/// With this normalisation K f(x) = (1/2pi) \int_0^{2pi} K_p(x - y) f(y) dy.
double periodic_kernel_Kp(double x, int truncation);

}  // namespace whitham
