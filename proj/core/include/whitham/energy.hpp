#pragma once

#include <string>
#include <vector>

#include "whitham/field.hpp"
#include "whitham/spectral.hpp"
#include "whitham/state.hpp"

namespace whitham {

/// Bessel-potential norm (sum_m (1 + xi_m^2)^s |f^(m)|^2 * period)^{1/2}.
/// The factor `period` makes s = 0 coincide with the L2 norm (\int f^2 dx)^{1/2}.
double sobolev_norm(const Field& f, double s);
double sobolev_norm(const Spectrum& f, double s);

/// ||d^k f / dx^k||_{L2}, computed spectrally (Nyquist mode dropped for odd k).
double derivative_l2_norm(const Field& f, int k);

/// Energy functionals E^(k) for k = 0..N and their sum E_N at one time.
struct EnergyReport {
  std::vector<double> per_k;
  double total = 0.0;
  int N = 2;
  double time = 0.0;

  /// "time,E0,...,EN,total" with 17 significant digits.
  std::string csv_row() const;
  static std::string csv_header(int N);
};

/// E^(k) = ||zeta^(k)||^2 + ||u^(k)||^2. Accepts symmetric or unidirectional states;
/// physical states must be converted with to_symmetric() first.
double partial_energy(const State& U, int k);

/// Throws std::invalid_argument for N < 2.
EnergyReport total_energy(const State& U, int N, double time = 0.0);

/// Energy of any state: physical states are mapped to symmetric variables first.
EnergyReport energy_of(const State& U, int N, double time = 0.0);

/// Shape of the guaranteed lifespan, ln 2 / (1 + sum_{i=1}^N (2 E0)^{i/2}).
double lifespan_shape(double E0, int N);

/// c * min(T1, lifespan_shape(E0, N)). Non-increasing in E0.
double lifespan_estimate(double E0, int N, double T1, double c);

/// Ratio of the two sides of an inequality; `defined` is false when the
/// denominator vanishes.
struct RatioReport {
  double ratio = 0.0;
  double numerator = 0.0;
  double denominator = 0.0;
  bool defined = false;
};

/// ||d^k(fg)|| / (||f||_inf ||d^k g|| + ||g||_inf ||d^k f||).
RatioReport check_tame_product(const Field& f, const Field& g, int k);

/// ||d^l f|| / (||f||^{1 - l/k} ||d^k f||^{l/k}), 0 <= l <= k.
RatioReport check_interpolation(const Field& f, int l, int k);

/// ||g||_{H^s} / (||g||^{1 - s/N} ||g||_{H^N}^{s/N}), 0 <= s <= N.
RatioReport check_sobolev_interpolation(const Field& g, double s, double N);

}  // namespace whitham
