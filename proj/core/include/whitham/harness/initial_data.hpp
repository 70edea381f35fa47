#pragma once

#include <cstdint>
#include <random>

#include "whitham/field.hpp"
#include "whitham/harness/config.hpp"

namespace whitham::harness {

/// Deterministic source for randomized ensembles: mt19937_64, doubles built from
/// the top 53 bits so the sequence is identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform();                      ///< [0, 1)
  double uniform(double lo, double hi);  ///< [lo, hi)

 private:
  std::mt19937_64 engine_;
};

/// sum_{1 <= m <= cutoff} a_m cos(m k x) + b_m sin(m k x), k = 2 pi / period, with a_m, b_m
/// uniform in [-1, 1] scaled by (1 + m)^{-decay}. Mean zero, scaled to max |f| = 1.
Field random_bandlimited(const Grid& grid, int cutoff, Rng& rng, double decay = 0.0);

struct InitialData {
  Field eta;
  Field u;
};

/// Named data generators, selected by data.generator:
///   cosine-bump         eta = a + b cos(kx), u = u_amplitude sin(kx)
///   gaussian-like       eta = background + amplitude * sum_j exp(-((x - centre + j P) / width)^2),
///                       u = u_scale * (eta - background)
///   random-bandlimited  eta = background + amplitude f, u = u_amplitude g; f, g from
///                       random_bandlimited(cutoff) seeded by data.seed (default: run seed)
/// Throws ConfigError on unknown generators or keys.
InitialData make_initial_data(const Grid& grid, const ParamMap& data, std::uint64_t seed);

}  // namespace whitham::harness
