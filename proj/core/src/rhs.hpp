#pragma once

#include <memory>
#include <optional>

#include "whitham/spectral.hpp"
#include "whitham/state.hpp"

namespace whitham::detail {

// Tendency of the (regularised) linear problem with all multiplier tables built once.
class RegularizedRhs {
 public:
  RegularizedRhs(const Grid& grid, double eps, bool dealias);
  State operator()(const State& U, const State& V) const;

 private:
  Field smooth(const Field& f) const;

  Grid grid_;
  bool mollified_;
  std::shared_ptr<const SpectralMultiplier> J_;
  SpectralMultiplier DJ_;   // d/dx J
  SpectralMultiplier KDJ_;  // K d/dx J
  SpectralMultiplier outer_;  // J, composed with the 2/3 projection when dealiasing
  bool outer_is_identity_;
};

// Bidirectional system in (eta, u).
class DirectRhs {
 public:
  DirectRhs(const Grid& grid, bool dealias);
  State operator()(const State& s) const;

 private:
  SpectralMultiplier D_;
  SpectralMultiplier KD_;
  SpectralMultiplier DP_;
  std::optional<SpectralMultiplier> P_;
};

// u_t = -K^{1/2} u_x - u u_x, state stored in `second`.
class UnidirectionalRhs {
 public:
  UnidirectionalRhs(const Grid& grid, bool dealias);
  State operator()(const State& s) const;

 private:
  SpectralMultiplier D_;
  SpectralMultiplier KsD_;
  std::optional<SpectralMultiplier> P_;
};

}  // namespace whitham::detail
