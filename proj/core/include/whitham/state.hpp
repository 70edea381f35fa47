#pragma once

#include <string_view>

#include "whitham/field.hpp"

namespace whitham {

enum class Representation {
  symmetric,       ///< (zeta, u) with zeta = 2 (sqrt(eta) - sqrt(eta_bar))
  physical,        ///< (eta, u)
  unidirectional,  ///< single field u stored in `second`; `first` is identically zero
};

std::string_view to_string(Representation r);
Representation representation_from_string(std::string_view s);

/// A pair of fields on one grid, tagged with its variables and the background eta_bar.
struct State {
  Field first;
  Field second;
  Representation representation = Representation::symmetric;
  double eta_bar = 1.0;

  State(Field first_, Field second_, Representation rep, double eta_bar_);

  const Grid& grid() const noexcept { return first.grid(); }
  double lambda_bar() const;

  bool all_finite() const { return first.all_finite() && second.all_finite(); }

  State& operator+=(const State& o);
  State& operator*=(double s);
  friend State operator+(State a, const State& b) { return a += b; }
  friend State operator-(State a, const State& b) {
    axpy(a.first, -1.0, b.first);
    axpy(a.second, -1.0, b.second);
    return a;
  }
  friend State operator*(double s, State a) { return a *= s; }
};

/// a += s * b on both components.
void axpy(State& a, double s, const State& b);

/// L2 norm of the pair: sqrt(||first||^2 + ||second||^2), with ||f||^2 = \int f^2 dx.
double l2_norm(const State& s);

/// Zero state on a grid with the given tag.
State zero_state(const Grid& grid, Representation rep, double eta_bar);

}  // namespace whitham
