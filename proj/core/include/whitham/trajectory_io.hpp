#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "whitham/solvers.hpp"

namespace whitham {

/// CSV with one row per stored time: time, then E^(0..N) of the first field and
/// E^(0..N) of the second field, each E^(k) = ||d^k f||^2. 17 significant digits.
void write_trajectory_csv(std::ostream& out, const Trajectory& tr);

/// One EnergyReport row per stored time, preceded by the header.
void write_energy_csv(std::ostream& out, const Trajectory& tr);

/// Binary dump: header of five little-endian 8-byte words
///   n (uint64), period (f64), N (uint64), representation tag (uint64), eta_bar (f64)
/// followed, per stored time, by n samples of the first field (zeta or eta) and n
/// samples of u, all little-endian f64. Times are not stored; they are in the CSV.
void write_binary_dump(std::ostream& out, const Trajectory& tr);

struct DumpContents {
  std::uint64_t n = 0;
  double period = 0.0;
  std::uint64_t N = 0;
  Representation representation = Representation::symmetric;
  double eta_bar = 1.0;
  std::vector<State> states;
};

/// Inverse of write_binary_dump. Throws std::runtime_error on a truncated or malformed stream.
DumpContents read_binary_dump(std::istream& in);

std::uint64_t representation_tag(Representation r);

}  // namespace whitham
