#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "whitham/solvers.hpp"

namespace whitham {

/// Per-iteration record of the Picard scheme U_{m+1} = solve_linearized(U0, V = U_m).
struct PicardDiagnostics {
  /// differences[m-1] = sup_t ||U_m - U_{m-1}||_{L2}, m = 1, 2, ...
  std::vector<double> differences;
  /// ratios[m-1] = differences[m-1] / differences[m-2]; NaN for m = 1 and wherever the
  /// previous difference is at most tol * 1e-3.
  std::vector<double> ratios;
  /// max_t E_N(t, U_m) for m = 1, 2, ...
  std::vector<double> energy_maxima;
  /// First time the coefficient iterate left the admissible set, per linear solve.
  std::vector<std::optional<double>> assumption_violations;
  bool converged = false;

  int iterations() const { return static_cast<int>(differences.size()); }
  /// Largest defined ratio from iteration `from` (1-based) onward; NaN if none is defined.
  double max_ratio_from(int from) const;
  std::optional<double> first_assumption_violation() const;
};

struct PicardResult {
  Trajectory trajectory;
  PicardDiagnostics diagnostics;
};

/// The iteration diverged, produced a non-finite iterate or hit max_iter.
class NonContractionError : public std::runtime_error {
 public:
  NonContractionError(const std::string& what, PicardDiagnostics diagnostics)
      : std::runtime_error(what), diagnostics_(std::move(diagnostics)) {}
  const PicardDiagnostics& diagnostics() const noexcept { return diagnostics_; }

 private:
  PicardDiagnostics diagnostics_;
};

/// Iterates from the constant-in-time seed U(t) = U0 until sup_t ||U_{m+1} - U_m|| < tol.
/// Coefficient iterates are evaluated between steps by cubic Hermite interpolation and
/// monitored (not enforced) against the admissible set. cfg.eps is ignored.
PicardResult picard_iterate(const State& U0, const SolveConfig& cfg);

}  // namespace whitham
