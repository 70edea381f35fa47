#include "whitham/picard.hpp"

#include <cmath>
#include <limits>
#include <memory>

#include "whitham/errors.hpp"

namespace whitham {

double PicardDiagnostics::max_ratio_from(int from) const {
  double best = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = static_cast<std::size_t>(std::max(from, 1) - 1); i < ratios.size(); ++i) {
    if (std::isnan(ratios[i])) continue;
    best = std::isnan(best) ? ratios[i] : std::max(best, ratios[i]);
  }
  return best;
}

std::optional<double> PicardDiagnostics::first_assumption_violation() const {
  for (const auto& v : assumption_violations) {
    if (v) return v;
  }
  return std::nullopt;
}

PicardResult picard_iterate(const State& U0, const SolveConfig& cfg) {
  SolveConfig lin = cfg;
  lin.eps = 0.0;
  lin.validate();
  if (U0.representation != Representation::symmetric) {
    throw std::invalid_argument("picard_iterate needs U0 in symmetric variables");
  }

  PicardDiagnostics diag;
  StateProvider V = constant_provider(U0);
  std::shared_ptr<const Trajectory> previous;

  for (int m = 1; m <= lin.max_iter; ++m) {
    std::shared_ptr<const Trajectory> current;
    try {
      current = std::make_shared<const Trajectory>(
          solve_linearized(U0, V, lin, MonitorPolicy::record));
    } catch (const BlowUpError& e) {
      throw NonContractionError(std::string("iterate ") + std::to_string(m) + " blew up: " + e.what(),
                                diag);
    } catch (const DomainError& e) {
      throw NonContractionError(std::string("iterate ") + std::to_string(m) +
                                    " left the domain of B: " + e.what(),
                                diag);
    }

    double diff = 0.0;
    if (previous) {
      diff = sup_l2_difference(*current, *previous);
    } else {
      for (const State& s : current->states) diff = std::max(diff, l2_norm(s - U0));
    }
    double ratio = std::numeric_limits<double>::quiet_NaN();
    if (!diag.differences.empty() && diag.differences.back() > lin.tol * 1e-3) {
      ratio = diff / diag.differences.back();
    }
    diag.differences.push_back(diff);
    diag.ratios.push_back(ratio);
    diag.energy_maxima.push_back(current->max_energy());
    diag.assumption_violations.push_back(current->assumption_violation_time);

    if (!std::isfinite(diff)) throw NonContractionError("non-finite Picard difference", diag);
    if (diff < lin.tol) {
      diag.converged = true;
      return PicardResult{*current, std::move(diag)};
    }
    previous = current;
    V = trajectory_provider(current);
  }
  throw NonContractionError("no convergence within max_iter = " + std::to_string(lin.max_iter),
                            diag);
}

}  // namespace whitham
