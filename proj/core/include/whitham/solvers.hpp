#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "whitham/energy.hpp"
#include "whitham/fit.hpp"
#include "whitham/state.hpp"

namespace whitham {

/// Parameters of one time integration.
struct SolveConfig {
  double T = 1.0;         ///< time horizon
  double dt = 0.01;       ///< nominal step; the run uses T / ceil(T / dt)
  int N = 2;              ///< energy index, >= 2
  double eps = 0.0;       ///< mollification parameter, 0 disables J_eps
  double eta_bar = 1.0;   ///< background elevation
  bool dealias = true;    ///< 2/3-rule projection of products
  double tol = 1e-10;     ///< Picard stopping tolerance on sup_t ||U_{m+1} - U_m||
  int max_iter = 50;      ///< Picard iteration cap

  /// Throws std::invalid_argument on T <= 0, dt <= 0, dt > T, eps outside [0, 1],
  /// tol <= 0, N < 2 or max_iter < 1.
  void validate() const;
  int steps() const;
};

/// Solution history on [0, T] at every time step.
struct Trajectory {
  std::vector<double> times;
  std::vector<State> states;
  /// dU/dt at each stored time; used for cubic Hermite dense output.
  std::vector<State> rates;
  SolveConfig config;
  std::vector<EnergyReport> energy_series;

  /// First time the coefficient state left the admissible set (linear solves).
  std::optional<double> assumption_violation_time;
  /// First time E_N(t) exceeded 2 E_N(0).
  std::optional<double> energy_bound_violation_time;
  /// max over stored times of max_x |d/dx u|.
  double max_slope = 0.0;

  const State& initial_state() const { return states.front(); }
  const State& final_state() const { return states.back(); }
  double max_energy() const;

  /// Cubic Hermite interpolation between stored states; needs `rates`.
  State at(double t) const;
};

/// sup over common stored times of ||a(t) - b(t)||_{L2}. Both runs must share the time grid.
double sup_l2_difference(const Trajectory& a, const Trajectory& b);

/// Time-indexed coefficient state V(t) for the linearised and regularised problems.
using StateProvider = std::function<State(double)>;

StateProvider constant_provider(State V);
StateProvider trajectory_provider(std::shared_ptr<const Trajectory> trajectory);

enum class MonitorPolicy {
  strict,  ///< throw AssumptionViolated on the first violation
  record,  ///< note the first violation time in the trajectory and keep going
};

/// Tendency of the regularised linear problem in symmetric variables:
///   -J[J(A(V)) d/dx (J U)] - J[J(B(V)) K d/dx (J U)],
/// with J = identity when eps == 0. Products are formed pointwise and, when
/// `dealias` is set, projected with the 2/3 rule.
State rhs_regularized(const State& U, const State& V, double eps, bool dealias = true);

/// Classical RK4 for the regularised problem; needs cfg.eps > 0.
Trajectory solve_regularized(const State& U0, const StateProvider& V, const SolveConfig& cfg,
                             MonitorPolicy policy = MonitorPolicy::strict);

/// The linearised problem d_t U + A(V) U_x + B(V) K U_x = 0; needs cfg.eps == 0.
Trajectory solve_linearized(const State& U0, const StateProvider& V, const SolveConfig& cfg,
                            MonitorPolicy policy = MonitorPolicy::strict);

/// Pseudo-spectral method of lines for the bidirectional system in (eta, u):
///   eta_t = -K u_x - (eta u)_x,  u_t = -eta_x - u u_x.
/// Throws BlowUpError on non-finite samples or when 2 sqrt(eta) falls to mu.
Trajectory solve_direct(const Field& eta0, const Field& u0, const SolveConfig& cfg);

/// u_t + K^{1/2} u_x + u u_x = 0.
Trajectory solve_unidirectional(const Field& u0, const SolveConfig& cfg);

/// H(eta, u) = \int (u K u / 2 + eta^2 / 2 + eta u^2 / 2) dx for a physical state.
double hamiltonian(const State& physical);

/// dt = cfl * dx / (max|u| + max sqrt(eta)), the advective step bound.
double cfl_time_step(const State& s, double cfl);

/// Right-hand side of (1/2) dE^(k)/dt for the regularised problem, assembled term by
/// term from the Leibniz expansion of d^k [J(A) d/dx J U] and d^k [J(B) K d/dx J U].
/// Products are not dealiased, matching rhs_regularized(..., dealias = false).
double energy_rate_leibniz(const State& U, const State& V, double eps, int k);

struct ProbeEntry {
  double delta = 0.0;
  double difference = 0.0;  ///< ||U_delta(T) - U(T)||_{H^N} in symmetric variables
  bool skipped = false;
  std::string note;
};

struct ProbeReport {
  std::vector<ProbeEntry> entries;
  std::optional<LineFit> fit;  ///< log-log fit over non-skipped, non-zero deltas
};

/// Perturb the symmetric data (zeta0, u0) by delta * p with ||p||_{H^N} = 1, solve
/// directly with eta_bar held fixed, and compare terminal states in H^N.
/// `direction` defaults to a fixed smooth pair of low modes.
ProbeReport continuous_dependence_probe(const State& U0, const std::vector<double>& deltas,
                                        const SolveConfig& cfg,
                                        std::optional<State> direction = std::nullopt);

}  // namespace whitham
