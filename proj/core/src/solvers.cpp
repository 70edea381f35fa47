#include "whitham/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rhs.hpp"
#include "whitham/errors.hpp"
#include "whitham/mollifier.hpp"
#include "whitham/operators.hpp"
#include "whitham/symmetrize.hpp"

namespace whitham {

void SolveConfig::validate() const {
  if (!(T > 0.0) || !std::isfinite(T)) throw std::invalid_argument("T must be positive");
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (dt > T) throw std::invalid_argument("dt must not exceed T");
  if (!(eps >= 0.0 && eps <= 1.0)) throw std::invalid_argument("eps must lie in [0, 1]");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (N < 2) throw std::invalid_argument("N must be >= 2");
  if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
  if (!(eta_bar > 0.0)) throw std::invalid_argument("eta_bar must be positive");
}

int SolveConfig::steps() const {
  // The 1e-12 slack keeps T/dt = 100.0000000001 from adding a step.
  return std::max(1, static_cast<int>(std::ceil(T / dt - 1e-12)));
}

double Trajectory::max_energy() const {
  double m = 0.0;
  for (const auto& e : energy_series) m = std::max(m, e.total);
  return m;
}

State Trajectory::at(double t) const {
  if (times.empty()) throw std::logic_error("empty trajectory");
  if (rates.size() != states.size()) throw std::logic_error("trajectory has no stored rates");
  if (t <= times.front()) return states.front();
  if (t >= times.back()) return states.back();
  const auto it = std::upper_bound(times.begin(), times.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - times.begin()) - 1;
  const double h = times[i + 1] - times[i];
  const double s = (t - times[i]) / h;
  const double s2 = s * s;
  const double s3 = s2 * s;
  State out = (2 * s3 - 3 * s2 + 1) * states[i];
  axpy(out, (s3 - 2 * s2 + s) * h, rates[i]);
  axpy(out, -2 * s3 + 3 * s2, states[i + 1]);
  axpy(out, (s3 - s2) * h, rates[i + 1]);
  return out;
}

double sup_l2_difference(const Trajectory& a, const Trajectory& b) {
  if (a.times.size() != b.times.size()) {
    throw std::invalid_argument("trajectories have different time grids");
  }
  double sup = 0.0;
  for (std::size_t i = 0; i < a.states.size(); ++i) {
    sup = std::max(sup, l2_norm(a.states[i] - b.states[i]));
  }
  return sup;
}

StateProvider constant_provider(State V) {
  return [V = std::move(V)](double) { return V; };
}

StateProvider trajectory_provider(std::shared_ptr<const Trajectory> trajectory) {
  if (!trajectory) throw std::invalid_argument("null trajectory");
  return [tr = std::move(trajectory)](double t) { return tr->at(t); };
}

namespace {

double slope_of(const Field& u) { return derivative(u, 1).max_abs(); }

// Fixed-step classical RK4. `f(t, y)` is the tendency; `observe(t, y)` runs on every
// accepted state (including the initial one) and may throw to stop the run.
template <class Rhs, class Observe>
Trajectory integrate(const State& U0, const SolveConfig& cfg, Rhs&& f, Observe&& observe) {
  Trajectory tr;
  tr.config = cfg;
  const int steps = cfg.steps();
  const double h = cfg.T / steps;
  tr.times.reserve(static_cast<std::size_t>(steps + 1));
  tr.states.reserve(static_cast<std::size_t>(steps + 1));
  tr.rates.reserve(static_cast<std::size_t>(steps + 1));

  State y = U0;
  double t = 0.0;
  observe(t, y, tr);
  tr.times.push_back(t);
  tr.states.push_back(y);
  for (int s = 0; s < steps; ++s) {
    State k1 = f(t, y);
    State tmp = y;
    axpy(tmp, 0.5 * h, k1);
    const State k2 = f(t + 0.5 * h, tmp);
    tmp = y;
    axpy(tmp, 0.5 * h, k2);
    const State k3 = f(t + 0.5 * h, tmp);
    tmp = y;
    axpy(tmp, h, k3);
    const State k4 = f(t + h, tmp);
    axpy(y, h / 6.0, k1);
    axpy(y, h / 3.0, k2);
    axpy(y, h / 3.0, k3);
    axpy(y, h / 6.0, k4);
    tr.rates.push_back(std::move(k1));

    const double t_next = (s + 1 == steps) ? cfg.T : (s + 1) * h;
    if (!y.all_finite()) {
      throw BlowUpError("non-finite state after t = " + std::to_string(t),
                        BlowUpReason::non_finite, t, tr.max_slope);
    }
    t = t_next;
    observe(t, y, tr);
    tr.times.push_back(t);
    tr.states.push_back(y);
  }
  tr.rates.push_back(f(t, y));
  return tr;
}

void record_energy(Trajectory& tr, const State& y, double t) {
  tr.energy_series.push_back(energy_of(y, tr.config.N, t));
  const double e = tr.energy_series.back().total;
  const double e0 = tr.energy_series.front().total;
  if (!tr.energy_bound_violation_time && e > 2.0 * e0 * (1.0 + 1e-12) + 1e-300) {
    tr.energy_bound_violation_time = t;
  }
}

Trajectory solve_linear(const State& U0, const StateProvider& V, const SolveConfig& cfg,
                        MonitorPolicy policy) {
  if (U0.representation != Representation::symmetric) {
    throw std::invalid_argument("linear solves need U0 in symmetric variables");
  }
  if (!V) throw std::invalid_argument("empty coefficient provider");
  const Admissibility adm = admissible_mu(U0.first, U0.eta_bar);
  const double e_limit = 2.0 * total_energy(U0, cfg.N).total;
  const detail::RegularizedRhs rhs(U0.grid(), cfg.eps, cfg.dealias);

  auto check_coefficients = [&](double t, const State& v, Trajectory& tr) {
    std::string reason;
    const double ev = total_energy(v, cfg.N).total;
    if (ev > e_limit * (1.0 + 1e-12) + 1e-300) {
      reason = "E_N(V) = " + std::to_string(ev) + " exceeds 2 E_N(U0) = " + std::to_string(e_limit);
    } else {
      const Field w = v.first + 2.0 * v.lambda_bar();
      if (w.min() < adm.mu || w.max() > 1.0 / adm.mu) {
        reason = "zeta_V + 2*lambda_bar leaves [mu, 1/mu]";
      }
    }
    if (reason.empty()) return;
    if (policy == MonitorPolicy::strict) {
      throw AssumptionViolated(reason + " at t = " + std::to_string(t), t);
    }
    if (!tr.assumption_violation_time) tr.assumption_violation_time = t;
  };

  auto observe = [&](double t, const State& y, Trajectory& tr) {
    check_coefficients(t, V(t), tr);
    record_energy(tr, y, t);
  };
  auto f = [&](double t, const State& y) { return rhs(y, V(t)); };
  return integrate(U0, cfg, f, observe);
}

}  // namespace

Trajectory solve_regularized(const State& U0, const StateProvider& V, const SolveConfig& cfg,
                             MonitorPolicy policy) {
  cfg.validate();
  if (!(cfg.eps > 0.0)) throw std::invalid_argument("solve_regularized needs eps > 0");
  return solve_linear(U0, V, cfg, policy);
}

Trajectory solve_linearized(const State& U0, const StateProvider& V, const SolveConfig& cfg,
                            MonitorPolicy policy) {
  cfg.validate();
  if (cfg.eps != 0.0) throw std::invalid_argument("solve_linearized needs eps == 0");
  return solve_linear(U0, V, cfg, policy);
}

Trajectory solve_direct(const Field& eta0, const Field& u0, const SolveConfig& cfg) {
  cfg.validate();
  if (!(eta0.grid() == u0.grid())) throw std::invalid_argument("eta0 and u0 grids differ");
  if (!(eta0.min() > 0.0)) {
    throw AdmissibilityError("solve_direct needs inf eta0 > 0, got " + std::to_string(eta0.min()));
  }
  const double mu = admissible_mu(to_symmetric(eta0, cfg.eta_bar), cfg.eta_bar).mu;
  const State start(eta0, u0, Representation::physical, cfg.eta_bar);
  const detail::DirectRhs rhs(eta0.grid(), cfg.dealias);

  double last_time = 0.0;
  auto observe = [&](double t, const State& y, Trajectory& tr) {
    const double floor_value = 2.0 * std::sqrt(std::max(y.first.min(), 0.0));
    if (floor_value <= mu) {
      throw BlowUpError("2 sqrt(eta) fell to the admissibility floor mu = " + std::to_string(mu) +
                            " at t = " + std::to_string(t),
                        BlowUpReason::admissibility_floor, last_time, tr.max_slope);
    }
    tr.max_slope = std::max(tr.max_slope, slope_of(y.second));
    record_energy(tr, y, t);
    last_time = t;
  };
  auto f = [&](double, const State& y) { return rhs(y); };
  return integrate(start, cfg, f, observe);
}

Trajectory solve_unidirectional(const Field& u0, const SolveConfig& cfg) {
  cfg.validate();
  const State start(Field(u0.grid()), u0, Representation::unidirectional, cfg.eta_bar);
  const detail::UnidirectionalRhs rhs(u0.grid(), cfg.dealias);
  auto observe = [&](double t, const State& y, Trajectory& tr) {
    tr.max_slope = std::max(tr.max_slope, slope_of(y.second));
    record_energy(tr, y, t);
  };
  auto f = [&](double, const State& y) { return rhs(y); };
  return integrate(start, cfg, f, observe);
}

double hamiltonian(const State& physical) {
  if (physical.representation != Representation::physical) {
    throw std::invalid_argument("hamiltonian needs (eta, u)");
  }
  const Field& eta = physical.first;
  const Field& u = physical.second;
  const Field ku = apply_K(u);
  double sum = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    sum += 0.5 * u[j] * ku[j] + 0.5 * eta[j] * eta[j] + 0.5 * eta[j] * u[j] * u[j];
  }
  return sum * physical.grid().spacing();
}

double cfl_time_step(const State& s, double cfl) {
  if (!(cfl > 0.0)) throw std::invalid_argument("cfl must be positive");
  double speed = s.second.max_abs();
  switch (s.representation) {
    case Representation::physical:
      speed += std::sqrt(std::max(s.first.max(), 0.0));
      break;
    case Representation::symmetric:
      speed += std::max(0.5 * (s.first + 2.0 * s.lambda_bar()).max(), 0.0);
      break;
    case Representation::unidirectional:
      speed += 1.0;  // sqrt(tanh(xi)/xi) <= 1
      break;
  }
  if (!(speed > 0.0)) speed = 1.0;
  return cfl * s.grid().spacing() / speed;
}

double energy_rate_leibniz(const State& U, const State& V, double eps, int k) {
  if (k < 0) throw std::invalid_argument("derivative order must be non-negative");
  if (U.representation != Representation::symmetric ||
      V.representation != Representation::symmetric) {
    throw std::invalid_argument("energy_rate_leibniz needs symmetric states");
  }
  const Grid& g = U.grid();
  auto J = [&](const Field& f) { return eps > 0.0 ? mollify(f, eps) : f; };
  const Field w = V.first + 2.0 * V.lambda_bar();
  if (!(w.min() > 0.0)) throw DomainError("coefficient state has zeta + 2*lambda_bar <= 0", -1);

  const Field a_d = J(V.second);
  const Field a_o = J(0.5 * w);
  const Field b = J(w.map([](double v) { return 2.0 / v; }));
  const Field jz = J(U.first);
  const Field ju = J(U.second);
  const Field xz = derivative(jz, k);
  const Field xu = derivative(ju, k);

  double total = 0.0;
  double binom = 1.0;
  for (int j = 0; j <= k; ++j) {
    const Field ad_j = derivative(a_d, j);
    const Field ao_j = derivative(a_o, j);
    const Field b_j = derivative(b, j);
    const Field dz = derivative(jz, k - j + 1);
    const Field du = derivative(ju, k - j + 1);
    const Field kdu = apply_K(du);
    double sum = 0.0;
    for (std::size_t i = 0; i < xz.size(); ++i) {
      sum += xz[i] * (ad_j[i] * dz[i] + ao_j[i] * du[i] + b_j[i] * kdu[i]) +
             xu[i] * (ao_j[i] * dz[i] + ad_j[i] * du[i]);
    }
    total -= binom * sum;
    binom = binom * (k - j) / (j + 1);
  }
  return total * g.spacing();
}

ProbeReport continuous_dependence_probe(const State& U0, const std::vector<double>& deltas,
                                        const SolveConfig& cfg, std::optional<State> direction) {
  cfg.validate();
  if (U0.representation != Representation::symmetric) {
    throw std::invalid_argument("continuous_dependence_probe needs symmetric data");
  }
  const Grid& g = U0.grid();
  const double kappa = kTwoPi / g.period();
  State p = direction.value_or(State(Field::from_function(g, [&](double x) { return std::cos(kappa * x); }),
                                     Field::from_function(g, [&](double x) { return std::sin(2 * kappa * x); }),
                                     Representation::symmetric, U0.eta_bar));
  const double pn = std::hypot(sobolev_norm(p.first, cfg.N), sobolev_norm(p.second, cfg.N));
  if (!(pn > 0.0)) throw std::invalid_argument("perturbation direction must be non-zero");
  p *= 1.0 / pn;

  SolveConfig run = cfg;
  run.eta_bar = U0.eta_bar;
  const Trajectory base = solve_direct(from_symmetric(U0.first, U0.eta_bar), U0.second, run);
  const State base_end = to_symmetric(base.final_state());

  ProbeReport report;
  std::vector<double> xs;
  std::vector<double> ys;
  for (double delta : deltas) {
    ProbeEntry e;
    e.delta = delta;
    State data = U0;
    axpy(data, delta, p);
    try {
      admissible_mu(data.first, data.eta_bar);
      const Trajectory tr = solve_direct(from_symmetric(data.first, data.eta_bar), data.second, run);
      const State diff = to_symmetric(tr.final_state()) - base_end;
      e.difference = std::hypot(sobolev_norm(diff.first, cfg.N), sobolev_norm(diff.second, cfg.N));
    } catch (const AdmissibilityError& ex) {
      e.skipped = true;
      e.note = std::string("perturbed data not admissible: ") + ex.what();
    } catch (const BlowUpError& ex) {
      e.skipped = true;
      e.note = std::string("perturbed run blew up: ") + ex.what();
    }
    if (!e.skipped && delta > 0.0 && e.difference > 0.0) {
      xs.push_back(delta);
      ys.push_back(e.difference);
    }
    report.entries.push_back(std::move(e));
  }
  if (xs.size() >= 2) report.fit = fit_loglog(xs, ys);
  return report;
}

}  // namespace whitham
