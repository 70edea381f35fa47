#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "whitham/energy.hpp"
#include "whitham/fit.hpp"
#include "whitham/harness/experiments.hpp"
#include "whitham/harness/initial_data.hpp"
#include "whitham/mollifier.hpp"
#include "whitham/operators.hpp"

namespace whitham::harness {
namespace {

std::vector<double> default_eps_lattice() {
  std::vector<double> eps;
  for (int k = 3; k <= 10; ++k) eps.push_back(std::ldexp(1.0, -k));
  return eps;
}

std::string fmt(double v) { return format_short(v); }

// Slope of log(values) against log(eps).
double log_trend(const std::vector<double>& eps, const std::vector<double>& values) {
  std::vector<double> x;
  std::vector<double> y;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    x.push_back(std::log(eps[i]));
    y.push_back(std::log(values[i]));
  }
  return fit_line(x, y).slope;
}

// A Gaussian wave packet in Fourier space, centred at mode m0 with width w and
// random phases.
Spectrum wave_packet(const Grid& grid, double m0, double w, Rng& rng) {
  Spectrum s(grid);
  auto half = s.half();
  for (int m = 1; m < grid.nyquist(); ++m) {
    const double z = (m - m0) / w;
    const double amp = std::exp(-z * z);
    if (amp < 1e-30) continue;
    const double phase = kTwoPi * rng.uniform();
    half[m] = std::polar(amp, phase);
  }
  return s;
}

Spectrum apply_copy(const SpectralMultiplier& m, Spectrum s) {
  m.apply_in_place(s);
  return s;
}

}  // namespace

ExperimentReport dispersion_check(const DispersionParams& p) {
  ExperimentReport r;
  const Grid grid(p.n);

  // Multiplier exactness on single modes.
  double worst = 0.0;
  CsvTable modes{"multiplier_modes", {"m", "symbol", "max_error"}, {}};
  for (int m = 0; m <= grid.dealias_cutoff(); ++m) {
    const double sym = whitham_symbol(grid.wavenumber(m));
    double err = 0.0;
    for (int part = 0; part < 2; ++part) {
      const Field f = Field::from_function(
          grid, [&](double x) { return part == 0 ? std::cos(m * x) : std::sin(m * x); });
      err = std::max(err, max_abs_difference(apply_K(f), sym * f));
    }
    worst = std::max(worst, err);
    modes.add_row({double(m), sym, err});
  }
  r.tables.push_back(std::move(modes));
  r.metrics["multiplier_max_error"] = worst;
  r.check("multiplier exactness on e^{imx}, |m| <= n/3", "max error <= " + fmt(p.multiplier_tol),
          worst, worst <= p.multiplier_tol);

  // Convolution with the truncated periodic kernel against the multiplier.
  const int L = p.kernel_fine_points;
  if (L % p.n != 0) throw std::invalid_argument("kernel_fine_points must be a multiple of n");
  const Grid fine(L);
  std::vector<double> kernel(static_cast<std::size_t>(L));
  for (int j = 0; j < L; ++j) kernel[j] = periodic_kernel_Kp(fine.point(j), p.kernel_truncation);
  const int stride = L / p.n;
  Rng rng(p.seed);
  double kernel_worst = 0.0;
  CsvTable conv{"kernel_convolution", {"field", "max_error"}, {}};
  for (int fidx = 0; fidx < p.kernel_fields; ++fidx) {
    const Field f_fine = random_bandlimited(fine, grid.dealias_cutoff(), rng);
    Field f(grid);
    for (int i = 0; i < p.n; ++i) f[i] = f_fine[i * stride];
    const Field kf = apply_K(f);
    double err = 0.0;
    for (int i = 0; i < p.n; ++i) {
      double sum = 0.0;
      for (int j = 0; j < L; ++j) {
        const int d = ((i * stride - j) % L + L) % L;
        sum += kernel[d] * f_fine[j];
      }
      err = std::max(err, std::abs(sum / L - kf[i]));
    }
    kernel_worst = std::max(kernel_worst, err);
    conv.add_row({double(fidx), err});
  }
  r.tables.push_back(std::move(conv));
  r.metrics["kernel_max_error"] = kernel_worst;
  r.check("kernel convolution (M = " + std::to_string(p.kernel_truncation) + ") vs apply_K",
          "max error <= " + fmt(p.kernel_tol), kernel_worst, kernel_worst <= p.kernel_tol);

  // Linear phase speed of the unidirectional equation.
  double phase_worst = 0.0;
  CsvTable phase{"unidirectional_phase", {"m", "phase_speed", "relative_error"}, {}};
  for (int m : {1, 4, 16}) {
    const double a = p.phase_amplitude;
    const Field u0 = Field::from_function(grid, [&](double x) { return a * std::cos(m * x); });
    SolveConfig cfg;
    cfg.T = p.phase_T;
    cfg.dt = p.phase_dt;
    const Trajectory tr = solve_unidirectional(u0, cfg);
    const double xi = grid.wavenumber(m);
    const double c = whitham_sqrt_symbol(xi);
    const Field exact =
        Field::from_function(grid, [&](double x) { return a * std::cos(m * (x - c * p.phase_T)); });
    const double err = max_abs_difference(tr.final_state().second, exact) / a;
    phase_worst = std::max(phase_worst, err);
    phase.add_row({double(m), c, err});
  }
  r.tables.push_back(std::move(phase));
  r.metrics["phase_relative_error"] = phase_worst;
  r.check("unidirectional linear phase speed sqrt(tanh(xi)/xi)",
          "relative error <= " + fmt(p.phase_tol), phase_worst, phase_worst <= p.phase_tol);
  r.headline = "kernel_max_error";
  return r;
}

ExperimentReport mollifier_lemma(const MollifierParams& p) {
  ExperimentReport r;
  const Grid grid(p.n);
  const std::vector<double> eps = p.eps.empty() ? default_eps_lattice() : p.eps;
  const std::size_t ne = eps.size();
  if (ne < 2) throw std::invalid_argument("mollifier lemma needs at least two eps values");
  const int K = p.k_max + 1;
  const int Lm = p.l_max + 1;

  std::vector<std::shared_ptr<const SpectralMultiplier>> J;
  for (double e : eps) J.push_back(Mollifier::standard().multiplier(grid, e));
  const SpectralMultiplier D = SpectralMultiplier::derivative(grid, 1);

  // sup over fields of each ratio, per eps.
  std::vector<double> s1(static_cast<std::size_t>(ne * K * Lm), 0.0);
  std::vector<double> s2(static_cast<std::size_t>(ne * K), 0.0);
  auto at1 = [&](std::size_t e, int k, int l) -> double& { return s1[(e * K + k) * Lm + l]; };
  auto at2 = [&](std::size_t e, int k) -> double& { return s2[e * K + k]; };

  Rng rng(p.seed);
  const double log_top = std::log(p.n / 4.0);
  for (int f = 0; f < p.fields; ++f) {
    const double m0 = std::exp(log_top * rng.uniform());
    const double width = std::max(1.0, 0.25 * m0);
    const Spectrum fs = wave_packet(grid, m0, width, rng);
    const Spectrum dfs = apply_copy(D, fs);
    std::vector<double> base(K);
    std::vector<double> dbase(K);
    for (int k = 0; k < K; ++k) {
      base[k] = sobolev_norm(fs, k);
      dbase[k] = sobolev_norm(dfs, k);
    }
    std::vector<Spectrum> jf;
    for (std::size_t e = 0; e < ne; ++e) {
      jf.push_back(apply_copy(*J[e], fs));
      for (int k = 0; k < K; ++k) {
        for (int l = 0; l < Lm; ++l) {
          const double ratio = sobolev_norm(jf[e], k + l) / (std::pow(eps[e], -l) * base[k]);
          at1(e, k, l) = std::max(at1(e, k, l), ratio);
        }
      }
    }
    for (std::size_t a = 0; a < ne; ++a) {
      for (std::size_t b = a + 1; b < ne; ++b) {
        Spectrum diff = jf[a];
        auto h = diff.half();
        const auto hb = jf[b].half();
        for (std::size_t m = 0; m < h.size(); ++m) h[m] -= hb[m];
        const double de = std::abs(eps[a] - eps[b]);
        for (int k = 0; k < K; ++k) {
          const double ratio = sobolev_norm(diff, k) / (de * dbase[k]);
          at2(a, k) = std::max(at2(a, k), ratio);
          at2(b, k) = std::max(at2(b, k), ratio);
        }
      }
    }
  }

  CsvTable t1{"smoothing_ratios", {"eps", "k", "l", "sup_ratio"}, {}};
  CsvTable t2{"difference_ratios", {"eps", "k", "sup_ratio"}, {}};
  double worst_slope = 0.0;
  for (int k = 0; k < K; ++k) {
    for (int l = 0; l < Lm; ++l) {
      std::vector<double> v(ne);
      for (std::size_t e = 0; e < ne; ++e) {
        v[e] = at1(e, k, l);
        t1.add_row({eps[e], double(k), double(l), v[e]});
      }
      const double slope = log_trend(eps, v);
      const std::string tag = "k=" + std::to_string(k) + ",l=" + std::to_string(l);
      r.constants["C_smoothing_" + tag] = *std::max_element(v.begin(), v.end());
      r.metrics["trend_smoothing_" + tag] = slope;
      worst_slope = std::max(worst_slope, std::abs(slope));
    }
    std::vector<double> v(ne);
    for (std::size_t e = 0; e < ne; ++e) {
      v[e] = at2(e, k);
      t2.add_row({eps[e], double(k), v[e]});
    }
    const double slope = log_trend(eps, v);
    const std::string tag = "k=" + std::to_string(k);
    r.constants["C_difference_" + tag] = *std::max_element(v.begin(), v.end());
    r.metrics["trend_difference_" + tag] = slope;
    worst_slope = std::max(worst_slope, std::abs(slope));
  }
  r.tables.push_back(std::move(t1));
  r.tables.push_back(std::move(t2));

  bool finite = true;
  for (const auto& [name, c] : r.constants) finite = finite && std::isfinite(c) && c > 0.0;
  r.metrics["max_abs_trend"] = worst_slope;
  r.check("mollifier constants finite and positive", "all fitted constants finite", finite ? 1.0 : 0.0,
          finite);
  r.check("no eps trend in the sup-ratios", "|slope of log sup-ratio vs log eps| <= " + fmt(p.slope_tol),
          worst_slope, worst_slope <= p.slope_tol);
  r.headline = "max_abs_trend";
  return r;
}

ExperimentReport inequality_suite(const InequalityParams& p) {
  ExperimentReport r;
  if (p.ns.empty()) throw std::invalid_argument("inequality suite needs grid sizes");
  const int K = p.k_max + 1;
  std::vector<std::vector<double>> tame(p.ns.size(), std::vector<double>(K, 0.0));
  std::vector<double> interp(p.ns.size(), 0.0);
  std::vector<double> sobolev(p.ns.size(), 0.0);
  double endpoint_error = 0.0;
  double energy_lo = std::numeric_limits<double>::infinity();
  double energy_hi = 0.0;
  bool all_defined = true;
  double worst_energy_violation = 0.0;

  for (std::size_t gi = 0; gi < p.ns.size(); ++gi) {
    const Grid grid(p.ns[gi]);
    for (int i = 0; i < p.pairs; ++i) {
      Rng rng(p.seed + static_cast<std::uint64_t>(i));
      const Field f = random_bandlimited(grid, p.cutoff, rng, 0.5);
      const Field g = random_bandlimited(grid, p.cutoff, rng, 0.5);
      for (int k = 0; k < K; ++k) {
        const RatioReport t = check_tame_product(f, g, k);
        all_defined = all_defined && t.defined;
        if (t.defined) tame[gi][k] = std::max(tame[gi][k], t.ratio);
        for (int l = 0; l <= k && k > 0; ++l) {
          const RatioReport q = check_interpolation(f, l, k);
          all_defined = all_defined && q.defined;
          if (!q.defined) continue;
          if (l == 0 || l == k) endpoint_error = std::max(endpoint_error, std::abs(q.ratio - 1.0));
          else interp[gi] = std::max(interp[gi], q.ratio);
        }
      }
      for (double s : {0.5, 1.0, 1.5}) {
        const RatioReport q = check_sobolev_interpolation(g, s, 2.0);
        if (q.defined) sobolev[gi] = std::max(sobolev[gi], q.ratio);
      }
      const State U(f, g, Representation::symmetric, 1.0);
      for (int N = 2; N <= p.k_max; ++N) {
        const double e = total_energy(U, N).total;
        const double h = std::pow(sobolev_norm(f, N), 2) + std::pow(sobolev_norm(g, N), 2);
        const double q = e / h;
        energy_lo = std::min(energy_lo, q);
        energy_hi = std::max(energy_hi, q);
        if (q < std::pow(2.0, -N)) worst_energy_violation = std::max(worst_energy_violation, std::pow(2.0, -N) - q);
        if (q > N + 1) worst_energy_violation = std::max(worst_energy_violation, q - (N + 1));
      }
    }
  }

  CsvTable table{"inequality_ratios", {"n", "k", "max_tame_ratio", "max_interpolation_ratio",
                                       "max_sobolev_interpolation_ratio"}, {}};
  double spread = 0.0;
  double tame_max = 0.0;
  for (std::size_t gi = 0; gi < p.ns.size(); ++gi) {
    for (int k = 0; k < K; ++k) {
      table.add_row({double(p.ns[gi]), double(k), tame[gi][k], interp[gi], sobolev[gi]});
      tame_max = std::max(tame_max, tame[gi][k]);
      const double rel = std::abs(tame[gi][k] - tame[0][k]) / tame[0][k];
      spread = std::max(spread, rel);
    }
    spread = std::max(spread, std::abs(interp[gi] - interp[0]) / interp[0]);
    spread = std::max(spread, std::abs(sobolev[gi] - sobolev[0]) / sobolev[0]);
  }
  r.tables.push_back(std::move(table));
  const double interp_max = *std::max_element(interp.begin(), interp.end());
  const double sobolev_max = *std::max_element(sobolev.begin(), sobolev.end());
  r.constants["C_tame"] = tame_max;
  r.constants["C_interpolation"] = interp_max;
  r.constants["C_sobolev_interpolation"] = sobolev_max;
  r.metrics["refinement_spread"] = spread;
  r.metrics["endpoint_error"] = endpoint_error;
  r.metrics["energy_equivalence_min"] = energy_lo;
  r.metrics["energy_equivalence_max"] = energy_hi;

  r.check("all ratios defined", "no vanishing denominators", all_defined ? 1.0 : 0.0, all_defined);
  r.check("tame/interpolation ratios bounded under refinement",
          "relative spread of max ratios over n <= " + fmt(p.refinement_tol), spread,
          std::isfinite(tame_max) && spread <= p.refinement_tol);
  r.check("interpolation endpoints l = 0 and l = k", "|ratio - 1| <= " + fmt(p.endpoint_tol),
          endpoint_error, endpoint_error <= p.endpoint_tol);
  r.check("interior interpolation ratios", "<= 1 + 1e-12", std::max(interp_max, sobolev_max),
          std::max(interp_max, sobolev_max) <= 1.0 + 1e-12);
  r.check("E_N equivalent to the H^N norm squared", "ratio within [2^-N, N + 1]",
          worst_energy_violation, worst_energy_violation == 0.0);
  r.headline = "refinement_spread";
  return r;
}

}  // namespace whitham::harness
