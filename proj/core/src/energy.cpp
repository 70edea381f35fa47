#include "whitham/energy.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "whitham/symmetrize.hpp"

namespace whitham {
namespace {

double derivative_power(const Spectrum& s, int k) {
  if (k < 0) throw std::invalid_argument("derivative order must be non-negative");
  const Grid& g = s.grid();
  const int nyq = g.nyquist();
  const auto half = s.half();
  double total = (k == 0) ? std::norm(half[0]) : 0.0;
  for (int m = 1; m < nyq; ++m) total += 2.0 * std::pow(g.wavenumber(m), 2 * k) * std::norm(half[m]);
  if (k % 2 == 0) total += std::pow(g.wavenumber(nyq), 2 * k) * std::norm(half[nyq]);
  return total * g.period();
}

void append_number(std::string& out, double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  out.append(buf, ptr);
}

RatioReport make_ratio(double num, double den) {
  RatioReport r;
  r.numerator = num;
  r.denominator = den;
  r.defined = den > 0.0;
  r.ratio = r.defined ? num / den : 0.0;
  return r;
}

}  // namespace

double sobolev_norm(const Spectrum& f, double s) {
  const double power =
      weighted_power(f, [s](double xi) { return std::pow(1.0 + xi * xi, s); });
  return std::sqrt(power * f.grid().period());
}

double sobolev_norm(const Field& f, double s) { return sobolev_norm(forward_transform(f), s); }

double derivative_l2_norm(const Field& f, int k) {
  return std::sqrt(derivative_power(forward_transform(f), k));
}

std::string EnergyReport::csv_header(int N) {
  std::string h = "time";
  for (int k = 0; k <= N; ++k) h += ",E" + std::to_string(k);
  h += ",total";
  return h;
}

std::string EnergyReport::csv_row() const {
  std::string row;
  append_number(row, time);
  for (double e : per_k) {
    row += ',';
    append_number(row, e);
  }
  row += ',';
  append_number(row, total);
  return row;
}

double partial_energy(const State& U, int k) {
  if (U.representation == Representation::physical) {
    throw std::invalid_argument("partial_energy needs symmetric variables");
  }
  return derivative_power(forward_transform(U.first), k) +
         derivative_power(forward_transform(U.second), k);
}

EnergyReport total_energy(const State& U, int N, double time) {
  if (N < 2) throw std::invalid_argument("energy index N must be >= 2");
  if (U.representation == Representation::physical) {
    throw std::invalid_argument("total_energy needs symmetric variables");
  }
  const Spectrum a = forward_transform(U.first);
  const Spectrum b = forward_transform(U.second);
  EnergyReport r;
  r.N = N;
  r.time = time;
  r.per_k.resize(static_cast<std::size_t>(N + 1));
  for (int k = 0; k <= N; ++k) {
    r.per_k[k] = derivative_power(a, k) + derivative_power(b, k);
    r.total += r.per_k[k];
  }
  return r;
}

EnergyReport energy_of(const State& U, int N, double time) {
  if (U.representation == Representation::physical) return total_energy(to_symmetric(U), N, time);
  return total_energy(U, N, time);
}

double lifespan_shape(double E0, int N) {
  if (!(E0 >= 0.0)) throw std::invalid_argument("initial energy must be non-negative");
  double sum = 0.0;
  for (int i = 1; i <= N; ++i) sum += std::pow(2.0 * E0, 0.5 * i);
  return std::numbers::ln2 / (1.0 + sum);
}

double lifespan_estimate(double E0, int N, double T1, double c) {
  if (!(T1 > 0.0) || !(c > 0.0)) throw std::invalid_argument("T1 and c must be positive");
  return c * std::min(T1, lifespan_shape(E0, N));
}

RatioReport check_tame_product(const Field& f, const Field& g, int k) {
  if (k < 0) throw std::invalid_argument("derivative order must be non-negative");
  const double num = derivative_l2_norm(f * g, k);
  const double den = f.max_abs() * derivative_l2_norm(g, k) + g.max_abs() * derivative_l2_norm(f, k);
  return make_ratio(num, den);
}

RatioReport check_interpolation(const Field& f, int l, int k) {
  if (l < 0 || l > k) throw std::invalid_argument("interpolation needs 0 <= l <= k");
  const Spectrum s = forward_transform(f);
  const double low = std::sqrt(derivative_power(s, 0));
  const double mid = std::sqrt(derivative_power(s, l));
  const double high = std::sqrt(derivative_power(s, k));
  if (k == 0) return make_ratio(mid, low);
  const double theta = static_cast<double>(l) / k;
  const double den = (low > 0.0 && high > 0.0) ? std::pow(low, 1.0 - theta) * std::pow(high, theta)
                                               : 0.0;
  return make_ratio(mid, den);
}

RatioReport check_sobolev_interpolation(const Field& g, double s, double N) {
  if (!(s >= 0.0) || !(s <= N) || !(N > 0.0)) {
    throw std::invalid_argument("interpolation needs 0 <= s <= N, N > 0");
  }
  const Spectrum sp = forward_transform(g);
  const double low = sobolev_norm(sp, 0.0);
  const double high = sobolev_norm(sp, N);
  const double theta = s / N;
  const double den = (low > 0.0 && high > 0.0) ? std::pow(low, 1.0 - theta) * std::pow(high, theta)
                                               : 0.0;
  return make_ratio(sobolev_norm(sp, s), den);
}

}  // namespace whitham
