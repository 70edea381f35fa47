#include "whitham/symmetrize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "whitham/errors.hpp"

namespace whitham {
namespace {

void require_symmetric(const State& s, const char* what) {
  if (s.representation != Representation::symmetric) {
    throw std::invalid_argument(std::string(what) + " needs a state in symmetric variables");
  }
}

// w = zeta + 2 lambda_bar, which equals 2 sqrt(eta).
Field depth_factor(const Field& zeta, double eta_bar) { return zeta + 2.0 * std::sqrt(eta_bar); }

void require_positive(const Field& w, const char* what) {
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (!(w[j] > 0.0)) {
      throw DomainError(std::string(what) + ": zeta + 2*lambda_bar <= 0 at index " +
                            std::to_string(j),
                        static_cast<std::ptrdiff_t>(j));
    }
  }
}

}  // namespace

Field to_symmetric(const Field& eta, double eta_bar) {
  if (!(eta_bar > 0.0)) throw std::invalid_argument("eta_bar must be positive");
  const double lambda_bar = std::sqrt(eta_bar);
  Field zeta(eta.grid());
  for (std::size_t j = 0; j < eta.size(); ++j) {
    if (!(eta[j] > 0.0)) {
      throw DomainError("to_symmetric: eta <= 0 at index " + std::to_string(j) + " (eta = " +
                            std::to_string(eta[j]) + ")",
                        static_cast<std::ptrdiff_t>(j));
    }
    zeta[j] = 2.0 * (std::sqrt(eta[j]) - lambda_bar);
  }
  return zeta;
}

Field from_symmetric(const Field& zeta, double eta_bar) {
  if (!(eta_bar > 0.0)) throw std::invalid_argument("eta_bar must be positive");
  const Field w = depth_factor(zeta, eta_bar);
  require_positive(w, "from_symmetric");
  Field eta(zeta.grid());
  for (std::size_t j = 0; j < eta.size(); ++j) eta[j] = 0.25 * w[j] * w[j];
  return eta;
}

State to_symmetric(const State& physical) {
  if (physical.representation != Representation::physical) {
    throw std::invalid_argument("to_symmetric needs a state in physical variables");
  }
  return State(to_symmetric(physical.first, physical.eta_bar), physical.second,
               Representation::symmetric, physical.eta_bar);
}

State to_physical(const State& symmetric) {
  require_symmetric(symmetric, "to_physical");
  return State(from_symmetric(symmetric.first, symmetric.eta_bar), symmetric.second,
               Representation::physical, symmetric.eta_bar);
}

FieldMatrix matrix_A(const State& U) {
  require_symmetric(U, "matrix_A");
  Field off = 0.5 * depth_factor(U.first, U.eta_bar);
  return FieldMatrix{U.second, off, off, U.second};
}

FieldMatrix matrix_B(const State& U) {
  require_symmetric(U, "matrix_B");
  const Field w = depth_factor(U.first, U.eta_bar);
  require_positive(w, "matrix_B");
  const Grid& g = U.grid();
  return FieldMatrix{Field(g), w.map([](double v) { return 2.0 / v; }), Field(g), Field(g)};
}

bool Admissibility::holds_for(const Field& zeta) const {
  const Field w = zeta + 2.0 * lambda_bar;
  return w.min() >= 2.0 * mu && w.max() <= 1.0 / (2.0 * mu);
}

Admissibility admissible_mu(const Field& zeta0, double eta_bar) {
  if (!(eta_bar > 0.0)) throw std::invalid_argument("eta_bar must be positive");
  const double lambda_bar = std::sqrt(eta_bar);
  const Field w = depth_factor(zeta0, eta_bar);
  const double lo = w.min();
  const double hi = w.max();
  if (!(lo > 0.0) || !std::isfinite(hi)) {
    throw AdmissibilityError("no admissibility constant: min(zeta0 + 2*lambda_bar) = " +
                             std::to_string(lo) + " is not positive");
  }
  const double mu = std::min({lo / 2.0, 1.0 / (2.0 * hi), 1.0 / lambda_bar});
  return Admissibility{mu, lambda_bar};
}

}  // namespace whitham
