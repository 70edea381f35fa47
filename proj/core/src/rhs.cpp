#include "rhs.hpp"

#include <cmath>

#include "whitham/errors.hpp"
#include "whitham/mollifier.hpp"
#include "whitham/operators.hpp"
#include "whitham/solvers.hpp"

namespace whitham::detail {
namespace {

Field apply_to(const SpectralMultiplier& m, Spectrum s) {
  m.apply_in_place(s);
  return inverse_transform(s);
}

SpectralMultiplier mollifier_or_identity(const Grid& grid, double eps) {
  return eps > 0.0 ? *Mollifier::standard().multiplier(grid, eps)
                   : SpectralMultiplier::identity(grid);
}

}  // namespace

RegularizedRhs::RegularizedRhs(const Grid& grid, double eps, bool dealias)
    : grid_(grid),
      mollified_(eps > 0.0),
      J_(eps > 0.0 ? Mollifier::standard().multiplier(grid, eps) : nullptr),
      DJ_(SpectralMultiplier::derivative(grid, 1) * mollifier_or_identity(grid, eps)),
      KDJ_(whitham_multiplier(grid) * DJ_),
      outer_(dealias ? mollifier_or_identity(grid, eps) * SpectralMultiplier::dealias(grid)
                     : mollifier_or_identity(grid, eps)),
      outer_is_identity_(!dealias && eps == 0.0) {}

Field RegularizedRhs::smooth(const Field& f) const { return mollified_ ? J_->apply(f) : f; }

State RegularizedRhs::operator()(const State& U, const State& V) const {
  const double two_lambda = 2.0 * V.lambda_bar();
  const std::size_t n = grid_.size();

  Field w(grid_);
  for (std::size_t j = 0; j < n; ++j) {
    w[j] = V.first[j] + two_lambda;
    if (!(w[j] > 0.0)) {
      throw DomainError("coefficient state has zeta + 2*lambda_bar <= 0",
                        static_cast<std::ptrdiff_t>(j));
    }
  }
  const Field a_d = smooth(V.second);
  const Field a_o = smooth(0.5 * w);
  const Field b = smooth(w.map([](double v) { return 2.0 / v; }));

  const Spectrum zeta_hat = forward_transform(U.first);
  const Spectrum u_hat = forward_transform(U.second);
  const Field dzeta = apply_to(DJ_, zeta_hat);
  const Field du = apply_to(DJ_, u_hat);
  const Field kdu = apply_to(KDJ_, u_hat);

  Field g1(grid_);
  Field g2(grid_);
  for (std::size_t j = 0; j < n; ++j) {
    g1[j] = -(a_d[j] * dzeta[j] + a_o[j] * du[j] + b[j] * kdu[j]);
    g2[j] = -(a_o[j] * dzeta[j] + a_d[j] * du[j]);
  }
  if (!outer_is_identity_) {
    g1 = outer_.apply(g1);
    g2 = outer_.apply(g2);
  }
  return State(std::move(g1), std::move(g2), Representation::symmetric, U.eta_bar);
}

DirectRhs::DirectRhs(const Grid& grid, bool dealias)
    : D_(SpectralMultiplier::derivative(grid, 1)),
      KD_(whitham_multiplier(grid) * D_),
      DP_(dealias ? D_ * SpectralMultiplier::dealias(grid) : D_) {
  if (dealias) P_ = SpectralMultiplier::dealias(grid);
}

State DirectRhs::operator()(const State& s) const {
  const Field& eta = s.first;
  const Field& u = s.second;
  const Spectrum u_hat = forward_transform(u);
  const Field ux = apply_to(D_, u_hat);
  const Field kux = apply_to(KD_, u_hat);
  const Field eta_x = D_.apply(eta);
  const Field flux_x = DP_.apply(eta * u);
  Field adv = u * ux;
  if (P_) adv = P_->apply(adv);

  Field d_eta = kux + flux_x;
  d_eta *= -1.0;
  Field d_u = eta_x + adv;
  d_u *= -1.0;
  return State(std::move(d_eta), std::move(d_u), Representation::physical, s.eta_bar);
}

UnidirectionalRhs::UnidirectionalRhs(const Grid& grid, bool dealias)
    : D_(SpectralMultiplier::derivative(grid, 1)), KsD_(whitham_sqrt_multiplier(grid) * D_) {
  if (dealias) P_ = SpectralMultiplier::dealias(grid);
}

State UnidirectionalRhs::operator()(const State& s) const {
  const Spectrum u_hat = forward_transform(s.second);
  const Field ux = apply_to(D_, u_hat);
  Field adv = s.second * ux;
  if (P_) adv = P_->apply(adv);
  Field du = apply_to(KsD_, u_hat) + adv;
  du *= -1.0;
  return State(Field(s.grid()), std::move(du), Representation::unidirectional, s.eta_bar);
}

}  // namespace whitham::detail

namespace whitham {

State rhs_regularized(const State& U, const State& V, double eps, bool dealias) {
  if (U.representation != Representation::symmetric ||
      V.representation != Representation::symmetric) {
    throw std::invalid_argument("rhs_regularized needs symmetric states");
  }
  if (!(U.grid() == V.grid())) throw std::invalid_argument("U and V live on different grids");
  if (!(eps >= 0.0 && eps <= 1.0)) throw std::invalid_argument("eps must lie in [0, 1]");
  return detail::RegularizedRhs(U.grid(), eps, dealias)(U, V);
}

}  // namespace whitham
