#include "whitham/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace whitham {

std::string_view to_string(Representation r) {
  switch (r) {
    case Representation::symmetric: return "symmetric";
    case Representation::physical: return "physical";
    case Representation::unidirectional: return "unidirectional";
  }
  return "unknown";
}

Representation representation_from_string(std::string_view s) {
  if (s == "symmetric") return Representation::symmetric;
  if (s == "physical") return Representation::physical;
  if (s == "unidirectional") return Representation::unidirectional;
  throw std::invalid_argument("unknown representation '" + std::string(s) + "'");
}

State::State(Field first_, Field second_, Representation rep, double eta_bar_)
    : first(std::move(first_)), second(std::move(second_)), representation(rep),
      eta_bar(eta_bar_) {
  if (!(first.grid() == second.grid())) {
    throw std::invalid_argument("state components must share one grid");
  }
  if (!(eta_bar > 0.0)) throw std::invalid_argument("background eta_bar must be positive");
}

double State::lambda_bar() const { return std::sqrt(eta_bar); }

State& State::operator+=(const State& o) {
  first += o.first;
  second += o.second;
  return *this;
}

State& State::operator*=(double s) {
  first *= s;
  second *= s;
  return *this;
}

void axpy(State& a, double s, const State& b) {
  axpy(a.first, s, b.first);
  axpy(a.second, s, b.second);
}

double l2_norm(const State& s) {
  double sum = 0.0;
  for (double v : s.first.samples()) sum += v * v;
  for (double v : s.second.samples()) sum += v * v;
  return std::sqrt(sum * s.grid().spacing());
}

State zero_state(const Grid& grid, Representation rep, double eta_bar) {
  return State(Field(grid), Field(grid), rep, eta_bar);
}

}  // namespace whitham
