#pragma once

#include "whitham/field.hpp"
#include "whitham/state.hpp"

namespace whitham {

/// zeta = 2 (sqrt(eta) - sqrt(eta_bar)). Throws DomainError at the first eta_j <= 0.
Field to_symmetric(const Field& eta, double eta_bar);

/// eta = (zeta/2 + sqrt(eta_bar))^2. Throws DomainError where zeta + 2 lambda_bar <= 0.
Field from_symmetric(const Field& zeta, double eta_bar);

/// Converts (eta, u) to (zeta, u) and back; other tags are rejected.
State to_symmetric(const State& physical);
State to_physical(const State& symmetric);

/// 2x2 matrix whose entries are fields on one grid.
struct FieldMatrix {
  Field a11, a12, a21, a22;
};

/// A(U) = [[u, w/2], [w/2, u]] with w = zeta + 2 lambda_bar. The off-diagonal
/// entries are the same object value, so A(U) is symmetric bit for bit.
FieldMatrix matrix_A(const State& U);

/// B(U) = [[0, 2/w], [0, 0]]. Throws DomainError where w <= 0.
FieldMatrix matrix_B(const State& U);

/// Constants of the admissible set: 2 mu <= zeta_0 + 2 lambda_bar <= 1/(2 mu), lambda_bar <= 1/mu.
struct Admissibility {
  double mu;
  double lambda_bar;

  /// Check 2 mu <= w <= 1/(2 mu) pointwise for w = zeta + 2 lambda_bar.
  bool holds_for(const Field& zeta) const;
};

/// The largest mu satisfying all three admissibility inequalities for zeta_0.
/// Throws AdmissibilityError when zeta_0 + 2 lambda_bar is not strictly positive.
Admissibility admissible_mu(const Field& zeta0, double eta_bar);

}  // namespace whitham
