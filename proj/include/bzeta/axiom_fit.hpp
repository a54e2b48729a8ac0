#pragma once

#include <span>
#include <string>

#include "bzeta/count_table.hpp"

namespace bzeta {

// (kappa, A, theta) certifying |N(x) - kappa(x-1)| <= A x^theta over
// [x_lo, x_hi]; max_violation is 0 when the bound is certified at every
// jump point of the fitted table.
struct AxiomAFit {
  double kappa = 0.0;
  double bigA = 0.0;
  double theta = 0.0;
  double x_lo = 1.0;
  double x_hi = 1.0;
  double max_violation = 0.0;
  bool ok = false;
  std::string message;
};

// kappa by sup-norm minimization of R modulo constants over the upper half
// of the range (the drift-free asymptotic estimator); then for each theta
// in the grid the minimal A certifying the bound at all jump points, and
// the smallest theta with A <= a_cap wins. Failure returns ok = false
// carrying the best attempt.
AxiomAFit fit_axiom_a(const CountTable& table, std::span<const double> theta_grid,
                      double a_cap = 1e3);

// Largest |N(x) - kappa(x-1)| - A x^theta over all jump points (both sides),
// clamped at 0; the exhaustive certification check.
double axiom_a_violation(const CountTable& table, const AxiomAFit& fit);

}  // namespace bzeta
