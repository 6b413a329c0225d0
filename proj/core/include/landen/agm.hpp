#pragma once

#include <cstddef>
#include <vector>

#include "landen/quadrature.hpp"

namespace landen {

/// Pair of positive reals acted on by the arithmetic-geometric mean step.
struct AgmPair {
  double a;
  double b;

  AgmPair(double a_in, double b_in);
};

/// ((a + b) / 2, sqrt(a b)). The result is ordered: a >= b.
AgmPair agm_step(const AgmPair& p);

struct AgmTrace {
  std::vector<AgmPair> rows;
};

/// Steps until |a_n - b_n| <= tol (or the pair stops changing in double
/// precision), recording every pair.
AgmTrace agm_trace(const AgmPair& p, double tol = 1e-15);

double agm(const AgmPair& p, double tol = 1e-15);

/// |a_n - b_n| / a_n for each row, for convergence_order().
std::vector<double> relative_residuals(const AgmTrace& trace);

/// Integral of 1 / sqrt(a^2 cos^2 + b^2 sin^2) over [0, pi/2], evaluated as
/// pi / (2 AGM(a, b)).
double elliptic_g(double a, double b);

/// The same integral by adaptive quadrature of the smooth trigonometric form.
QuadratureResult elliptic_g_by_quadrature(double a, double b,
                                          double tol = kDefaultQuadratureTolerance);

/// Complete elliptic integral of the first kind through K(k) = a G(a, b),
/// k^2 = 1 - b^2 / a^2, taken at a = 1. Requires 0 <= k < 1.
double complete_elliptic_k(double k);

struct LemniscateCheck {
  double agm_value;
  double integral_value;
  double integral_error;
};

/// 1 / AGM(1, sqrt 2) against (2 / pi) * integral_0^1 dx / sqrt(1 - x^4).
/// The integral is taken after x = cos(theta), which leaves the bounded
/// integrand 1 / sqrt(1 + cos^2 theta) on [0, pi/2].
/// Throws quadrature-failure if the integral misses `tol`.
LemniscateCheck lemniscate_check(double tol = 1e-14);

}  // namespace landen
