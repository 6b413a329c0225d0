#pragma once

#include <array>
#include <cstddef>
#include <functional>

#include "landen/quadratic.hpp"

namespace landen {

inline constexpr double kDefaultQuadratureTolerance = 1e-9;

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

/// Globally adaptive Gauss-Kronrod (7/15) integration on [lo, hi]. The
/// interval with the largest |K15 - G7| is bisected until the summed
/// estimate is at most `tol` (absolute). Throws tolerance-not-met once
/// `max_intervals` is exhausted.
QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, double tol = kDefaultQuadratureTolerance,
                           std::size_t max_intervals = 20000);

/// Integral of 1 / (a x^2 + b x + c) over the real line, evaluated as the
/// composition f(tan(theta)) sec^2(theta) on (-pi/2, pi/2).
QuadratureResult integrate_rational_line(const Quadratic<double>& q,
                                         double tol = kDefaultQuadratureTolerance);

/// Integral of 1 / (a sin^2 + b sin cos + c cos^2) over (-pi/2, pi/2).
QuadratureResult integrate_trig_form(const Quadratic<double>& q,
                                     double tol = kDefaultQuadratureTolerance);

/// Coefficients (e0, e1, e2) of e0 sin^2(3t) + e1 sin(3t) cos(3t) + e2 cos^2(3t).
using TripledForm = std::array<double, 3>;

enum class FourierMode { kSine, kCosine };

/// Integral of sin(k t) or cos(k t) over the tripled-angle form on [lo, hi].
/// Requires e0, e2 > 0 and 4 e0 e2 - e1^2 > 0 so the denominator has no zero.
QuadratureResult mode_integral(FourierMode mode, int k, const TripledForm& e,
                               double lo, double hi,
                               double tol = kDefaultQuadratureTolerance);

/// S_k over (-pi/2, pi/2); k in {2, 4}.
QuadratureResult s_integral(int k, const TripledForm& e,
                            double tol = kDefaultQuadratureTolerance);

/// C_k over (-pi/2, pi/2); k in {0, 2, 4}.
QuadratureResult c_integral(int k, const TripledForm& e,
                            double tol = kDefaultQuadratureTolerance);

}  // namespace landen
