#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "landen/quadratic.hpp"

namespace landen {

/// Coordinates x = a + c, y = b, z = a - c in which the Landen map
/// decouples; x^2 - y^2 - z^2 equals the discriminant 4ac - b^2.
template <Field Real>
struct ReducedState {
  Real x;
  Real y;
  Real z;

  Real invariant() const { return x * x - y * y - z * z; }
  bool operator==(const ReducedState&) const = default;
};

template <Field Real>
ReducedState<Real> to_reduced(const Quadratic<Real>& q) {
  return ReducedState<Real>{q.a() + q.c(), q.b(), q.a() - q.c()};
}

template <Field Real>
Quadratic<Real> from_reduced(const ReducedState<Real>& s) {
  return Quadratic<Real>((s.x + s.z) / Real(2), s.y, (s.x - s.z) / Real(2));
}

template <Field Real>
ReducedState<Real> reduced_step(const ReducedState<Real>& s) {
  const Real x2 = s.x * s.x;
  const Real y2 = s.y * s.y;
  const Real z2 = s.z * s.z;
  const Real den = Real(4) * x2 - y2 - z2;
  return ReducedState<Real>{s.x * (Real(4) * x2 - Real(3) * z2 - Real(3) * y2) / den,
                            s.y * (Real(3) * z2 - y2) / den,
                            s.z * (z2 - Real(3) * y2) / den};
}

/// x -> x (x^2 + 3 w^2) / (3 x^2 + w^2), the x-coordinate of reduced_step
/// once y^2 + z^2 is eliminated through the invariant w^2.
template <Field Real>
Real collapsed_step(const Real& x, const Real& w) {
  const Real x2 = x * x;
  const Real w2 = w * w;
  return x * (x2 + Real(3) * w2) / (Real(3) * x2 + w2);
}

/// w = sqrt(4ac - b^2), d = (a + c) / w >= 1, t = arccoth(d).
/// Along the orbit x_n = w coth(3^n t).
struct ConvergenceParams {
  double w;
  double d;
  double t;
};

/// std::nullopt when d == 1, i.e. q is already the fixed point (t would be
/// infinite).
std::optional<ConvergenceParams> params_from(const Quadratic<double>& q);

/// w coth(3^n t). Returns w once e^{2 t 3^n} leaves the double range.
double closed_form_x(const ConvergenceParams& p, std::size_t n);

/// 2 / (e^{2 t 3^n} - 1) = |x_n / w - 1|. Returns 0 past the double range.
double error_bound(const ConvergenceParams& p, std::size_t n);

struct OrderFitOptions {
  // Residuals below `floor` are dominated by rounding in a - c.
  double floor = 1e-14;
  // Residuals above `ceiling` are still in the pre-asymptotic phase.
  double ceiling = 0.6;
};

/// Fit window scaled to the working precision: the floor sits a hundred ulps
/// above zero. Exact backends have no floor.
template <Field Real>
OrderFitOptions default_fit_options() {
  OrderFitOptions options;
  if constexpr (std::numeric_limits<Real>::is_exact) {
    options.floor = 0.0;
  } else {
    options.floor = std::max(100.0 * to_double(std::numeric_limits<Real>::epsilon()),
                             std::numeric_limits<double>::min());
  }
  return options;
}

/// Scale-free residuals: |b_n| + |a_n - c_n| divided by a_n + c_n.
template <Field Real>
std::vector<double> relative_residuals(const IterationTrace<Real>& trace) {
  std::vector<double> out;
  out.reserve(trace.rows.size());
  for (const auto& row : trace.rows) {
    out.push_back(to_double(Real(row.residual / (row.state.a() + row.state.c()))));
  }
  return out;
}

/// Least-squares slope of log r_{n+1} against log r_n over consecutive pairs
/// with both residuals positive and inside [floor, ceiling]. Throws
/// insufficient-data when fewer than two such pairs exist or the fit is
/// degenerate.
double convergence_order(std::span<const double> residuals,
                         const OrderFitOptions& options = {});

template <Field Real>
double convergence_order(const IterationTrace<Real>& trace,
                         const OrderFitOptions& options = default_fit_options<Real>()) {
  const std::vector<double> r = relative_residuals(trace);
  return convergence_order(std::span<const double>(r), options);
}

}  // namespace landen
