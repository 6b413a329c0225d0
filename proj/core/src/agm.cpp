#include "landen/agm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace landen {
namespace {

constexpr std::size_t kMaxAgmSteps = 64;

}  // namespace

AgmPair::AgmPair(double a_in, double b_in) : a(a_in), b(b_in) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw Error(ErrorKind::kInvalidInput, "AGM arguments must be positive and finite");
  }
}

AgmPair agm_step(const AgmPair& p) {
  const double am = 0.5 * (p.a + p.b);
  const double gm = std::sqrt(p.a * p.b);
  // Rounding can put gm one ulp above am when a == b.
  return AgmPair(std::max(am, gm), std::min(am, gm));
}

AgmTrace agm_trace(const AgmPair& p, double tol) {
  if (!(tol > 0.0)) {
    throw Error(ErrorKind::kInvalidInput, "tolerance must be positive");
  }
  AgmTrace trace;
  trace.rows.push_back(p);
  while (std::fabs(trace.rows.back().a - trace.rows.back().b) > tol &&
         trace.rows.size() <= kMaxAgmSteps) {
    const AgmPair next = agm_step(trace.rows.back());
    const AgmPair& prev = trace.rows.back();
    const bool stalled = next.a == prev.a && next.b == prev.b;
    trace.rows.push_back(next);
    if (stalled) break;
  }
  return trace;
}

double agm(const AgmPair& p, double tol) { return agm_trace(p, tol).rows.back().a; }

std::vector<double> relative_residuals(const AgmTrace& trace) {
  std::vector<double> out;
  out.reserve(trace.rows.size());
  for (const AgmPair& row : trace.rows) {
    out.push_back(std::fabs(row.a - row.b) / std::max(row.a, row.b));
  }
  return out;
}

double elliptic_g(double a, double b) {
  return std::numbers::pi / (2.0 * agm(AgmPair(a, b)));
}

QuadratureResult elliptic_g_by_quadrature(double a, double b, double tol) {
  const AgmPair checked(a, b);
  const double a2 = checked.a * checked.a;
  const double b2 = checked.b * checked.b;
  const auto integrand = [a2, b2](double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return 1.0 / std::sqrt(a2 * c * c + b2 * s * s);
  };
  return integrate(integrand, 0.0, 0.5 * std::numbers::pi, tol);
}

double complete_elliptic_k(double k) {
  if (!(k >= 0.0) || !(k < 1.0)) {
    throw Error(ErrorKind::kInvalidInput, "modulus must lie in [0, 1)");
  }
  return elliptic_g(1.0, std::sqrt((1.0 - k) * (1.0 + k)));
}

LemniscateCheck lemniscate_check(double tol) {
  const double agm_value = 1.0 / agm(AgmPair(1.0, std::numbers::sqrt2));
  const auto integrand = [](double theta) {
    const double c = std::cos(theta);
    return 1.0 / std::sqrt(1.0 + c * c);
  };
  QuadratureResult quad;
  try {
    quad = integrate(integrand, 0.0, 0.5 * std::numbers::pi, tol);
  } catch (const Error& e) {
    throw Error(ErrorKind::kQuadratureFailure, e.what());
  }
  const double scale = 2.0 / std::numbers::pi;
  return LemniscateCheck{agm_value, scale * quad.value, scale * quad.error_estimate};
}

}  // namespace landen
