#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "landen/error.hpp"
#include "landen/real.hpp"

namespace landen {

inline constexpr double kDefaultTolerance = 1e-12;
inline constexpr std::size_t kDefaultMaxIterations = 30;

/// Denominator a x^2 + b x + c of the integral over the real line.
///
/// Construction enforces a > 0, c > 0 and 4ac - b^2 > 0; a quadratic that
/// violates these has a real root and its integral diverges.
template <Field Real>
class Quadratic {
 public:
  Quadratic(Real a, Real b, Real c)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (!(a_ > Real(0)) || !(c_ > Real(0))) {
      throw Error(ErrorKind::kInvalidInput,
                  "leading and constant coefficients must be positive");
    }
    const Real disc = Real(4) * a_ * c_ - b_ * b_;
    if (!(disc > Real(0))) {
      throw Error(ErrorKind::kInvalidInput,
                  "4ac - b^2 must be positive; the integral diverges");
    }
  }

  const Real& a() const { return a_; }
  const Real& b() const { return b_; }
  const Real& c() const { return c_; }

  bool operator==(const Quadratic&) const = default;

 private:
  Real a_;
  Real b_;
  Real c_;
};

template <Field Real>
Real discriminant(const Quadratic<Real>& q) {
  return Real(4) * q.a() * q.c() - q.b() * q.b();
}

/// |b| + |a - c|; zero exactly at the fixed points b = 0, a = c.
template <Field Real>
Real residual(const Quadratic<Real>& q) {
  return abs_value(q.b()) + abs_value(q.a() - q.c());
}

/// One rational Landen step. All three coordinates share the denominator
/// (3a + c)(a + 3c) - b^2, which is positive on the valid region.
template <Field Real>
Quadratic<Real> landen_step(const Quadratic<Real>& q) {
  const Real& a = q.a();
  const Real& b = q.b();
  const Real& c = q.c();
  const Real b2 = b * b;
  const Real a3c = a + Real(3) * c;
  const Real c3a = Real(3) * a + c;
  const Real den = c3a * a3c - b2;
  const Real amc = a - c;
  return Quadratic<Real>(a * (a3c * a3c - Real(3) * b2) / den,
                         b * (Real(3) * amc * amc - b2) / den,
                         c * (c3a * c3a - Real(3) * b2) / den);
}

template <Field Real>
struct TraceRow {
  std::size_t n;
  Quadratic<Real> state;
  Real residual;
};

template <Field Real>
struct IterationTrace {
  std::vector<TraceRow<Real>> rows;

  void push(const Quadratic<Real>& q) {
    rows.push_back(TraceRow<Real>{rows.size(), q, landen::residual(q)});
  }
  const Quadratic<Real>& last() const { return rows.back().state; }
  std::size_t steps() const { return rows.empty() ? 0 : rows.size() - 1; }
};

template <Field Real>
struct IterationResult {
  Real limit;
  IterationTrace<Real> trace;
};

/// Applies exactly `steps` Landen steps, recording every state.
template <Field Real>
IterationTrace<Real> trace_steps(const Quadratic<Real>& q, std::size_t steps) {
  IterationTrace<Real> trace;
  trace.rows.reserve(steps + 1);
  trace.push(q);
  for (std::size_t i = 0; i < steps; ++i) {
    trace.push(landen_step(trace.last()));
  }
  return trace;
}

/// Iterates until the residual drops to `tol`. The returned limit is the
/// final a_n, which approximates sqrt(4ac - b^2) / 2.
template <Field Real>
IterationResult<Real> iterate(const Quadratic<Real>& q, const Real& tol,
                              std::size_t max_iter = kDefaultMaxIterations) {
  if (!(tol > Real(0))) {
    throw Error(ErrorKind::kInvalidInput, "tolerance must be positive");
  }
  if (max_iter < 1) {
    throw Error(ErrorKind::kInvalidInput, "max_iter must be at least 1");
  }
  IterationTrace<Real> trace;
  trace.push(q);
  while (trace.rows.back().residual > tol) {
    if (trace.steps() >= max_iter) {
      throw Error(ErrorKind::kNoConvergence,
                  "residual " + std::to_string(to_double(trace.rows.back().residual)) +
                      " after " + std::to_string(max_iter) + " steps");
    }
    trace.push(landen_step(trace.last()));
  }
  Real limit = trace.last().a();
  return IterationResult<Real>{std::move(limit), std::move(trace)};
}

/// Closed form 2*pi / sqrt(4ac - b^2).
double integral_value(const Quadratic<double>& q);

/// pi / lim a_n, with the limit taken from iterate().
double evaluate_by_iteration(const Quadratic<double>& q,
                             double tol = kDefaultTolerance,
                             std::size_t max_iter = kDefaultMaxIterations);

template <Field Real>
Quadratic<double> to_double(const Quadratic<Real>& q) {
  return Quadratic<double>(to_double(q.a()), to_double(q.b()), to_double(q.c()));
}

/// Exact widening of a double-precision quadratic.
template <Field Real>
Quadratic<Real> widen(const Quadratic<double>& q) {
  return Quadratic<Real>(Real(q.a()), Real(q.b()), Real(q.c()));
}

}  // namespace landen
