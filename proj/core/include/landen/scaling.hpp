#pragma once

#include <array>

#include "landen/quadratic.hpp"

namespace landen {

/// U(x) = x^3 - 3x. With x = tan(theta): U * cos^3(theta) = -sin(3 theta).
template <Field Real>
Real u_poly(const Real& x) {
  return x * x * x - Real(3) * x;
}

/// V(x) = 3x^2 - 1. With x = tan(theta): V * cos^3(theta) = -cos(3 theta).
template <Field Real>
Real v_poly(const Real& x) {
  return Real(3) * x * x - Real(1);
}

/// Multiplier z0 x^4 + ... + z4 that turns a x^2 + b x + c into the
/// quadratic form e0 U^2 + e1 U V + e2 V^2.
template <Field Real>
struct ScalingCoefficients {
  std::array<Real, 5> z;
  std::array<Real, 3> e;

  // 3 z4 + z2 + 3 z0; equals 8 [(3a + c)(a + 3c) - b^2].
  Real normalizer() const { return Real(3) * z[4] + z[2] + Real(3) * z[0]; }

  bool operator==(const ScalingCoefficients&) const = default;
};

template <Field Real>
ScalingCoefficients<Real> scaling_from(const Quadratic<Real>& q) {
  const Real& a = q.a();
  const Real& b = q.b();
  const Real& c = q.c();
  const Real b2 = b * b;
  const Real a3c = a + Real(3) * c;
  const Real c3a = Real(3) * a + c;
  const Real amc = a - c;

  const Real z0 = a3c * a3c - Real(3) * b2;
  const Real z4 = c3a * c3a - Real(3) * b2;
  ScalingCoefficients<Real> s{
      {z0, Real(8) * b * (a - Real(3) * c),
       Real(-6) * a * a + Real(10) * b2 + Real(44) * a * c - Real(6) * c * c,
       Real(8) * b * (c - Real(3) * a), z4},
      {a * z0, b * (Real(3) * amc * amc - b2), c * z4}};
  return s;
}

// Seven distinct nodes; both sides of the identity have degree 6.
inline constexpr std::array<int, 7> kIdentitySamplePoints{-3, -2, -1, 0, 1, 2, 3};

/// max over the sample nodes of
/// |(a x^2 + b x + c) Z(x) - (e0 U^2 + e1 U V + e2 V^2)|.
/// Exactly zero in rational arithmetic when s = scaling_from(q).
template <Field Real>
Real verify_polynomial_identity(const Quadratic<Real>& q,
                                const ScalingCoefficients<Real>& s) {
  Real worst(0);
  for (int node : kIdentitySamplePoints) {
    const Real x(node);
    const Real quad = (q.a() * x + q.b()) * x + q.c();
    const Real mult = (((s.z[0] * x + s.z[1]) * x + s.z[2]) * x + s.z[3]) * x + s.z[4];
    const Real u = u_poly(x);
    const Real v = v_poly(x);
    const Real form = s.e[0] * u * u + s.e[1] * u * v + s.e[2] * v * v;
    const Real diff = abs_value(quad * mult - form);
    if (worst < diff) worst = diff;
  }
  return worst;
}

/// (8 e0, 8 e1, 8 e2) / (3 z4 + z2 + 3 z0): the quadratic produced by the
/// trigonometric reduction. Coincides with landen_step(q).
template <Field Real>
Quadratic<Real> next_quadratic_via_normalization(const Quadratic<Real>& q) {
  const ScalingCoefficients<Real> s = scaling_from(q);
  const Real n = s.normalizer();
  return Quadratic<Real>(Real(8) * s.e[0] / n, Real(8) * s.e[1] / n,
                         Real(8) * s.e[2] / n);
}

}  // namespace landen
