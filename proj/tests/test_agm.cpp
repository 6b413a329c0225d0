#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "landen/agm.hpp"
#include "oracles.hpp"

using landen::AgmPair;
using landen::Error;
using landen::ErrorKind;

TEST_CASE("agm_step") {
  const auto fixed = landen::agm_step(AgmPair(1.0, 1.0));
  CHECK(fixed.a == 1.0);
  CHECK(fixed.b == 1.0);
  const auto s = landen::agm_step(AgmPair(1.0, std::sqrt(2.0)));
  CHECK(s.a == doctest::Approx(1.2071067811865475).epsilon(1e-15));
  CHECK(s.b == doctest::Approx(1.1892071150027211).epsilon(1e-15));
  CHECK(s.a >= s.b);

  std::mt19937_64 rng(40);
  std::uniform_real_distribution<double> u(1e-3, 100.0);
  for (int i = 0; i < 500; ++i) {
    const AgmPair p(u(rng), u(rng));
    const auto q = landen::agm_step(p);
    CHECK(q.a >= q.b);
    const double gap = 0.5 * std::pow(std::sqrt(p.a) - std::sqrt(p.b), 2);
    CHECK(q.a - q.b == doctest::Approx(gap).epsilon(1e-9).scale(std::max(p.a, p.b)));
  }
}

TEST_CASE("AgmPair rejects non-positive input") {
  CHECK_THROWS_AS(AgmPair(0.0, 1.0), Error);
  CHECK_THROWS_AS(AgmPair(1.0, -2.0), Error);
  CHECK_THROWS_AS(AgmPair(std::nan(""), 1.0), Error);
}

TEST_CASE("agm values") {
  CHECK(landen::agm(AgmPair(1.0, 1.0)) == 1.0);
  const double m = landen::agm(AgmPair(1.0, std::sqrt(2.0)), 1e-14);
  CHECK(m == doctest::Approx(1.1981402347355922074).epsilon(1e-15));
  CHECK(1.0 / m == doctest::Approx(0.8346268416740731863).epsilon(1e-15));
  CHECK(landen::agm(AgmPair(std::sqrt(2.0), 1.0)) == landen::agm(AgmPair(1.0, std::sqrt(2.0))));
}

TEST_CASE("sandwich and homogeneity") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(1e-2, 10.0);
  for (int i = 0; i < 200; ++i) {
    const double x = u(rng);
    const double y = u(rng);
    const auto trace = landen::agm_trace(AgmPair(x, y));
    for (std::size_t n = 2; n < trace.rows.size(); ++n) {
      const auto& prev = trace.rows[n - 1];
      const auto& cur = trace.rows[n];
      CHECK(prev.b <= cur.b);
      CHECK(cur.b <= cur.a);
      CHECK(cur.a <= prev.a);
    }
    const double lambda = u(rng);
    CHECK(landen::agm(AgmPair(lambda * x, lambda * y)) ==
          doctest::Approx(lambda * landen::agm(AgmPair(x, y))).epsilon(1e-14));
  }
}

TEST_CASE("elliptic_g") {
  CHECK(landen::elliptic_g(2.0, 2.0) == doctest::Approx(std::numbers::pi / 4.0).epsilon(1e-15));
  const double g = landen::elliptic_g(1.0, 1.0 / std::sqrt(2.0));
  CHECK(g == doctest::Approx(1.8540746773013719).epsilon(1e-14));
  const auto quad = landen::elliptic_g_by_quadrature(1.0, 1.0 / std::sqrt(2.0));
  CHECK(std::fabs(quad.value - g) < 1e-9);
  const double brute = landen::testing::periodic_trapezoid(
      [](double t) { return 1.0 / std::sqrt(std::cos(t) * std::cos(t) + 0.5 * std::sin(t) * std::sin(t)); },
      0.0, 2.0 * std::numbers::pi, 512) / 4.0;
  CHECK(std::fabs(brute - g) < 1e-13);
}

TEST_CASE("Gauss invariance") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(1e-2, 10.0);
  for (int i = 0; i < 100; ++i) {
    double a = u(rng);
    double b = u(rng);
    if (b > a) std::swap(a, b);
    const double lhs = landen::elliptic_g(a, b);
    const double rhs = landen::elliptic_g(0.5 * (a + b), std::sqrt(a * b));
    CHECK(std::fabs(lhs - rhs) < 1e-12);
  }
  const double a = 3.0;
  const double b = 0.5;
  const auto lhs = landen::elliptic_g_by_quadrature(a, b, 1e-12);
  const auto rhs = landen::elliptic_g_by_quadrature(0.5 * (a + b), std::sqrt(a * b), 1e-12);
  CHECK(std::fabs(lhs.value - rhs.value) < 1e-11);
}

TEST_CASE("complete_elliptic_k") {
  CHECK(landen::complete_elliptic_k(0.0) == doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-15));
  CHECK(landen::complete_elliptic_k(0.5) == doctest::Approx(1.6857503548125960).epsilon(1e-14));
  CHECK_THROWS_AS(landen::complete_elliptic_k(1.0), Error);
}

TEST_CASE("lemniscate check") {
  const auto check = landen::lemniscate_check();
  CHECK(check.agm_value == doctest::Approx(0.83462684167407319).epsilon(1e-15));
  CHECK(check.integral_value == doctest::Approx(0.83462684167407319).epsilon(1e-14));
  CHECK(std::fabs(check.agm_value - check.integral_value) < 5e-12);
  // The substituted integrand 1 / sqrt(1 + cos^2) is bounded by 1 on [0, pi/2].
  for (double t = 0.0; t <= 0.5 * std::numbers::pi; t += 0.01) {
    const double c = std::cos(t);
    CHECK(std::isfinite(1.0 / std::sqrt(1.0 + c * c)));
  }
}

TEST_CASE("lemniscate check reports an unreachable tolerance") {
  try {
    landen::lemniscate_check(1e-30);
    FAIL("expected quadrature-failure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kQuadratureFailure);
  }
}
