#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "landen/agm.hpp"
#include "landen/convergence.hpp"
#include "oracles.hpp"

using landen::Error;
using landen::ErrorKind;
using landen::Quadratic;
using landen::Rational;
using landen::ReducedState;

namespace {

Quadratic<Rational> rq(int a, int b, int c) {
  return Quadratic<Rational>(Rational(a), Rational(b), Rational(c));
}

}  // namespace

TEST_CASE("to_reduced") {
  const auto s = landen::to_reduced(rq(4, 3, 1));
  CHECK(s == ReducedState<Rational>{5, 3, 3});
  CHECK(s.invariant() == Rational(7));
  CHECK(landen::to_reduced(rq(1, 0, 1)) == ReducedState<Rational>{2, 0, 0});
  CHECK(landen::from_reduced(s) == rq(4, 3, 1));
}

TEST_CASE("reduced_step") {
  const auto next = landen::reduced_step(ReducedState<Rational>{5, 3, 3});
  CHECK(next == ReducedState<Rational>{Rational(115, 41), Rational(27, 41), Rational(-27, 41)});
  CHECK(next.invariant() == Rational(7));
  CHECK(landen::reduced_step(ReducedState<Rational>{2, 0, 0}) == ReducedState<Rational>{2, 0, 0});
}

TEST_CASE("conjugacy with the Landen step is exact") {
  std::mt19937_64 rng(30);
  for (int i = 0; i < 500; ++i) {
    const auto q = landen::testing::random_rational_quadratic(rng);
    const auto reduced = landen::to_reduced(q);
    const auto stepped = landen::reduced_step(reduced);
    REQUIRE(landen::to_reduced(landen::landen_step(q)) == stepped);
    REQUIRE(stepped.invariant() == reduced.invariant());
  }
}

TEST_CASE("y and z decay along the reduced orbit") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const auto q = landen::testing::random_quadratic(rng);
    auto s = landen::to_reduced(q);
    for (int n = 0; n < 12; ++n) s = landen::reduced_step(s);
    const double w = std::sqrt(landen::discriminant(q));
    CHECK(std::fabs(s.y) < 1e-12 * w);
    CHECK(std::fabs(s.z) < 1e-12 * w);
    CHECK(s.x == doctest::Approx(w).epsilon(1e-14));
  }
}

TEST_CASE("collapsed_step") {
  CHECK(landen::collapsed_step(3.0, 3.0) == 3.0);
  CHECK(landen::collapsed_step(Rational(5), Rational(2)) ==
        Rational(5) * Rational(25 + 12) / Rational(75 + 4));
  const double w = std::sqrt(7.0);
  CHECK(landen::collapsed_step(5.0, w) == doctest::Approx(115.0 / 41.0).epsilon(1e-15));
  CHECK(landen::collapsed_step(2.0 * w, w) == doctest::Approx(14.0 * w / 13.0).epsilon(1e-15));
  // With w rational the map is exact: x0 = 2, w = 1 gives 2 * 7 / 13.
  CHECK(landen::collapsed_step(Rational(2), Rational(1)) == Rational(14, 13));
}

TEST_CASE("params_from") {
  const auto p = landen::params_from(Quadratic<double>(4, 3, 1));
  REQUIRE(p.has_value());
  CHECK(p->w == doctest::Approx(std::sqrt(7.0)).epsilon(1e-15));
  CHECK(p->d == doctest::Approx(1.8898223650461361).epsilon(1e-15));
  CHECK(p->t == doctest::Approx(0.58896423043288129).epsilon(1e-14));
  CHECK(p->w / std::tanh(p->t) == doctest::Approx(5.0).epsilon(1e-14));
  CHECK_FALSE(landen::params_from(Quadratic<double>(1, 0, 1)).has_value());
  CHECK_FALSE(landen::params_from(Quadratic<double>(2.5, 0, 2.5)).has_value());
}

TEST_CASE("closed form matches the iteration") {
  const auto p = *landen::params_from(Quadratic<double>(4, 3, 1));
  CHECK(landen::closed_form_x(p, 0) == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(landen::closed_form_x(p, 1) == doctest::Approx(115.0 / 41.0).epsilon(1e-14));
  CHECK(landen::closed_form_x(p, 4) == doctest::Approx(std::sqrt(7.0)).epsilon(1e-16));
  CHECK(std::fabs(landen::closed_form_x(p, 4) - 2.6457513111) < 1e-10);

  std::mt19937_64 rng(32);
  for (int i = 0; i < 100; ++i) {
    const auto q = landen::testing::random_quadratic(rng);
    const auto params = landen::params_from(q);
    REQUIRE(params.has_value());
    double x = q.a() + q.c();
    for (std::size_t n = 0; n <= 10; ++n) {
      REQUIRE(std::fabs(landen::closed_form_x(*params, n) - x) < 1e-12 * params->w);
      x = landen::collapsed_step(x, params->w);
    }
  }
}

TEST_CASE("error_bound") {
  const auto p = *landen::params_from(Quadratic<double>(4, 3, 1));
  CHECK(landen::error_bound(p, 0) == doctest::Approx(p.d - 1.0).epsilon(1e-14));
  CHECK(landen::error_bound(p, 0) == doctest::Approx(0.88982236504613614).epsilon(1e-14));
  CHECK(landen::error_bound(p, 3) == doctest::Approx(3.0810487402233665e-14).epsilon(1e-10));
  for (std::size_t n = 2; n < 5; ++n) {
    const double e = landen::error_bound(p, n);
    CHECK(landen::error_bound(p, n + 1) == doctest::Approx(e * e * e / 4.0).epsilon(1e-6));
  }
  // Past the double range the limits are returned directly.
  CHECK(landen::error_bound(p, 40) == 0.0);
  CHECK(landen::closed_form_x(p, 40) == p.w);
}

TEST_CASE("error formula against the collapsed orbit") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 100; ++i) {
    const auto q = landen::testing::random_quadratic(rng);
    const auto p = *landen::params_from(q);
    double x = q.a() + q.c();
    for (std::size_t n = 0; n <= 8; ++n) {
      const double predicted = 1.0 + landen::error_bound(p, n);
      REQUIRE(std::fabs(x / p.w - predicted) <= 1e-12 * predicted);
      x = landen::collapsed_step(x, p.w);
    }
  }
}

TEST_CASE("convergence order of the Landen trace") {
  const auto trace = landen::trace_steps(Quadratic<double>(4, 3, 1), 4);
  const double order = landen::convergence_order(trace);
  CHECK(order >= 2.9);
  CHECK(order <= 3.1);

  // A double-precision orbit resolves only about three residuals before
  // rounding takes over; the extended backend keeps the whole tail.
  const auto wide = landen::trace_steps(landen::widen<landen::Extended>(Quadratic<double>(4, 3, 1)), 8);
  CHECK(landen::convergence_order(wide) == doctest::Approx(3.0).epsilon(0.01));

  std::mt19937_64 rng(34);
  for (int i = 0; i < 200; ++i) {
    const auto q = landen::testing::random_quadratic(rng);
    const double est =
        landen::convergence_order(landen::trace_steps(landen::widen<landen::Extended>(q), 8));
    REQUIRE(est >= 2.8);
    REQUIRE(est <= 3.2);
  }
}

TEST_CASE("convergence order from an exact rational trace") {
  const auto trace = landen::trace_steps(Quadratic<Rational>(Rational(4), Rational(3), Rational(1)), 6);
  CHECK(landen::convergence_order(trace) == doctest::Approx(3.0).epsilon(0.01));
}

TEST_CASE("fit window follows the backend precision") {
  CHECK(landen::default_fit_options<double>().floor == doctest::Approx(2.22e-14).epsilon(0.01));
  CHECK(landen::default_fit_options<landen::Extended>().floor < 1e-90);
  CHECK(landen::default_fit_options<Rational>().floor == 0.0);
}

TEST_CASE("convergence order of the AGM trace is quadratic") {
  const auto trace = landen::agm_trace(landen::AgmPair(1.0, std::sqrt(2.0)));
  const double order = landen::convergence_order(landen::relative_residuals(trace));
  CHECK(order >= 1.9);
  CHECK(order <= 2.1);
}

TEST_CASE("convergence order rejects degenerate data") {
  const std::vector<double> constant{0.3, 0.3, 0.3, 0.3};
  try {
    landen::convergence_order(constant);
    FAIL("expected insufficient-data");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInsufficientData);
  }
  const std::vector<double> short_trace{0.5, 0.01};
  CHECK_THROWS_AS(landen::convergence_order(short_trace), Error);
  // The fixed point yields a single row.
  CHECK_THROWS_AS(landen::convergence_order(landen::trace_steps(Quadratic<double>(1, 0, 1), 0)),
                  Error);
}

TEST_CASE("convergence order recovers synthetic rates") {
  for (double p : {1.5, 2.0, 3.0, 4.0}) {
    std::vector<double> r{0.5};
    while (r.back() > 1e-13) r.push_back(0.7 * std::pow(r.back(), p));
    CHECK(landen::convergence_order(r) == doctest::Approx(p).epsilon(1e-9));
  }
}
