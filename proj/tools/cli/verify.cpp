#include <cmath>
#include <random>
#include <string>

#include "cli/cli.hpp"
#include "landen/landen.hpp"

namespace landen::cli {
namespace {

struct SuiteResult {
  std::string name;
  std::int64_t passed = 0;
  std::int64_t failed = 0;

  void record(bool ok) { ok ? ++passed : ++failed; }
};

Quadratic<double> random_quadratic(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coeff(1e-3, 10.0);
  std::uniform_real_distribution<double> frac(-0.99, 0.99);
  const double a = coeff(rng);
  const double c = coeff(rng);
  return Quadratic<double>(a, frac(rng) * 2.0 * std::sqrt(a * c), c);
}

Quadratic<Rational> random_rational_quadratic(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 200);
  std::uniform_int_distribution<int> signed_num(-400, 400);
  std::uniform_int_distribution<int> den(1, 50);
  while (true) {
    const Rational a(num(rng), den(rng));
    const Rational b(signed_num(rng), den(rng));
    const Rational c(num(rng), den(rng));
    if (Rational(4) * a * c - b * b > 0) return Quadratic<Rational>(a, b, c);
  }
}

SuiteResult discriminant_suite(std::size_t samples, std::mt19937_64& rng) {
  SuiteResult r{"discriminant"};
  for (std::size_t i = 0; i < samples; ++i) {
    const auto q = random_rational_quadratic(rng);
    r.record(discriminant(landen_step(q)) == discriminant(q));
    const auto f = random_quadratic(rng);
    const double before = discriminant(f);
    r.record(std::fabs(discriminant(landen_step(f)) - before) / before < 1e-13);
  }
  return r;
}

SuiteResult identity_suite(std::size_t samples, std::mt19937_64& rng) {
  SuiteResult r{"identity"};
  for (std::size_t i = 0; i < samples; ++i) {
    const auto q = random_rational_quadratic(rng);
    r.record(verify_polynomial_identity(q, scaling_from(q)) == 0);
    r.record(next_quadratic_via_normalization(q) == landen_step(q));
  }
  return r;
}

SuiteResult vanishing_suite(std::size_t samples, std::mt19937_64& rng) {
  SuiteResult r{"vanishing"};
  for (std::size_t i = 0; i < samples; ++i) {
    const auto s = scaling_from(random_quadratic(rng));
    const TripledForm e{s.e[0], s.e[1], s.e[2]};
    for (int k : {2, 4}) {
      r.record(std::fabs(s_integral(k, e).value) < 1e-9);
      r.record(std::fabs(c_integral(k, e).value) < 1e-9);
    }
  }
  return r;
}

SuiteResult gauss_suite(std::size_t samples, std::mt19937_64& rng) {
  SuiteResult r{"gauss"};
  std::uniform_real_distribution<double> u(1e-2, 10.0);
  for (std::size_t i = 0; i < samples; ++i) {
    const double a = u(rng);
    const double b = u(rng);
    r.record(std::fabs(elliptic_g(a, b) - elliptic_g(0.5 * (a + b), std::sqrt(a * b))) < 1e-12);
  }
  return r;
}

SuiteResult conjugacy_suite(std::size_t samples, std::mt19937_64& rng) {
  SuiteResult r{"conjugacy"};
  for (std::size_t i = 0; i < samples; ++i) {
    const auto q = random_rational_quadratic(rng);
    const auto reduced = to_reduced(q);
    const auto stepped = reduced_step(reduced);
    r.record(to_reduced(landen_step(q)) == stepped && stepped.invariant() == reduced.invariant());
  }
  return r;
}

SuiteResult invariance_suite(std::size_t samples, std::mt19937_64& rng) {
  SuiteResult r{"invariance"};
  for (std::size_t i = 0; i < samples; ++i) {
    const auto q = random_quadratic(rng);
    const double before = integrate_rational_line(q).value;
    const double after = integrate_rational_line(landen_step(q)).value;
    r.record(std::fabs(before - after) < 2e-9);
  }
  return r;
}

SuiteResult closed_form_suite(std::size_t samples, std::mt19937_64& rng) {
  SuiteResult r{"closed-form"};
  for (std::size_t i = 0; i < samples; ++i) {
    const auto q = random_quadratic(rng);
    const auto p = params_from(q);
    if (!p) continue;
    double x = q.a() + q.c();
    bool ok = true;
    for (std::size_t n = 0; n <= 8; ++n) {
      ok = ok && std::fabs(closed_form_x(*p, n) - x) < 1e-12 * p->w;
      const double predicted = 1.0 + error_bound(*p, n);
      ok = ok && std::fabs(x / p->w - predicted) <= 1e-12 * predicted;
      x = collapsed_step(x, p->w);
    }
    r.record(ok);
  }
  return r;
}

}  // namespace

Report run_verify(const RunConfig& config) {
  using SuiteFn = SuiteResult (*)(std::size_t, std::mt19937_64&);
  const std::pair<const char*, SuiteFn> suites[] = {
      {"discriminant", discriminant_suite}, {"identity", identity_suite},
      {"vanishing", vanishing_suite},       {"gauss", gauss_suite},
      {"conjugacy", conjugacy_suite},       {"invariance", invariance_suite},
      {"closed-form", closed_form_suite}};

  Report report;
  report.params = {{"suite", config.suite},
                   {"samples", static_cast<std::int64_t>(config.samples)},
                   {"seed", static_cast<std::int64_t>(config.seed)}};
  Table table{{"suite", "passed", "failed", "status"}, {}};
  std::int64_t total_passed = 0;
  std::int64_t total_failed = 0;
  for (const auto& [name, fn] : suites) {
    if (config.suite != "all" && config.suite != name) continue;
    // Each suite gets its own stream so results do not depend on which
    // other suites were selected.
    std::mt19937_64 rng(config.seed ^ std::hash<std::string>{}(name));
    const SuiteResult r = fn(config.samples, rng);
    table.rows.push_back({r.name, r.passed, r.failed, std::string(r.failed ? "FAIL" : "PASS")});
    total_passed += r.passed;
    total_failed += r.failed;
  }
  report.table = std::move(table);
  report.scalars = {{"passed", total_passed}, {"failed", total_failed}};
  report.success = total_failed == 0;
  return report;
}

}  // namespace landen::cli
