#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>

#include "cli/cli.hpp"
#include "landen/landen.hpp"

namespace landen::cli {

Report run_verify(const RunConfig& config);

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

std::string strip_zeros(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  return first == std::string_view::npos ? "0" : std::string(digits.substr(first));
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto fail = [&text]() -> Rational {
    throw Error(ErrorKind::kInvalidInput, "cannot parse number '" + text + "'");
  };
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return fail();
    const std::string num_text = strip_zeros(num);
    const std::string den_text = strip_zeros(den);
    const boost::multiprecision::cpp_int d{den_text.c_str()};
    if (d == 0) return fail();
    value = Rational(boost::multiprecision::cpp_int{num_text.c_str()}, d);
  } else {
    long exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      const auto exp_text = s.substr(e + 1);
      const auto [ptr, ec] = std::from_chars(exp_text.data() + (exp_text.starts_with('+') ? 1 : 0),
                                             exp_text.data() + exp_text.size(), exponent);
      if (ec != std::errc{} || ptr != exp_text.data() + exp_text.size()) return fail();
      s = s.substr(0, e);
    }
    std::string digits;
    if (const auto dot = s.find('.'); dot != std::string_view::npos) {
      const auto whole = s.substr(0, dot);
      const auto frac = s.substr(dot + 1);
      if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
          (whole.empty() && frac.empty())) {
        return fail();
      }
      digits = std::string(whole) + std::string(frac);
      exponent -= static_cast<long>(frac.size());
    } else {
      if (!all_digits(s)) return fail();
      digits = std::string(s);
    }
    if (std::labs(exponent) > 4000) return fail();
    const boost::multiprecision::cpp_int ten_power =
        boost::multiprecision::pow(boost::multiprecision::cpp_int(10),
                                   static_cast<unsigned>(std::labs(exponent)));
    // cpp_int reads a leading zero as an octal prefix.
    const std::string mantissa_text = strip_zeros(digits);
    const boost::multiprecision::cpp_int mantissa{mantissa_text.c_str()};
    value = exponent >= 0 ? Rational(mantissa * ten_power) : Rational(mantissa, ten_power);
  }
  return negative ? Rational(-value) : value;
}

double parse_double(const std::string& text) {
  if (text.find('/') != std::string::npos) return to_double(parse_rational(text));
  double value = 0.0;
  const char* first = text.data() + (text.starts_with('+') ? 1 : 0);
  const auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw Error(ErrorKind::kInvalidInput, "cannot parse number '" + text + "'");
  }
  return value;
}

namespace {

Value exact(const Rational& x) { return to_exact_string(x); }

template <Field Real>
Table trace_table(const IterationTrace<Real>& trace) {
  Table table{{"n", "a", "b", "c", "residual"}, {}};
  for (const auto& row : trace.rows) {
    if constexpr (std::is_same_v<Real, double>) {
      table.rows.push_back({static_cast<std::int64_t>(row.n), row.state.a(), row.state.b(),
                            row.state.c(), row.residual});
    } else {
      table.rows.push_back({static_cast<std::int64_t>(row.n), exact(row.state.a()),
                            exact(row.state.b()), exact(row.state.c()), exact(row.residual)});
    }
  }
  return table;
}

Report eval_quad(const RunConfig& config) {
  const Quadratic<double> q(parse_double(config.a), parse_double(config.b), parse_double(config.c));
  const auto result = iterate(q, config.tol, config.max_iter);
  const auto oracle = integrate_rational_line(q, std::max(config.tol, 1e-13));
  Report report;
  report.params = {{"a", q.a()}, {"b", q.b()}, {"c", q.c()}, {"tol", config.tol}};
  report.scalars = {{"iterated", std::numbers::pi / result.limit},
                    {"closed_form", integral_value(q)},
                    {"quadrature", oracle.value},
                    {"limit", result.limit},
                    {"steps", static_cast<std::int64_t>(result.trace.steps())}};
  return report;
}

template <Field Real>
Report trace_quad_with(const RunConfig& config, const Quadratic<Real>& q) {
  IterationTrace<Real> trace;
  if (config.iters) {
    trace = trace_steps(q, *config.iters);
  } else {
    trace = iterate(q, Real(config.tol), config.max_iter).trace;
  }
  Report report;
  if constexpr (std::is_same_v<Real, double>) {
    report.params = {{"a", q.a()}, {"b", q.b()}, {"c", q.c()}};
  } else {
    report.params = {{"a", exact(q.a())}, {"b", exact(q.b())}, {"c", exact(q.c())}};
  }
  report.params.emplace_back("backend", std::string(to_string(config.backend)));
  if (config.iters) {
    report.params.emplace_back("iters", static_cast<std::int64_t>(*config.iters));
  } else {
    report.params.emplace_back("tol", config.tol);
    report.params.emplace_back("max_iter", static_cast<std::int64_t>(config.max_iter));
  }
  report.table = trace_table(trace);
  if constexpr (std::is_same_v<Real, double>) {
    report.scalars.emplace_back("limit", trace.last().a());
  } else {
    report.scalars.emplace_back("limit", exact(trace.last().a()));
  }
  report.scalars.emplace_back("closed_form", 0.5 * std::sqrt(to_double(discriminant(q))));
  return report;
}

Report trace_quad(const RunConfig& config) {
  if (config.backend == Backend::kRational) {
    return trace_quad_with(config, Quadratic<Rational>(parse_rational(config.a),
                                                       parse_rational(config.b),
                                                       parse_rational(config.c)));
  }
  return trace_quad_with(config, Quadratic<double>(parse_double(config.a), parse_double(config.b),
                                                   parse_double(config.c)));
}

Report agm_mode(const RunConfig& config) {
  const AgmPair p(parse_double(config.a), parse_double(config.b));
  const AgmTrace trace = agm_trace(p, config.tol);
  Report report;
  report.params = {{"a", p.a}, {"b", p.b}, {"tol", config.tol}};
  Table table{{"n", "a", "b", "gap"}, {}};
  for (std::size_t n = 0; n < trace.rows.size(); ++n) {
    const auto& row = trace.rows[n];
    table.rows.push_back({static_cast<std::int64_t>(n), row.a, row.b, std::fabs(row.a - row.b)});
  }
  report.table = std::move(table);
  report.scalars = {{"agm", trace.rows.back().a},
                    {"steps", static_cast<std::int64_t>(trace.rows.size() - 1)}};
  try {
    report.scalars.emplace_back("order", convergence_order(relative_residuals(trace)));
  } catch (const Error&) {
    // Too few steps to fit a rate; omit rather than fail.
  }
  return report;
}

Report elliptic_mode(const RunConfig& config) {
  const AgmPair p(parse_double(config.a), parse_double(config.b));
  const double g = elliptic_g(p.a, p.b);
  const auto quad = elliptic_g_by_quadrature(p.a, p.b, std::max(config.tol, 1e-13));
  const double major = std::max(p.a, p.b);
  const double minor = std::min(p.a, p.b);
  const double k = std::sqrt((1.0 - minor / major) * (1.0 + minor / major));
  Report report;
  report.params = {{"a", p.a}, {"b", p.b}};
  report.scalars = {{"g_agm", g},
                    {"g_quadrature", quad.value},
                    {"quadrature_error", quad.error_estimate},
                    {"difference", g - quad.value},
                    {"k", k},
                    {"elliptic_k", major * g}};
  return report;
}

Report lemniscate_mode(const RunConfig&) {
  const auto check = lemniscate_check();
  const double diff = check.agm_value - check.integral_value;
  Report report;
  report.scalars = {{"agm_value", check.agm_value},
                    {"integral_value", check.integral_value},
                    {"difference", diff},
                    {"agree_to_11_decimals", std::fabs(diff) < 5e-12}};
  return report;
}

Report degree6_mode(const RunConfig& config) {
  const Degree6Denominator start{parse_double(config.a), parse_double(config.b)};
  const auto result = iterate6(start, config.tol, config.max_iter);
  const auto distances = distances_to_fixed_point(result);
  Report report;
  report.params = {{"a", start.a}, {"b", start.b}, {"tol", config.tol}};
  Table table{{"n", "a", "b", "distance"}, {}};
  for (std::size_t n = 0; n < result.rows.size(); ++n) {
    table.rows.push_back(
        {static_cast<std::int64_t>(n), result.rows[n].a, result.rows[n].b, distances[n]});
  }
  report.table = std::move(table);
  report.scalars = {{"in_region", result.in_region},
                    {"converged", result.converged},
                    {"steps", static_cast<std::int64_t>(result.rows.size() - 1)}};
  try {
    report.scalars.emplace_back("order", convergence_order(distances, {1e-14, 2.0}));
  } catch (const Error&) {
  }
  report.success = result.converged;
  return report;
}

}  // namespace

Report execute(const RunConfig& config) {
  validate(config);
  switch (config.mode) {
    case Mode::kEvalQuad: return eval_quad(config);
    case Mode::kTraceQuad: return trace_quad(config);
    case Mode::kAgm: return agm_mode(config);
    case Mode::kElliptic: return elliptic_mode(config);
    case Mode::kLemniscate: return lemniscate_mode(config);
    case Mode::kDegree6: return degree6_mode(config);
    case Mode::kVerify: return run_verify(config);
  }
  throw Error(ErrorKind::kInvalidInput, "unknown mode");
}

int run(const RunConfig& config, std::ostream& out) {
  const Report report = execute(config);
  render(report, config.format, out);
  return report.success ? 0 : 1;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const ParseOutcome parsed = parse_command_line(argc, argv, out, err);
  if (!parsed.config) return parsed.exit_code;
  try {
    return run(*parsed.config, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace landen::cli
