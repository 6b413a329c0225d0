#pragma once

#include <cmath>
#include <concepts>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace landen {

// Exact rational backend. Every rational map in the library is instantiated
// for double and Rational; Extended covers high-precision traces.
using Rational = boost::multiprecision::number<
    boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

// 100 decimal digits of binary floating point, for traces that must resolve
// residuals far below double epsilon.
using Extended = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<100>, boost::multiprecision::et_off>;

inline double to_double(double x) { return x; }

template <typename Backend, boost::multiprecision::expression_template_option Et>
double to_double(const boost::multiprecision::number<Backend, Et>& x) {
  return x.template convert_to<double>();
}

inline double abs_value(double x) { return std::fabs(x); }

template <typename Backend, boost::multiprecision::expression_template_option Et>
boost::multiprecision::number<Backend, Et> abs_value(
    const boost::multiprecision::number<Backend, Et>& x) {
  return boost::multiprecision::abs(x);
}

// "p/q" (or "p" for integers); always exact.
inline std::string to_exact_string(const Rational& x) { return x.str(); }

template <typename Real>
concept Field = requires(Real x, Real y) {
  { x + y } -> std::convertible_to<Real>;
  { x - y } -> std::convertible_to<Real>;
  { x * y } -> std::convertible_to<Real>;
  { x / y } -> std::convertible_to<Real>;
  { x < y } -> std::convertible_to<bool>;
};

}  // namespace landen
