#include "landen/quadratic.hpp"

#include <cmath>
#include <numbers>

namespace landen {

double integral_value(const Quadratic<double>& q) {
  return 2.0 * std::numbers::pi / std::sqrt(discriminant(q));
}

double evaluate_by_iteration(const Quadratic<double>& q, double tol,
                             std::size_t max_iter) {
  return std::numbers::pi / iterate(q, tol, max_iter).limit;
}

template class Quadratic<double>;
template class Quadratic<Rational>;
template class Quadratic<Extended>;

}  // namespace landen
