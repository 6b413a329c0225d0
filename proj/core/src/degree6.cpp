#include "landen/degree6.hpp"

#include <cmath>

namespace landen {

bool in_convergence_region(const Degree6Denominator& s) {
  // p(u) = u^3 + a u^2 + b u + 1 with p(0) = 1; p grows without bound, so it
  // stays positive on u >= 0 iff it is positive at every critical point there.
  const auto p = [&s](double u) { return ((u + s.a) * u + s.b) * u + 1.0; };
  const double disc = s.a * s.a - 3.0 * s.b;  // p'(u) = 3u^2 + 2a u + b
  if (disc < 0.0) return true;
  const double root = std::sqrt(disc);
  for (double u : {(-s.a - root) / 3.0, (-s.a + root) / 3.0}) {
    if (u > 0.0 && !(p(u) > 0.0)) return false;
  }
  return true;
}

Degree6Denominator step6(const Degree6Denominator& s) {
  const double base = s.a + s.b + 2.0;
  if (!(base > 0.0)) {
    throw Error(ErrorKind::kInvalidInput, "a + b + 2 must be positive");
  }
  const double cube_root = std::cbrt(base);
  const double two_thirds = cube_root * cube_root;
  const double four_thirds = two_thirds * two_thirds;
  return Degree6Denominator{(s.a * s.b + 5.0 * s.a + 5.0 * s.b + 9.0) / four_thirds,
                            (s.a + s.b + 6.0) / two_thirds};
}

Degree6Result iterate6(const Degree6Denominator& s, double tol, std::size_t max_iter) {
  if (!(tol > 0.0)) {
    throw Error(ErrorKind::kInvalidInput, "tolerance must be positive");
  }
  Degree6Result result;
  result.rows.push_back(s);
  result.in_region = in_convergence_region(s);
  if (!result.in_region) return result;
  const auto distance = [](const Degree6Denominator& r) {
    return std::fabs(r.a - 3.0) + std::fabs(r.b - 3.0);
  };
  while (distance(result.rows.back()) > tol) {
    if (result.rows.size() > max_iter) return result;
    result.rows.push_back(step6(result.rows.back()));
  }
  result.converged = true;
  return result;
}

std::vector<double> distances_to_fixed_point(const Degree6Result& result) {
  std::vector<double> out;
  out.reserve(result.rows.size());
  for (const auto& r : result.rows) {
    out.push_back(std::fabs(r.a - 3.0) + std::fabs(r.b - 3.0));
  }
  return out;
}

}  // namespace landen
