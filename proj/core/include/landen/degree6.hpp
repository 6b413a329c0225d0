#pragma once

#include <cstddef>
#include <vector>

#include "landen/error.hpp"

namespace landen {

/// Denominator x^6 + a x^4 + b x^2 + 1.
struct Degree6Denominator {
  double a;
  double b;

  bool operator==(const Degree6Denominator&) const = default;
};

/// True iff x^6 + a x^4 + b x^2 + 1 > 0 for every real x, i.e. the
/// cubic u^3 + a u^2 + b u + 1 has no root with u >= 0.
bool in_convergence_region(const Degree6Denominator& s);

/// a' = (a b + 5a + 5b + 9) / (a + b + 2)^{4/3},
/// b' = (a + b + 6) / (a + b + 2)^{2/3}.
/// Throws invalid-input when a + b + 2 <= 0.
Degree6Denominator step6(const Degree6Denominator& s);

struct Degree6Result {
  bool converged = false;
  bool in_region = false;
  std::vector<Degree6Denominator> rows;
};

inline constexpr std::size_t kDefaultDegree6MaxIterations = 50;

/// Iterates step6 until |a_n - 3| + |b_n - 3| <= tol. Starting points outside
/// the convergence region are reported as not converged without iterating.
Degree6Result iterate6(const Degree6Denominator& s, double tol = 1e-10,
                       std::size_t max_iter = kDefaultDegree6MaxIterations);

/// |a_n - 3| + |b_n - 3| per row.
std::vector<double> distances_to_fixed_point(const Degree6Result& result);

}  // namespace landen
