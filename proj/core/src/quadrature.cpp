#include "landen/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <algorithm>
#include <string>
#include <vector>

namespace landen {
namespace {

// Kronrod abscissae on [0, 1]; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo;
  double hi;
  double value;
  double error;

  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod(const std::function<double(double)>& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(center);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  double magnitude = kWgk[7] * std::fabs(fc);
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double left = f(center - dx);
    const double right = f(center + dx);
    kronrod += kWgk[j] * (left + right);
    magnitude += kWgk[j] * (std::fabs(left) + std::fabs(right));
    if (j % 2 == 1) gauss += kWg[j / 2] * (left + right);
  }
  kronrod *= half;
  gauss *= half;
  magnitude *= std::fabs(half);
  // K15 and G7 can agree to the last bit on smooth panels; never claim more
  // accuracy than the summation itself carries.
  const double roundoff = 4.0 * std::numeric_limits<double>::epsilon() * magnitude;
  return Panel{lo, hi, kronrod, std::max(std::fabs(kronrod - gauss), roundoff)};
}

void check_tripled_form(const TripledForm& e) {
  if (!(e[0] > 0.0) || !(e[2] > 0.0) || !(4.0 * e[0] * e[2] - e[1] * e[1] > 0.0)) {
    throw Error(ErrorKind::kInvalidInput,
                "tripled-angle form must be positive definite");
  }
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, double tol, std::size_t max_intervals) {
  if (!(tol > 0.0)) {
    throw Error(ErrorKind::kInvalidInput, "quadrature tolerance must be positive");
  }
  std::vector<Panel> heap{gauss_kronrod(f, lo, hi)};
  std::size_t evaluations = 15;
  const auto resum = [&heap](double& value, double& error) {
    value = 0.0;
    error = 0.0;
    for (const Panel& p : heap) {
      value += p.value;
      error += p.error;
    }
  };
  double value = heap.front().value;
  double error = heap.front().error;
  while (true) {
    if (error <= tol) {
      // The running sums accumulate cancellation; confirm before stopping.
      resum(value, error);
      if (error <= tol) break;
    }
    if (heap.size() >= max_intervals) {
      throw Error(ErrorKind::kToleranceNotMet,
                  "error estimate " + std::to_string(error) + " above " +
                      std::to_string(tol) + " after " +
                      std::to_string(max_intervals) + " intervals");
    }
    std::pop_heap(heap.begin(), heap.end());
    const Panel worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.lo + worst.hi);
    const Panel left = gauss_kronrod(f, worst.lo, mid);
    const Panel right = gauss_kronrod(f, mid, worst.hi);
    evaluations += 30;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end());
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end());
  }
  return QuadratureResult{value, error, evaluations};
}

QuadratureResult integrate_rational_line(const Quadratic<double>& q, double tol) {
  const double a = q.a();
  const double b = q.b();
  const double c = q.c();
  const auto integrand = [a, b, c](double theta) {
    const double x = std::tan(theta);
    return (1.0 + x * x) / ((a * x + b) * x + c);
  };
  return integrate(integrand, -0.5 * std::numbers::pi, 0.5 * std::numbers::pi, tol);
}

QuadratureResult integrate_trig_form(const Quadratic<double>& q, double tol) {
  const double a = q.a();
  const double b = q.b();
  const double c = q.c();
  const auto integrand = [a, b, c](double theta) {
    const double s = std::sin(theta);
    const double co = std::cos(theta);
    return 1.0 / (a * s * s + b * s * co + c * co * co);
  };
  return integrate(integrand, -0.5 * std::numbers::pi, 0.5 * std::numbers::pi, tol);
}

QuadratureResult mode_integral(FourierMode mode, int k, const TripledForm& e,
                               double lo, double hi, double tol) {
  check_tripled_form(e);
  const auto integrand = [mode, k, e](double theta) {
    const double s3 = std::sin(3.0 * theta);
    const double c3 = std::cos(3.0 * theta);
    const double num = mode == FourierMode::kSine ? std::sin(k * theta)
                                                  : std::cos(k * theta);
    return num / (e[0] * s3 * s3 + e[1] * s3 * c3 + e[2] * c3 * c3);
  };
  return integrate(integrand, lo, hi, tol);
}

QuadratureResult s_integral(int k, const TripledForm& e, double tol) {
  if (k != 2 && k != 4) {
    throw Error(ErrorKind::kInvalidInput, "S_k is defined for k in {2, 4}");
  }
  return mode_integral(FourierMode::kSine, k, e, -0.5 * std::numbers::pi,
                       0.5 * std::numbers::pi, tol);
}

QuadratureResult c_integral(int k, const TripledForm& e, double tol) {
  if (k != 0 && k != 2 && k != 4) {
    throw Error(ErrorKind::kInvalidInput, "C_k is defined for k in {0, 2, 4}");
  }
  return mode_integral(FourierMode::kCosine, k, e, -0.5 * std::numbers::pi,
                       0.5 * std::numbers::pi, tol);
}

}  // namespace landen
