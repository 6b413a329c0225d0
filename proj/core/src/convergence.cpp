#include "landen/convergence.hpp"

#include <cmath>
#include <limits>

namespace landen {
namespace {

// 2 t 3^n, or nullopt if exp() of it would overflow.
std::optional<double> scaled_exponent(const ConvergenceParams& p, std::size_t n) {
  const double max_log = std::log(std::numeric_limits<double>::max());
  double v = 2.0 * p.t;
  for (std::size_t i = 0; i < n; ++i) {
    v *= 3.0;
    if (v > max_log) return std::nullopt;
  }
  if (v > max_log) return std::nullopt;
  return v;
}

}  // namespace

std::optional<ConvergenceParams> params_from(const Quadratic<double>& q) {
  const double w = std::sqrt(discriminant(q));
  const double d = (q.a() + q.c()) / w;
  if (!(d > 1.0)) return std::nullopt;
  // arccoth(d) = log((d + 1) / (d - 1)) / 2 = log1p(2 / (d - 1)) / 2.
  const double t = 0.5 * std::log1p(2.0 / (d - 1.0));
  return ConvergenceParams{w, d, t};
}

double closed_form_x(const ConvergenceParams& p, std::size_t n) {
  return p.w * (1.0 + error_bound(p, n));
}

double error_bound(const ConvergenceParams& p, std::size_t n) {
  const auto v = scaled_exponent(p, n);
  if (!v) return 0.0;
  return 2.0 / std::expm1(*v);
}

double convergence_order(std::span<const double> residuals,
                         const OrderFitOptions& options) {
  const auto usable = [&](double r) {
    return std::isfinite(r) && r > 0.0 && r >= options.floor && r <= options.ceiling;
  };
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t i = 0; i + 1 < residuals.size(); ++i) {
    if (usable(residuals[i]) && usable(residuals[i + 1])) {
      xs.push_back(std::log(residuals[i]));
      ys.push_back(std::log(residuals[i + 1]));
    }
  }
  if (xs.size() < 2) {
    throw Error(ErrorKind::kInsufficientData,
                "need at least two consecutive residual pairs inside the fit window");
  }
  const double count = static_cast<double>(xs.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= count;
  mean_y /= count;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
  }
  if (!(sxx > 1e-12 * count)) {
    throw Error(ErrorKind::kInsufficientData, "residuals do not vary; slope undefined");
  }
  return sxy / sxx;
}

}  // namespace landen
