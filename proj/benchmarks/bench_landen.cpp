#include <benchmark/benchmark.h>

#include <cmath>

#include "landen/landen.hpp"

namespace {

using landen::Quadratic;
using landen::Rational;

void BM_LandenStepDouble(benchmark::State& state) {
  const Quadratic<double> q(4, 3, 1);
  const Quadratic<double>* input = &q;
  for (auto _ : state) {
    benchmark::DoNotOptimize(input);
    benchmark::DoNotOptimize(landen::landen_step(*input));
  }
}
BENCHMARK(BM_LandenStepDouble);

void BM_LandenStepRational(benchmark::State& state) {
  // Coefficient bit lengths roughly triple per step, so cost depends on depth.
  auto q = Quadratic<Rational>(4, 3, 1);
  for (int i = 0; i < state.range(0); ++i) q = landen::landen_step(q);
  for (auto _ : state) benchmark::DoNotOptimize(landen::landen_step(q));
}
BENCHMARK(BM_LandenStepRational)->Arg(0)->Arg(2)->Arg(4);

void BM_IterateToTolerance(benchmark::State& state) {
  const Quadratic<double> q(3, 1, 5);
  for (auto _ : state) benchmark::DoNotOptimize(landen::iterate(q, 1e-14).limit);
}
BENCHMARK(BM_IterateToTolerance);

void BM_TableTrace(benchmark::State& state) {
  const Quadratic<double> q(4, 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(landen::trace_steps(q, 4));
}
BENCHMARK(BM_TableTrace);

void BM_Agm(benchmark::State& state) {
  const landen::AgmPair p(1.0, std::sqrt(2.0));
  for (auto _ : state) benchmark::DoNotOptimize(landen::agm(p));
}
BENCHMARK(BM_Agm);

void BM_EllipticByQuadrature(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(landen::elliptic_g_by_quadrature(1.0, 0.1).value);
}
BENCHMARK(BM_EllipticByQuadrature);

void BM_LineIntegralByQuadrature(benchmark::State& state) {
  const Quadratic<double> q(4, 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(landen::integrate_rational_line(q).value);
}
BENCHMARK(BM_LineIntegralByQuadrature);

void BM_Degree6(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(landen::iterate6({0.0, 0.0}).converged);
}
BENCHMARK(BM_Degree6);

}  // namespace

BENCHMARK_MAIN();
