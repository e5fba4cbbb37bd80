#include <benchmark/benchmark.h>

#include "cuspidal/classifier.hpp"
#include "cuspidal/constructor.hpp"
#include "cuspidal/cremona.hpp"
#include "cuspidal/curve.hpp"
#include "cuspidal/factor.hpp"

using namespace cuspidal;

static void BM_Classify(benchmark::State& state) {
  int dmax = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classify(6, dmax));
}
BENCHMARK(BM_Classify)->Arg(15)->Arg(23)->Arg(31);

static void BM_SolveFG(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_fg(k));
}
BENCHMARK(BM_SolveFG)->Arg(3)->Arg(6)->Arg(10);

static void BM_VerifyCurve(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  CurveParameterization c = make_curve(k).parameterization;
  MultiplicitySequence big{2 * k};
  big.insert(big.end(), k, 2);
  std::vector<std::pair<P1Point, MultiplicitySequence>> expected{
      {P1Point::infinity(), big},
      {P1Point::affine(0), MultiplicitySequence(k, 3)},
      {P1Point::affine(1), {2}}};
  for (auto _ : state) benchmark::DoNotOptimize(verify_curve(c, expected));
}
BENCHMARK(BM_VerifyCurve)->Arg(2)->Arg(4)->Arg(6);

static void BM_ForwardOrbit(benchmark::State& state) {
  int steps = static_cast<int>(state.range(0));
  for (auto _ : state) {
    MarkedCurve mc = cubic_seed();
    for (int i = 0; i < steps; ++i) mc = forward_step(mc);
    benchmark::DoNotOptimize(mc);
  }
}
BENCHMARK(BM_ForwardOrbit)->Arg(1)->Arg(3)->Arg(5);

static void BM_FactorSwinnertonDyer(benchmark::State& state) {
  // t^4 - 10 t^2 + 1: reducible mod every prime, irreducible over Q
  UniPoly f(std::vector<Rational>{1, 0, -10, 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(factor_unipoly(f));
}
BENCHMARK(BM_FactorSwinnertonDyer);

BENCHMARK_MAIN();
