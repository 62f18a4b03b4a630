#include <benchmark/benchmark.h>

#include "qortho/classify.hpp"
#include "qortho/families.hpp"
#include "qortho/quasi.hpp"
#include "qortho/roots.hpp"

namespace {

using qortho::Rational;

const Rational kQ(1, 2);

void BM_BuildSeries(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto spec = qortho::quasi_spec(qortho::PhiBig{2, Rational(1, 2), Rational(1, 2), Rational(3)}, n, kQ);
  for (auto _ : state) benchmark::DoNotOptimize(qortho::build_series(spec));
}
BENCHMARK(BM_BuildSeries)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_IsolateRoots(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p = qortho::quasi_poly(qortho::PhiSmall{1, Rational(1, 2), Rational(3)}, n, kQ);
  for (auto _ : state) benchmark::DoNotOptimize(qortho::isolate_roots(p));
}
BENCHMARK(BM_IsolateRoots)->Arg(4)->Arg(8)->Arg(12);

void BM_PrefactoredExpand(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const qortho::QuasiTargetId target = qortho::VarphiMeixner{2, Rational(1, 2), Rational(2), Rational(3)};
  for (auto _ : state) benchmark::DoNotOptimize(qortho::prefactored_expand(target, n, kQ));
}
BENCHMARK(BM_PrefactoredExpand)->Arg(4)->Arg(8);

void BM_DetectOrderDiscrete(benchmark::State& state) {
  const qortho::QuasiTargetId target = qortho::PhiBig{2, Rational(1, 2), Rational(1, 2), Rational(3)};
  for (auto _ : state) benchmark::DoNotOptimize(qortho::detect_order(target, 6, kQ));
}
BENCHMARK(BM_DetectOrderDiscrete)->Unit(benchmark::kMillisecond);

void BM_DetectOrderContinuous(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qortho::detect_order(qortho::LaguerreBelowRange{Rational(3)}, 6, kQ));
}
BENCHMARK(BM_DetectOrderContinuous)->Unit(benchmark::kMillisecond);

void BM_ClassifyZeros(benchmark::State& state) {
  const auto point = qortho::ParamPoint(kQ).with("a", Rational(1, 2)).with("b", Rational(1, 2)).with("u", Rational(3));
  for (auto _ : state) benchmark::DoNotOptimize(qortho::classify_zeros(qortho::ZeroTheorem::JacobiOrder1, 6, point));
}
BENCHMARK(BM_ClassifyZeros)->Unit(benchmark::kMillisecond);

}  // namespace

// The packaged benchmark_main archive carries LTO bytecode from another
// compiler release, so the entry point is defined here.
BENCHMARK_MAIN();
