#include <benchmark/benchmark.h>

#include "schwarzian/calculus.hpp"
#include "schwarzian/modular.hpp"
#include "schwarzian/periods.hpp"
#include "schwarzian/rng.hpp"

using namespace schwarzian;

namespace {

void BM_PolyMul(benchmark::State& state) {
  Rng rng(1);
  const Poly a = random_poly(rng, static_cast<int>(state.range(0)));
  const Poly b = random_poly(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMul)->Arg(8)->Arg(32)->Arg(64);

void BM_PolyGcdCoprime(benchmark::State& state) {
  Rng rng(2);
  const Poly a = random_nonzero_poly(rng, static_cast<int>(state.range(0)));
  const Poly b = random_nonzero_poly(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Poly::gcd(a, b));
}
BENCHMARK(BM_PolyGcdCoprime)->Arg(8)->Arg(32);

void BM_PolyGcdSharedFactor(benchmark::State& state) {
  Rng rng(3);
  const Poly c = random_nonzero_poly(rng, static_cast<int>(state.range(0)));
  const Poly a = random_nonzero_poly(rng, 4) * c;
  const Poly b = random_nonzero_poly(rng, 4) * c;
  for (auto _ : state) benchmark::DoNotOptimize(Poly::gcd(a, b));
}
BENCHMARK(BM_PolyGcdSharedFactor)->Arg(8)->Arg(24);

void BM_RatFuncDerivative(benchmark::State& state) {
  const CoeffPair pair = genus2_pair();
  for (auto _ : state) benchmark::DoNotOptimize(pair.A.at(0, 0).derivative());
}
BENCHMARK(BM_RatFuncDerivative);

void BM_MatrixSchwarzianGenus2(benchmark::State& state) {
  const CoeffPair pair = genus2_pair();
  for (auto _ : state) benchmark::DoNotOptimize(matrix_schwarzian(pair));
}
BENCHMARK(BM_MatrixSchwarzianGenus2);

void BM_GaugeTransform(benchmark::State& state) {
  Rng rng(4);
  const CoeffPair pair(random_matrix(rng, 2), random_matrix(rng, 2));
  const RatMat g = random_invertible_matrix(rng, 2);
  for (auto _ : state) benchmark::DoNotOptimize(gauge_transform(g, pair));
}
BENCHMARK(BM_GaugeTransform);

void BM_ScalarSchwarzian(benchmark::State& state) {
  Rng rng(5);
  const RatFunc f = random_nonconstant_ratfunc(rng, 4);
  for (auto _ : state) benchmark::DoNotOptimize(scalar_schwarzian(f));
}
BENCHMARK(BM_ScalarSchwarzian);

void BM_EllipticPipeline(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dedekind_pipeline());
}
BENCHMARK(BM_EllipticPipeline);

void BM_Eisenstein(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eisenstein(4, order));
}
BENCHMARK(BM_Eisenstein)->Arg(64)->Arg(256);

void BM_DeltaProduct(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(delta(order, DeltaMethod::Product));
}
BENCHMARK(BM_DeltaProduct)->Arg(64)->Arg(128);

void BM_ChazyCheck(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chazy_check(order));
}
BENCHMARK(BM_ChazyCheck)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
