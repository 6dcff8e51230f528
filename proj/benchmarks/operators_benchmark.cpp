#include <benchmark/benchmark.h>

#include "springer_rca/linalg.hpp"
#include "springer_rca/rca_operators.hpp"
#include "springer_rca/semigroup_oracle.hpp"
#include "springer_rca/verification.hpp"

using namespace springer_rca;

static void BM_BuildBasis(benchmark::State& state) {
  const Params p(4, 5);
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_graded_basis(p, d));
}
BENCHMARK(BM_BuildBasis)->Arg(12)->Arg(20)->Arg(28);

static void BM_OperatorX(benchmark::State& state) {
  const auto basis = make_basis(Params(4, 5), static_cast<int>(state.range(0)));
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(operator_X(basis, threads));
}
BENCHMARK(BM_OperatorX)->Args({16, 1})->Args({16, 4})->Args({24, 1})->Args({24, 4})->Unit(benchmark::kMillisecond);

static void BM_DressedE2(benchmark::State& state) {
  const auto basis = make_basis(Params(4, 5), static_cast<int>(state.range(0)));
  const auto f = DressPolynomial::elementary_symmetric(4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(operator_E(2, f, basis));
}
BENCHMARK(BM_DressedE2)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_WeylCommutator(benchmark::State& state) {
  const auto basis = make_basis(Params(4, 5), static_cast<int>(state.range(0)));
  const auto x = operator_X(basis);
  const auto y = operator_Y(basis);
  for (auto _ : state) benchmark::DoNotOptimize(commutator(x, y));
}
BENCHMARK(BM_WeylCommutator)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_KernelY(benchmark::State& state) {
  const Params p(4, 5);
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_Y(p, static_cast<int>(state.range(0)), threads));
}
BENCHMARK(BM_KernelY)->Args({16, 1})->Args({20, 1})->Args({20, 4})->Unit(benchmark::kMillisecond);

static void BM_SemigroupIdeals(benchmark::State& state) {
  const int colength = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_ideals(4, 5, colength));
}
BENCHMARK(BM_SemigroupIdeals)->Arg(10)->Arg(16)->Arg(22);

BENCHMARK_MAIN();
