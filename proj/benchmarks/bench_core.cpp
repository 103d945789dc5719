#include <benchmark/benchmark.h>

#include "harness.hpp"
#include "qmono/inequalities.hpp"
#include "qmono/measures.hpp"
#include "qmono/rng.hpp"
#include "qmono/schmidt.hpp"

namespace {

using namespace qmono;

void BM_PartialTracePair(benchmark::State& state) {
  const PureState psi = haar_random_pure(static_cast<int>(state.range(0)), 1);
  const int keep[] = {0, 1};
  for (auto _ : state) benchmark::DoNotOptimize(partial_trace(psi, keep));
}
BENCHMARK(BM_PartialTracePair)->DenseRange(3, 10, 1);

void BM_HermitianEig(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const PureState psi = haar_random_pure(12, 2);
  std::vector<int> keep;
  for (std::size_t q = 0; (std::size_t{1} << q) < d; ++q) keep.push_back(static_cast<int>(q));
  const ComplexMatrix rho = partial_trace(psi, keep).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(rho));
}
BENCHMARK(BM_HermitianEig)->RangeMultiplier(2)->Range(2, 64);

void BM_RSpectrum(benchmark::State& state) {
  const DensityMatrix rho = random_mixed_two_qubit(3);
  for (auto _ : state) benchmark::DoNotOptimize(r_spectrum(rho));
}
BENCHMARK(BM_RSpectrum);

void BM_DiscriminantDirect(benchmark::State& state) {
  const PureState psi = haar_random_pure(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(discriminant_direct(psi));
}
BENCHMARK(BM_DiscriminantDirect)->DenseRange(3, 10, 1);

void BM_DiscriminantViaAlpha(benchmark::State& state) {
  const SchmidtForm sf = schmidt_cut(haar_random_pure(static_cast<int>(state.range(0)), 5));
  for (auto _ : state) benchmark::DoNotOptimize(discriminant_via_alpha(AlphaTable(sf)));
}
BENCHMARK(BM_DiscriminantViaAlpha)->DenseRange(3, 8, 1);

void BM_FuzzSample(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CheckOptions opt;
  std::uint64_t i = 0;
  for (auto _ : state) {
    const PureState psi = haar_random_pure(n, derive_seed(7, i++));
    benchmark::DoNotOptimize(harness::evaluate_pure(psi, opt));
  }
}
BENCHMARK(BM_FuzzSample)->DenseRange(3, 8, 1);

}  // namespace

BENCHMARK_MAIN();
