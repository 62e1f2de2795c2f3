#include <benchmark/benchmark.h>

#include "graphmag/combinators.hpp"
#include "graphmag/families.hpp"
#include "graphmag/magnitude.hpp"
#include "graphmag/poly_matrix.hpp"
#include "graphmag/random_graphs.hpp"

namespace {

using namespace graphmag;

Graph random_graph(std::size_t n) {
  random::Engine rng(1234 + n);
  return random::gnp(n, 0.3, rng);
}

void BM_MagnitudeCycle(benchmark::State& state) {
  const Graph g = family::cycle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(magnitude_rational(g));
}
BENCHMARK(BM_MagnitudeCycle)->DenseRange(4, 24, 4);

void BM_MagnitudeRandom(benchmark::State& state) {
  const Graph g = random_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(magnitude_rational(g));
}
BENCHMARK(BM_MagnitudeRandom)->DenseRange(5, 30, 5);

void BM_MagnitudeProduct(benchmark::State& state) {
  const Graph g = cartesian_product(family::cycle(static_cast<std::size_t>(state.range(0))), family::complete(3));
  for (auto _ : state) benchmark::DoNotOptimize(magnitude_rational(g));
}
BENCHMARK(BM_MagnitudeProduct)->DenseRange(3, 8, 1);

void BM_BareissDeterminant(benchmark::State& state) {
  const ZMatrix z(random_graph(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(bareiss_determinant(z.matrix()));
}
BENCHMARK(BM_BareissDeterminant)->DenseRange(5, 30, 5);

void BM_WeightingSolve(benchmark::State& state) {
  const Graph g = random_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(weighting(g));
}
BENCHMARK(BM_WeightingSolve)->DenseRange(5, 20, 5);

void BM_SeriesWalkOracle(benchmark::State& state) {
  const Graph g = family::petersen();
  for (auto _ : state) benchmark::DoNotOptimize(magnitude_series_oracle(g, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_SeriesWalkOracle)->RangeMultiplier(2)->Range(4, 64);

void BM_SeriesFromRational(benchmark::State& state) {
  const Graph g = family::petersen();
  for (auto _ : state) benchmark::DoNotOptimize(magnitude_series(g, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_SeriesFromRational)->RangeMultiplier(2)->Range(4, 64);

}  // namespace

BENCHMARK_MAIN();
