#include <benchmark/benchmark.h>

#include "laxalg/central.hpp"
#include "laxalg/config.hpp"
#include "laxalg/graded.hpp"
#include "laxalg/random.hpp"

namespace {

lax::ConfigPtr Config(lax::Family family, int n, std::size_t points) {
  lax::AlgebraSpec spec(family, n);
  return lax::make_config(spec, lax::random_tyurin_points(spec, points, 42));
}

void BM_MatRank(benchmark::State& state) {
  lax::Rng rng(1);
  std::size_t n = static_cast<std::size_t>(state.range(0));
  lax::ExactMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rng.gaussian(9);
  for (auto _ : state) benchmark::DoNotOptimize(lax::mat_rank(m));
}
BENCHMARK(BM_MatRank)->Arg(8)->Arg(16)->Arg(32);

void BM_GradedBasisSl2(benchmark::State& state) {
  auto config = Config(lax::Family::sl, 2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lax::graded_basis(config, 1));
}
BENCHMARK(BM_GradedBasisSl2)->Arg(1)->Arg(2)->Arg(3);

void BM_GradedBasisSp4(benchmark::State& state) {
  auto config = Config(lax::Family::sp, 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(lax::graded_basis(config, 0));
}
BENCHMARK(BM_GradedBasisSp4);

void BM_ConstructConnection(benchmark::State& state) {
  auto config = Config(lax::Family::so, 3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lax::construct_connection(config, 6));
}
BENCHMARK(BM_ConstructConnection)->Arg(1)->Arg(2)->Arg(3);

void BM_CocycleTableSl2(benchmark::State& state) {
  auto config = Config(lax::Family::sl, 2, 2);
  auto lambda = lax::construct_connection(config, 6);
  int radius = static_cast<int>(state.range(0));
  for (auto _ : state) {
    lax::BasisCache cache(config);
    benchmark::DoNotOptimize(lax::cocycle_table(cache, lambda, -radius, radius));
  }
}
BENCHMARK(BM_CocycleTableSl2)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
