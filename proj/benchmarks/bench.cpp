#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "random.hpp"
#include "posetmod/filtration.hpp"
#include "posetmod/resolve.hpp"

using namespace posetmod;

namespace {

void BM_Rank(benchmark::State& state) {
  gen::Rng rng(1);
  auto n = static_cast<std::size_t>(state.range(0));
  Matrix m = gen::random_matrix(rng, Field::prime(7), n, n);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(16)->Arg(64)->Arg(128);

void BM_UpsetResolution(benchmark::State& state) {
  gen::Rng rng(2);
  auto side = static_cast<int>(state.range(0));
  auto g = fixtures::grid({0, 0}, {side, side});
  PosetModule m = gen::random_module(rng, g, Field::prime(3), 3);
  for (auto _ : state) benchmark::DoNotOptimize(upset_resolution(m));
}
BENCHMARK(BM_UpsetResolution)->Arg(2)->Arg(4)->Arg(6);

void BM_PersistentHomology(benchmark::State& state) {
  gen::Rng rng(3);
  auto side = static_cast<int>(state.range(0));
  MultiFiltration f = gen::random_filtration(rng, Box{{0, 0}, {side, side}}, 8);
  for (auto _ : state) benchmark::DoNotOptimize(persistent_homology(f, 0, Field::prime(2)));
}
BENCHMARK(BM_PersistentHomology)->Arg(2)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
