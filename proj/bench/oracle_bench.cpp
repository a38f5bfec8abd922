// Serial vs OpenMP automorphism search on the same 2-orbit colorings.

#include <benchmark/benchmark.h>

#include "twoclosure/fixtures.hpp"
#include "twoclosure/oracle.hpp"
#include "twoclosure/two_orbit.hpp"

using namespace twoclosure;

namespace {

TwoOrbitColoring coloring_for(int which) {
  switch (which) {
    case 0: return orb2(fixtures::example1(3));
    case 1: return orb2(fixtures::example2(2));
    default: return orb2(fixtures::random_abelian_cyclic(7, 14));
  }
}

void BM_Serial(benchmark::State& state) {
  const auto coloring = coloring_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(automorphisms_serial(coloring));
}

void BM_Parallel(benchmark::State& state) {
  const auto coloring = coloring_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(automorphisms(coloring));
}

}  // namespace

BENCHMARK(BM_Serial)->DenseRange(0, 2);
BENCHMARK(BM_Parallel)->DenseRange(0, 2);

BENCHMARK_MAIN();
