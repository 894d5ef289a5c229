// Serial reference vs OpenMP kernels. Arg 0 selects the serial path; other
// args are thread counts.

#include <benchmark/benchmark.h>

#include <algorithm>

#include "gswitch/constructions/named.hpp"
#include "gswitch/modsolve/clique_switch.hpp"
#include "gswitch/push_graph/push_graph.hpp"
#include "gswitch/ramsey/verify.hpp"
#include "gswitch/search/orbit.hpp"

using namespace gswitch;

namespace {

void BM_SubsetScan(benchmark::State& state) {
  static const EdgeColouring g = apex(named_construction("gg41"), 0);
  static const ColourGroup c4 = ColourGroup::cyclic(4);
  static const ContainmentScanner scanner(g.n(), c4, RamseyTarget({4, 4, 4, 4}));
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = jobs == 0 ? scanner.scan_serial(g) : scanner.scan_parallel(g, {jobs});
    benchmark::DoNotOptimize(r);
  }
  state.counters["candidates"] = static_cast<double>(scanner.candidates());
}
BENCHMARK(BM_SubsetScan)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_RepresentativeSweep(benchmark::State& state) {
  static const ColourGroup c2 = ColourGroup::cyclic(2);
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = jobs == 0 ? verify_value_exhaustive_serial(7, c2, RamseyTarget({4, 4}))
                       : verify_value_exhaustive(7, c2, RamseyTarget({4, 4}), {jobs});
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_RepresentativeSweep)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_OrbitExpansion(benchmark::State& state) {
  static const EdgeColouring g = EdgeColouring::monochromatic(5, 3, 0);
  static const ColourGroup s3 = ColourGroup::symmetric(3);
  // jobs = 1 takes the serial branch of the layer loop.
  const int jobs = std::max<int>(1, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto orbit = orbit_enumerate(g, s3, kDefaultOrbitBudget, {jobs});
    benchmark::DoNotOptimize(orbit.size());
  }
}
BENCHMARK(BM_OrbitExpansion)->Arg(0)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_PushClique(benchmark::State& state) {
  static const PushGraph p = build_push(named_construction("gg16"), ColourGroup::cyclic(3));
  const int jobs = std::max<int>(1, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto k = push_mono_clique(p, 4, kernels::Parallelism{jobs});
    benchmark::DoNotOptimize(k);
  }
}
BENCHMARK(BM_PushClique)->Arg(0)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
