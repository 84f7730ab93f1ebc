// Serial against parallel partition kernels, and the failure search against
// its literal reference scan.

#include <benchmark/benchmark.h>

#include "posmon/cancel.hpp"
#include "posmon/gmn.hpp"
#include "posmon/word_space.hpp"

namespace {

  posmon::Presentation const& m6() {
    static auto const p = posmon::fixture(posmon::Fixture::M6);
    return p;
  }

  posmon::Presentation const& g32() {
    static auto const p = posmon::build_gmn(3, 2).presentation;
    return p;
  }

  void partition_serial(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(posmon::kernels::partition_serial(g32(), n));
    }
  }

  void partition_parallel(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(posmon::kernels::partition_parallel(g32(), n));
    }
  }

  void search_serial(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(
          posmon::search_failures(m6(), n, posmon::default_cap, posmon::Kernel::serial));
    }
  }

  void search_parallel(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(
          posmon::search_failures(m6(), n, posmon::default_cap, posmon::Kernel::parallel));
    }
  }

  void search_reference(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
      posmon::WordProblem wp(m6());
      benchmark::DoNotOptimize(posmon::reference::search_failures(wp, n));
    }
  }

}  // namespace

BENCHMARK(partition_serial)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(partition_parallel)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(search_serial)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(search_parallel)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(search_reference)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
