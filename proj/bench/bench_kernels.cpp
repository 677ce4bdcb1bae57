// fplab - factorpower semigroups and their simple modules
//
// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "fplab/factorpower.hpp"
#include "fplab/kernels.hpp"
#include "fplab/permgroup.hpp"

namespace {

  std::vector<std::string> const kGroups = {"S3", "D4", "4:(1 2 3);(2 3 4)", "S4"};

  void enumerate_serial(benchmark::State& state) {
    auto G = fplab::parse_group(kGroups[static_cast<std::size_t>(state.range(0))]);
    for (auto _ : state) {
      benchmark::DoNotOptimize(fplab::kernels::enumerate_serial(G));
    }
    state.SetLabel(kGroups[static_cast<std::size_t>(state.range(0))]);
  }

  void enumerate_parallel(benchmark::State& state) {
    auto G = fplab::parse_group(kGroups[static_cast<std::size_t>(state.range(0))]);
    for (auto _ : state) {
      benchmark::DoNotOptimize(fplab::kernels::enumerate_parallel(G));
    }
    state.SetLabel(kGroups[static_cast<std::size_t>(state.range(0))]);
  }

  std::vector<fplab::FpElement> const& s4_elements() {
    static auto const E = fplab::kernels::enumerate_parallel(fplab::symmetric_group(4));
    return E;
  }

  void census_serial(benchmark::State& state) {
    auto const& E = s4_elements();
    for (auto _ : state) {
      benchmark::DoNotOptimize(fplab::kernels::idempotent_census_serial(E));
    }
  }

  void census_parallel(benchmark::State& state) {
    auto const& E = s4_elements();
    for (auto _ : state) {
      benchmark::DoNotOptimize(fplab::kernels::idempotent_census_parallel(E));
    }
  }

  std::vector<std::string> const kShapes = {"3,3", "2,2,2", "4,4", "2,2,2,2"};

  void block_counts_serial(benchmark::State& state) {
    auto const& text  = kShapes[static_cast<std::size_t>(state.range(0))];
    auto        shape = fplab::IntegerPartition::parse(text);
    for (auto _ : state) {
      benchmark::DoNotOptimize(fplab::kernels::block_class_counts_serial(shape));
    }
    state.SetLabel(text);
  }

  void block_counts_parallel(benchmark::State& state) {
    auto const& text  = kShapes[static_cast<std::size_t>(state.range(0))];
    auto        shape = fplab::IntegerPartition::parse(text);
    for (auto _ : state) {
      benchmark::DoNotOptimize(fplab::kernels::block_class_counts_parallel(shape));
    }
    state.SetLabel(text);
  }

}  // namespace

// The serial sweep of S4 stores 2^24 insertions into an ordered set; it is
// left out to keep a default run short.
BENCHMARK(enumerate_serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(enumerate_parallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(census_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(census_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(block_counts_serial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(block_counts_parallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
