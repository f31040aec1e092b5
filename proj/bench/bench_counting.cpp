// Counting kernels head to head: the brute-force reference, the pruned
// engine on one branch prefix, and the engine split across prefixes.
// Run: ./bench/mcfc_bench [--benchmark_filter=...]

#include <benchmark/benchmark.h>

#include "mcfc/counting.hpp"

using namespace mcfc;

namespace {

SimpleGraph host(const std::string& shape) {
    return SimpleGraph::complete_multipartite(PartitionShape::parse(shape).parts);
}

void reference_count(benchmark::State& state, const std::string& shape,
                     const std::string& k) {
    const auto g = host(shape);
    const auto spec = ColourSpec::parse(k);
    for (auto _ : state) {
        auto value = count_reference(g, spec);
        benchmark::DoNotOptimize(value);
    }
}

void engine_count(benchmark::State& state, const std::string& shape, const std::string& k,
                  int width) {
    const auto g = host(shape);
    const auto spec = ColourSpec::parse(k);
    for (auto _ : state) {
        CountJob job{g, spec, kDefaultBudget, width};
        auto outcome = count_colourings(job);
        benchmark::DoNotOptimize(outcome.value);
    }
}

}  // namespace

BENCHMARK_CAPTURE(reference_count, k222_33, "6:2,2,2", "3,3");
BENCHMARK_CAPTURE(engine_count, k222_33_serial, "6:2,2,2", "3,3", 1);
BENCHMARK_CAPTURE(engine_count, k222_33_width8, "6:2,2,2", "3,3", 8);

BENCHMARK_CAPTURE(reference_count, k331_43, "7:3,3,1", "4,3");
BENCHMARK_CAPTURE(engine_count, k331_43_serial, "7:3,3,1", "4,3", 1);
BENCHMARK_CAPTURE(engine_count, k331_43_width8, "7:3,3,1", "4,3", 8);

BENCHMARK_CAPTURE(engine_count, k7_33_serial, "7:1,1,1,1,1,1,1", "3,3", 1);
BENCHMARK_CAPTURE(engine_count, k7_33_width16, "7:1,1,1,1,1,1,1", "3,3", 16);

BENCHMARK_CAPTURE(engine_count, k322_33_serial, "7:3,2,2", "3,3", 1);
BENCHMARK_CAPTURE(engine_count, k322_33_width8, "7:3,2,2", "3,3", 8);

BENCHMARK_MAIN();
