#include <benchmark/benchmark.h>

#include "hlag/enumeration.hpp"

static void BM_EnumerateTriples(benchmark::State& state) {
    const auto m = static_cast<std::uint64_t>(state.range(0));
    const auto n = hlag::left_compressed_span(3, m);
    std::uint64_t count = 0;
    for (auto _ : state) count = hlag::enumerate_left_compressed(3, m, n, [](const hlag::Hypergraph&) { return true; });
    state.counters["graphs"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateTriples)->Arg(10)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
