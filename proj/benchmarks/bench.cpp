#include <benchmark/benchmark.h>

#include "hlkit/formulas.hpp"

using namespace hlkit;

static void BM_p_alcove(benchmark::State& state) {
    Partition lambda({3, 2, 1});
    for (auto _ : state) {
        FormulaResult r = p_alcove(lambda, 4);
        benchmark::DoNotOptimize(r.term_count);
    }
}
BENCHMARK(BM_p_alcove);

static void BM_p_alcove_threaded(benchmark::State& state) {
    Partition lambda({4, 2, 1});
    EnumOptions opts;
    opts.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        FormulaResult r = p_alcove(lambda, 4, opts);
        benchmark::DoNotOptimize(r.term_count);
    }
}
BENCHMARK(BM_p_alcove_threaded)->Arg(1)->Arg(4);

static void BM_q_hhl(benchmark::State& state) {
    Partition lambda({4, 2, 1});
    for (auto _ : state) {
        FormulaResult r = q_hhl(lambda, 5);
        benchmark::DoNotOptimize(r.term_count);
    }
}
BENCHMARK(BM_q_hhl);

static void BM_filling_enumeration(benchmark::State& state) {
    Partition lambda({4, 2, 1});
    for (auto _ : state) {
        std::uint64_t count = 0;
        for_each_filling(lambda, 5, FillingClass::all_valid,
                         [&](const Filling&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_filling_enumeration);

BENCHMARK_MAIN();
