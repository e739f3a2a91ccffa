#include <benchmark/benchmark.h>

#include "padicfam/catalog.hpp"
#include "padicfam/diagram.hpp"
#include "padicfam/enumeration.hpp"
#include "padicfam/jumpsets.hpp"

using namespace padicfam;

static void BM_EnumerateFamilies(benchmark::State& state) {
    long p = state.range(0), n = state.range(1);
    for (auto _ : state) {
        auto fams = enumerate_families(p, n, BaseProfile(p));
        benchmark::DoNotOptimize(fams);
    }
}
BENCHMARK(BM_EnumerateFamilies)->Args({2, 16})->Args({3, 27})->Args({2, 32});

static void BM_BuildDiagram(benchmark::State& state) {
    HerbrandInvariant inv(2, 1, 1, {Rational(1), Rational(3), Rational(5), Rational(11)});
    for (auto _ : state) {
        auto d = build_diagram(inv, Integer(2));
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_BuildDiagram);

static void BM_CatalogSlice(benchmark::State& state) {
    for (auto _ : state) {
        auto records = build_catalog(20, 16);
        benchmark::DoNotOptimize(records);
    }
}
BENCHMARK(BM_CatalogSlice)->Unit(benchmark::kMillisecond);

static void BM_JumpSetCount(benchmark::State& state) {
    for (auto _ : state) {
        auto n = jump_set_count(2, 8, 16);
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_JumpSetCount);

BENCHMARK_MAIN();
