#include <benchmark/benchmark.h>

#include "matkit/canonical.hpp"
#include "matkit/catalog.hpp"
#include "matkit/connectivity.hpp"
#include "matkit/minor.hpp"
#include "matkit/represent.hpp"

using namespace matkit;

static void BM_RankTable(benchmark::State& state) {
    Matroid s = steiner_s5612();
    for (auto _ : state) {
        // fresh value each round so the lazy table is rebuilt
        Matroid copy = Matroid::unchecked(s.ground(), s.bases());
        benchmark::DoNotOptimize(copy.rank(copy.ground().full()));
    }
}
BENCHMARK(BM_RankTable);

static void BM_CanonicalP8(benchmark::State& state) {
    Matroid m = p8();
    for (auto _ : state) {
        Matroid copy = Matroid::unchecked(m.ground(), m.bases());
        benchmark::DoNotOptimize(canonical_key(copy));
    }
}
BENCHMARK(BM_CanonicalP8);

static void BM_Kappa(benchmark::State& state) {
    Matroid s = steiner_s5612();
    Mask a = bit(0) | bit(1), b = bit(6) | bit(7);
    for (auto _ : state) benchmark::DoNotOptimize(kappa(s, a, b));
}
BENCHMARK(BM_Kappa);

static void BM_MinorFanoInSpike(benchmark::State& state) {
    Matroid host = spike_extension10();
    Matroid pattern = fano();
    for (auto _ : state) benchmark::DoNotOptimize(has_minor(host, pattern));
}
BENCHMARK(BM_MinorFanoInSpike);

static void BM_RepresentDowlingZ2(benchmark::State& state) {
    Matroid m = dowling_q3(GroupTable::cyclic(2));
    for (auto _ : state) benchmark::DoNotOptimize(is_representable(m, 3));
}
BENCHMARK(BM_RepresentDowlingZ2);

BENCHMARK_MAIN();
