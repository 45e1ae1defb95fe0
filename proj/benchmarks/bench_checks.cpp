#include <benchmark/benchmark.h>

#include "rlse/catalog.hpp"
#include "rlse/embeddability.hpp"
#include "rlse/transforms.hpp"

using namespace rlse;

static void BM_CheckRlse(benchmark::State& state) {
    auto alg = boolean_ring(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(check_rlse(alg).passed);
}
BENCHMARK(BM_CheckRlse)->Arg(2)->Arg(3)->Arg(4);

static void BM_CheckSpecificMo(benchmark::State& state) {
    auto alg = specific_rlse_mo(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(check_rlse(alg).passed);
}
BENCHMARK(BM_CheckSpecificMo)->Arg(2)->Arg(3);

static void BM_Roundtrip(benchmark::State& state) {
    auto alg = specific_rlse_mo(2);
    for (auto _ : state) benchmark::DoNotOptimize(r_of_l(l_of_r(alg)) == alg);
}
BENCHMARK(BM_Roundtrip);

static void BM_EnumerateSquare(benchmark::State& state) {
    auto square = l_of_r(boolean_ring(2));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_plus_extensions(square, 1000).size());
}
BENCHMARK(BM_EnumerateSquare);

static void BM_EnumerateMo2(benchmark::State& state) {
    auto mo2 = mo_lattice(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_plus_extensions(mo2, state.range(0)).size());
}
BENCHMARK(BM_EnumerateMo2)->Arg(100)->Arg(1000);

static void BM_EmbeddableSet(benchmark::State& state) {
    auto mo2 = concrete_mo2_events();
    std::vector<int> subset = {1, 2, 3, 4};
    for (auto _ : state)
        benchmark::DoNotOptimize(embeddable_set(mo2, subset).embeddable);
}
BENCHMARK(BM_EmbeddableSet);

static void BM_OracleEmbeddable(benchmark::State& state) {
    auto mo2 = concrete_mo2_events();
    std::vector<int> subset = {1, 3};
    for (auto _ : state) benchmark::DoNotOptimize(oracle_embeddable(mo2, subset));
}
BENCHMARK(BM_OracleEmbeddable);

BENCHMARK_MAIN();
