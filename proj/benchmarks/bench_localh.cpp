#include <benchmark/benchmark.h>

#include "localh/constructions.hpp"
#include "localh/cwbary.hpp"
#include "localh/permstats.hpp"
#include "localh/subdivision.hpp"

using namespace localh;

static void BM_DerangementEnum(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(derangement_enum(d, 12));
}
BENCHMARK(BM_DerangementEnum)->DenseRange(5, 9)->Unit(benchmark::kMillisecond);

static void BM_DerangementRecurrence(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(derangement_recurrence(d));
}
BENCHMARK(BM_DerangementRecurrence)->Arg(10)->Arg(20)->Arg(40);

static void BM_BarycentricLocalH(benchmark::State& state) {
    const auto simplex = Subdivision::trivial_simplex(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        const auto s = sd_subdivision(simplex);
        benchmark::DoNotOptimize(local_h(s));
    }
}
BENCHMARK(BM_BarycentricLocalH)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_Realize(benchmark::State& state) {
    const std::vector<long long> target{0, 2, 3, 3, 2, 0};
    for (auto _ : state) benchmark::DoNotOptimize(realize_local_h(target));
}
BENCHMARK(BM_Realize)->Unit(benchmark::kMillisecond);

static void BM_FlagVectors(benchmark::State& state) {
    const auto p = face_poset(sd_subdivision(Subdivision::trivial_simplex(static_cast<std::size_t>(state.range(0)))).total());
    for (auto _ : state) benchmark::DoNotOptimize(flag_vectors(p));
}
BENCHMARK(BM_FlagVectors)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_ValidateRandom(benchmark::State& state) {
    const auto s = random_subdivision(42, 5, 6).subdivision;
    for (auto _ : state) benchmark::DoNotOptimize(validate(s));
}
BENCHMARK(BM_ValidateRandom)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
