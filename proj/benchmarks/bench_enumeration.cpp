#include <benchmark/benchmark.h>

#include "mimkit/enumeration.hpp"
#include "mimkit/generators.hpp"
#include "mimkit/matchings.hpp"
#include "mimkit/verification.hpp"

using namespace mimkit;

namespace {

Graph random_fixture(std::size_t n) {
    Rng rng(n);
    return random_graph(n, 0.3, rng);
}

void BM_CameronExtremal(benchmark::State& state) {
    const Graph g = extremal_mim(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        CameronStream s(g);
        std::size_t count = 0;
        while (s.next()) ++count;
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_CameronExtremal)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_OracleExtremal(benchmark::State& state) {
    const Graph g = extremal_mim(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(count_mim_oracle(g));
}
BENCHMARK(BM_OracleExtremal)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_CountMisMoonMoser(benchmark::State& state) {
    const Graph g = moon_moser(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(count_mis(g));
}
BENCHMARK(BM_CountMisMoonMoser)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);

void BM_CountMimRandom(benchmark::State& state) {
    const Graph g = random_fixture(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(count_mim(g));
}
BENCHMARK(BM_CountMimRandom)->DenseRange(10, 30, 5)->Unit(benchmark::kMillisecond);

void BM_MaximumStream(benchmark::State& state) {
    const Graph g = random_fixture(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(maximum_induced_matching(g, MaximumStrategy::Stream));
}
BENCHMARK(BM_MaximumStream)->DenseRange(10, 30, 5)->Unit(benchmark::kMillisecond);

void BM_MaximumBranchAndBound(benchmark::State& state) {
    const Graph g = random_fixture(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(maximum_induced_matching(g, MaximumStrategy::BranchAndBound));
}
BENCHMARK(BM_MaximumBranchAndBound)->DenseRange(10, 30, 5)->Unit(benchmark::kMillisecond);

void BM_VerifyExhaustive(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_exhaustive(n, 1, nullptr));
}
BENCHMARK(BM_VerifyExhaustive)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
