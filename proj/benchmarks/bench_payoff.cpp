#include <benchmark/benchmark.h>

#include "lotto/deterministic.hpp"
#include "lotto/graph.hpp"
#include "lotto/payoff.hpp"
#include "lotto/rng.hpp"
#include "lotto/strategy.hpp"

namespace {

struct Fixture {
    lotto::Graph g;
    lotto::SideStrategy fx;
    lotto::SideStrategy fy;
};

Fixture make_fixture(int n) {
    lotto::Graph g = lotto::erdos_renyi(n, 0.3, 12345);
    lotto::SideStrategy fx = lotto::defender_equilibrium(g, 2.0, 2.0);
    lotto::SideStrategy fy = lotto::attacker_upper_bound(g, 2.0, 2.0);
    return {std::move(g), std::move(fx), std::move(fy)};
}

void BM_MonteCarloSerial(benchmark::State& state) {
    const Fixture f = make_fixture(static_cast<int>(state.range(0)));
    const std::int64_t samples = state.range(1);
    for (auto _ : state) {
        auto est = lotto::monte_carlo_payoff_serial(
            f.fx, f.fy, f.g, lotto::TieRule::defender_wins_ties, samples, 7);
        benchmark::DoNotOptimize(est.mean);
    }
    state.SetItemsProcessed(state.iterations() * samples);
}

void BM_MonteCarloParallel(benchmark::State& state) {
    const Fixture f = make_fixture(static_cast<int>(state.range(0)));
    const std::int64_t samples = state.range(1);
    for (auto _ : state) {
        auto est = lotto::monte_carlo_payoff(
            f.fx, f.fy, f.g, lotto::TieRule::defender_wins_ties, samples, 7);
        benchmark::DoNotOptimize(est.mean);
    }
    state.SetItemsProcessed(state.iterations() * samples);
}

void BM_GreedyResponse(benchmark::State& state) {
    const lotto::Graph g =
        lotto::erdos_renyi(static_cast<int>(state.range(0)), 0.3, 777);
    const lotto::Allocation x = lotto::degree_proportional(g, 2.0);
    for (auto _ : state) {
        auto trace = lotto::greedy_response(x, 1.0, g);
        benchmark::DoNotOptimize(trace.covered_edges);
    }
}

}  // namespace

BENCHMARK(BM_MonteCarloSerial)->Args({10, 100000})->Args({100, 100000})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarloParallel)->Args({10, 100000})->Args({100, 100000})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GreedyResponse)->Arg(100)->Arg(400)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
