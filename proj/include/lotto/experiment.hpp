#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lotto/deterministic.hpp"
#include "lotto/graph.hpp"
#include "lotto/payoff.hpp"

namespace lotto {

// Graph source, parsed from "star:6", "ring:6", "line:5", "complete:100",
// "er:100:0.3" or "file:PATH".
struct GraphSpec {
    enum class Kind { star, ring, line, complete, erdos_renyi, file };

    Kind kind = Kind::star;
    int n = 0;
    double p = 0.0;
    std::string path;

    static GraphSpec parse(const std::string& text);
    std::string id() const;
    bool randomized() const { return kind == Kind::erdos_renyi; }
    Graph build(std::uint64_t seed, int* redraws = nullptr) const;
};

enum class StrategyChoice { defender_eq, attacker_eq, upper_bound, pure };

const char* to_string(StrategyChoice c);
StrategyChoice parse_strategy_choice(const std::string& text);

struct SimulateConfig {
    GraphSpec graph;
    double x_budget = 0.0;
    double y_budget = 0.0;
    StrategyChoice strategy_x = StrategyChoice::defender_eq;
    StrategyChoice strategy_y = StrategyChoice::attacker_eq;
    Allocation pure_x;  // used when strategy_x == pure
    Allocation pure_y;  // used when strategy_y == pure
    TieRule tie = TieRule::defender_wins_ties;
    std::int64_t samples = 100000;
    int replicates = 1;  // fresh graphs per row; only meaningful for er specs
    std::uint64_t seed = 1;
    bool dump_strategies = false;
};

struct SimulateResult {
    std::string csv;
    // (label, json) per dumped strategy, e.g. ("defender-eq.rep0", "{...}").
    std::vector<std::pair<std::string, std::string>> strategy_dumps;
};

// Builds the configured strategy pair per replicate, estimates the payoff by
// Monte Carlo, and renders one CSV row per replicate. Asking for the
// attacker equilibrium on a non-bipartite graph fails, naming an odd cycle.
SimulateResult run_simulate(const SimulateConfig& cfg);

struct RatioSweepConfig {
    std::vector<GraphSpec> graphs;
    double x_budget = 2.0;
    std::vector<double> y_grid;
    int replicates = 1;  // graph samples per (graph, Y) cell; er specs only
    TieRule tie = TieRule::attacker_wins_ties;
    std::uint64_t seed = 1;
};

// Degree-proportional defense vs greedy response over the grid, averaged
// over replicates for random graphs. Cells run in parallel; rows come out
// sorted by (graph order, Y), identical for any worker count.
std::string run_ratio_sweep(const RatioSweepConfig& cfg);

struct GreedyReport {
    std::string text;  // audit trace plus a one-row CSV
    GreedyTrace trace;
};

GreedyReport run_greedy(const GraphSpec& spec, double x_budget, double y_budget,
                        TieRule tie, std::uint64_t seed);

// "a:b:step" -> inclusive grid; also accepts a single value.
std::vector<double> parse_grid(const std::string& text);

// Shortest round-trip decimal form, used everywhere CSV is emitted.
std::string format_double(double v);

}  // namespace lotto
