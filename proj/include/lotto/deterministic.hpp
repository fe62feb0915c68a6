#pragma once

#include <vector>

#include "lotto/graph.hpp"
#include "lotto/payoff.hpp"

namespace lotto {

// Outcome of the greedy budgeted-max-coverage response. The response wins
// its nodes under attacker_wins_ties (it copies the defender's amounts), so
// covered_edges counts the edges touched by the actual winners of the
// response against x, zero-cost nodes included.
struct GreedyTrace {
    Allocation response;
    std::vector<int> secured_nodes;      // greedy picks, in selection order
    std::vector<double> marginal_ratios; // marginal coverage per cost at pick time
    int covered_edges = 0;
    bool chose_single_node = false;      // best-single-node fallback won
    int single_node = -1;                // the fallback candidate (highest degree)
};

// x_i = d_i/(2|E|) * X. A heuristic for the defender; not claimed optimal
// among deterministic strategies.
Allocation degree_proportional(const Graph& g, double x_budget);

// Greedy response: repeatedly take the node with the best marginal coverage
// per cost (ties: cheapest node, then lowest index; zero-cost nodes rank
// first), keep it if budget-feasible, then compare the result against the
// highest-degree single node and return the better of the two.
GreedyTrace greedy_response(const Allocation& x, double y_budget, const Graph& g);

struct BruteForceResult {
    int covered = 0;
    std::vector<int> subset;
};

// Exact budgeted maximum coverage under attacker_wins_ties (winning node i
// costs exactly x_i): enumerate subsets by increasing size then
// lexicographic order, pruned by the budget. Returns the first optimum in
// that order. Requires n <= 24.
BruteForceResult brute_force_response(const Allocation& x, double y_budget,
                                      const Graph& g);

enum class Positivity { positive, zero, unknown };

const char* to_string(Positivity p);

// Sign of the defender's deterministic security value where the structure
// decides it: bipartite and complete graphs resolve fully; otherwise
// positive when Y <= X/2, zero when Y > (n-1)X/n, unknown in between.
Positivity positivity_certificate(const Graph& g, double x_budget, double y_budget);

struct RatioRow {
    double y_budget = 0.0;
    double deterministic_payoff = 0.0;  // degree-proportional defense vs greedy
    double gamma_value = 0.0;
    double ratio = 0.0;
    bool degenerate = false;  // payoff and benchmark both zero
};

// Degree-proportional defense against the greedy response across a Y grid.
std::vector<RatioRow> ratio_experiment(const Graph& g, double x_budget,
                                       const std::vector<double>& y_grid,
                                       TieRule tie);

}  // namespace lotto
