#pragma once

#include <cstdint>
#include <variant>

#include "lotto/graph.hpp"
#include "lotto/strategy.hpp"

namespace lotto {

// Who takes a node when both players put the same amount on it. The formal
// payoff definition awards ties to the defender; the deterministic-strategy
// analysis needs the attacker-wins convention (the limit of winning by an
// arbitrarily small margin).
enum class TieRule { defender_wins_ties, attacker_wins_ties };

const char* to_string(TieRule tie);

// Fraction of edges whose BOTH endpoints the defender wins. The attacker's
// share is 1 minus this (constant-sum).
double pure_payoff(const Allocation& x, const Allocation& y, const Graph& g,
                   TieRule tie);

struct PayoffEstimate {
    double mean = 0.0;
    double std_error = 0.0;  // sample standard deviation / sqrt(samples)
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
};

// Either a fixed allocation or a randomized strategy.
using SideStrategy = std::variant<Allocation, CorrelatedStrategy>;

// Monte Carlo estimate of the defender's expected payoff: one fresh draw per
// randomized side per replicate, pure sides held fixed. Replicates use
// per-index generator substreams and partial sums are accumulated in fixed
// blocks, so results are identical for any worker count. Runs the block loop
// under OpenMP.
PayoffEstimate monte_carlo_payoff(const SideStrategy& fx, const SideStrategy& fy,
                                  const Graph& g, TieRule tie,
                                  std::int64_t samples, std::uint64_t seed);

// Plain-loop reference for the estimator above; same block summation, kept
// for testing bit-for-bit agreement with the parallel kernel.
PayoffEstimate monte_carlo_payoff_serial(const SideStrategy& fx,
                                         const SideStrategy& fy, const Graph& g,
                                         TieRule tie, std::int64_t samples,
                                         std::uint64_t seed);

// Equilibrium payoff to the defender on any bipartite graph:
// 1 - Y/X when X >= 2Y, else X/(4Y). Also the defender's guarantee on any
// graph. Degenerate budgets: Y = 0 gives 1, X = 0 gives 0.
double gamma(double x_budget, double y_budget);

// Upper bound on the defender's security value on an n-node graph:
// 1 - nY/(2(n-1)X) when X >= nY/(n-1), else (n-1)X/(2nY). Coincides with
// gamma at n = 2 and dominates it everywhere.
double gamma_n(int n, double x_budget, double y_budget);

// Closed-form expected payoff of a pure defender allocation x against the
// attacker's two-group partition strategy on a bipartite graph. Requires
// every x_i within the support cap for the regime (x_i <= 2Y d_i/|E| when
// X < 2Y, x_i <= X d_i/|E| otherwise); violations are rejected, truncate
// first. Used as the oracle for Monte Carlo checks.
double analytic_value_vs_attacker_eq(const Allocation& x, const Graph& g,
                                     double x_budget, double y_budget);

// Closed-form expected payoff to the attacker of a pure allocation y against
// the defender's degree-proportional strategy, on any graph. Requires y
// within the caps (y_i <= X d_i/|E| when X >= 2Y, y_i <= 2Y d_i/|E|
// otherwise).
double analytic_value_vs_defender_eq(const Allocation& y, const Graph& g,
                                     double x_budget, double y_budget);

}  // namespace lotto
