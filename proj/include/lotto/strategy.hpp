#pragma once

#include <string>
#include <vector>

#include "lotto/graph.hpp"
#include "lotto/rng.hpp"

namespace lotto {

// Per-node resource amounts; one entry per node, all nonnegative.
using Allocation = std::vector<double>;

// One support set of a correlated allocation strategy. When the group is
// selected, nodes[k] receives weights[k] * u for a single shared draw u.
struct StrategyGroup {
    double prob = 0.0;
    std::vector<int> nodes;
    std::vector<double> weights;
};

// Randomized allocation law used by every named strategy here: pick a group
// by {p_D}, then with probability 1-delta allocate nothing, else scale the
// group weights by one u ~ Uniform[0, 2Z/delta]. The expected total spend
// equals the budget Z exactly.
//
// Construction checks: group probabilities sum to 1 and each group's weights
// sum to 1, both within 1e-12; weights strictly positive; delta in (0, 1].
class CorrelatedStrategy {
public:
    CorrelatedStrategy(int node_count, double budget, double delta,
                       std::vector<StrategyGroup> groups);

    int node_count() const { return n_; }
    double budget() const { return budget_; }
    double delta() const { return delta_; }
    const std::vector<StrategyGroup>& groups() const { return groups_; }

    // Largest amount node i can receive: (2Z/delta) * max_D w_{D,i}.
    // Zero for nodes outside every support.
    double node_cap(int i) const;
    const std::vector<double>& node_caps() const { return caps_; }

    void sample(rng::Engine& eng, Allocation& out) const;
    Allocation sample(rng::Engine& eng) const;

    // P(draw <= z componentwise), in closed form. Nondecreasing in every
    // coordinate; equals 1-delta at z = 0 and 1 once every coordinate is at
    // its cap. Rejects negative coordinates.
    double cdf(const Allocation& z) const;

    std::string to_json() const;
    static CorrelatedStrategy from_json(const std::string& text);

private:
    int n_;
    double budget_;
    double delta_;
    std::vector<StrategyGroup> groups_;
    std::vector<double> cum_probs_;
    std::vector<double> caps_;
};

// --- named constructions --------------------------------------------------
//
// Degree-0 nodes never enter a support: weights must be positive and no
// strategy sends resources where no edge can be won.

// Single-group strategy on the positive-degree nodes with weights d_i/(2|E|)
// and delta = min(1, X/(2Y)). Equilibrium for the defender on bipartite
// graphs; on any graph it secures at least gamma(X, Y).
CorrelatedStrategy defender_equilibrium(const Graph& g, double x_budget,
                                        double y_budget);

// Two groups (the partition sides), p = 1/2 each, weights d_i/|E|, and
// delta = min(1, 2Y/X). Equilibrium for the attacker on bipartite graphs.
CorrelatedStrategy attacker_equilibrium(const Graph& g,
                                        const BipartitePartition& part,
                                        double x_budget, double y_budget);

// n groups V \ {k}, p = 1/n each; node i weighs d_i/(2|E|), or (d_i+1)/(2|E|)
// when i neighbors k. delta = min(1, nY/((n-1)X)). Caps the defender's value
// at gamma_n(X, Y) on any graph; not an equilibrium strategy in general.
CorrelatedStrategy attacker_upper_bound(const Graph& g, double x_budget,
                                        double y_budget);

}  // namespace lotto
