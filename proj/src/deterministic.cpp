#include "lotto/deterministic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace lotto {

namespace {

void check_nonnegative(const Allocation& x, const Graph& g) {
    if (static_cast<int>(x.size()) != g.node_count()) {
        throw std::invalid_argument("allocation length mismatch");
    }
    for (double v : x) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument("allocation entries must be finite and nonnegative");
        }
    }
}

}  // namespace

const char* to_string(Positivity p) {
    switch (p) {
        case Positivity::positive: return "positive";
        case Positivity::zero: return "zero";
        default: return "unknown";
    }
}

Allocation degree_proportional(const Graph& g, double x_budget) {
    if (!(x_budget > 0.0)) throw std::invalid_argument("budget must be positive");
    const double two_e = 2.0 * g.edge_count();
    Allocation x(g.node_count());
    for (int i = 0; i < g.node_count(); ++i) x[i] = g.degree(i) * x_budget / two_e;
    return x;
}

GreedyTrace greedy_response(const Allocation& x, double y_budget, const Graph& g) {
    check_nonnegative(x, g);
    if (y_budget < 0.0) throw std::invalid_argument("budget must be nonnegative");
    const int n = g.node_count();
    const int total_edges = g.edge_count();

    // Marginal coverage of node i = its edges not yet covered by the picks.
    std::vector<int> marginal(n);
    for (int i = 0; i < n; ++i) marginal[i] = g.degree(i);
    std::vector<std::vector<int>> incident(n);
    for (int e = 0; e < total_edges; ++e) {
        incident[g.edges()[e].first].push_back(e);
        incident[g.edges()[e].second].push_back(e);
    }
    std::vector<char> edge_covered(total_edges, 0);
    std::vector<char> available(n, 1), picked(n, 0);

    // Fallback candidate: the single node covering the most edges.
    int single = 0;
    for (int i = 1; i < n; ++i) {
        if (g.degree(i) > g.degree(single)) single = i;
    }

    GreedyTrace trace;
    double spent = 0.0;
    int covered = 0;
    const double inf = std::numeric_limits<double>::infinity();
    for (int rounds = 0; rounds < n; ++rounds) {
        int pick = -1;
        double pick_ratio = -1.0, pick_cost = inf;
        for (int i = 0; i < n; ++i) {
            if (!available[i]) continue;
            const double ratio = x[i] == 0.0 ? inf : marginal[i] / x[i];
            if (ratio > pick_ratio ||
                (ratio == pick_ratio && x[i] < pick_cost)) {
                pick = i;
                pick_ratio = ratio;
                pick_cost = x[i];
            }
        }
        available[pick] = 0;
        if (spent + x[pick] <= y_budget) {
            picked[pick] = 1;
            spent += x[pick];
            trace.secured_nodes.push_back(pick);
            trace.marginal_ratios.push_back(pick_ratio);
            for (int e : incident[pick]) {
                if (edge_covered[e]) continue;
                edge_covered[e] = 1;
                ++covered;
                const auto [a, b] = g.edges()[e];
                --marginal[a == pick ? b : a];
            }
            marginal[pick] = 0;
        }
    }

    const int single_covered = x[single] <= y_budget ? g.degree(single) : 0;
    trace.single_node = single;
    trace.chose_single_node = single_covered > covered;
    trace.response.assign(n, 0.0);
    if (trace.chose_single_node) {
        trace.response[single] = x[single];
    } else {
        for (int i = 0; i < n; ++i) {
            if (picked[i]) trace.response[i] = x[i];
        }
    }
    // Actual winners of the response: the chosen nodes plus every zero-cost
    // node (a matching bid takes those for free).
    std::vector<int> winners;
    for (int i = 0; i < n; ++i) {
        if (trace.response[i] >= x[i]) winners.push_back(i);
    }
    trace.covered_edges = edges_covered(g, winners);
    return trace;
}

namespace {

// Edge sets as bitmasks over edge indices, few words each for n <= 24.
struct CoverageEnumerator {
    const Allocation& x;
    double budget;
    int n;
    int words;
    std::vector<std::uint64_t> node_mask;   // n * words
    std::vector<std::uint64_t> depth_mask;  // (n+1) * words, union per depth
    std::vector<int> current;
    int best_covered = -1;
    std::vector<int> best_subset;

    CoverageEnumerator(const Allocation& x_, double budget_, const Graph& g)
        : x(x_), budget(budget_), n(g.node_count()),
          words((g.edge_count() + 63) / 64),
          node_mask(static_cast<std::size_t>(n) * words, 0),
          depth_mask(static_cast<std::size_t>(n + 1) * words, 0) {
        for (int e = 0; e < g.edge_count(); ++e) {
            const auto [a, b] = g.edges()[e];
            node_mask[a * words + e / 64] |= 1ULL << (e % 64);
            node_mask[b * words + e / 64] |= 1ULL << (e % 64);
        }
    }

    int popcount_at(int depth) const {
        int c = 0;
        for (int w = 0; w < words; ++w) {
            c += __builtin_popcountll(depth_mask[depth * words + w]);
        }
        return c;
    }

    void walk(int start, int remaining, double cost, int depth) {
        if (remaining == 0) {
            const int covered = popcount_at(depth);
            if (covered > best_covered) {
                best_covered = covered;
                best_subset = current;
            }
            return;
        }
        for (int i = start; i <= n - remaining; ++i) {
            if (cost + x[i] > budget) continue;
            for (int w = 0; w < words; ++w) {
                depth_mask[(depth + 1) * words + w] =
                    depth_mask[depth * words + w] | node_mask[i * words + w];
            }
            current.push_back(i);
            walk(i + 1, remaining - 1, cost + x[i], depth + 1);
            current.pop_back();
        }
    }
};

}  // namespace

BruteForceResult brute_force_response(const Allocation& x, double y_budget,
                                      const Graph& g) {
    check_nonnegative(x, g);
    if (y_budget < 0.0) throw std::invalid_argument("budget must be nonnegative");
    if (g.node_count() > 24) {
        throw std::invalid_argument("brute force capped at 24 nodes");
    }
    CoverageEnumerator en(x, y_budget, g);
    for (int size = 0; size <= g.node_count(); ++size) {
        en.walk(0, size, 0.0, 0);
        if (en.best_covered == g.edge_count()) break;
    }
    return {std::max(en.best_covered, 0), en.best_subset};
}

Positivity positivity_certificate(const Graph& g, double x_budget, double y_budget) {
    if (!(x_budget > 0.0) || !(y_budget > 0.0)) {
        throw std::invalid_argument("budgets must be positive");
    }
    const int n = g.node_count();
    const double half = x_budget / 2.0;
    const double cover_threshold = (n - 1.0) * x_budget / n;
    if (bipartite_partition(g).has_value()) {
        return y_budget <= half ? Positivity::positive : Positivity::zero;
    }
    if (g.edge_count() == n * (n - 1) / 2) {
        return y_budget <= cover_threshold ? Positivity::positive : Positivity::zero;
    }
    if (y_budget <= half) return Positivity::positive;
    if (y_budget > cover_threshold) return Positivity::zero;
    return Positivity::unknown;
}

std::vector<RatioRow> ratio_experiment(const Graph& g, double x_budget,
                                       const std::vector<double>& y_grid,
                                       TieRule tie) {
    if (y_grid.empty()) throw std::invalid_argument("Y grid must be nonempty");
    const Allocation x = degree_proportional(g, x_budget);
    std::vector<RatioRow> rows;
    rows.reserve(y_grid.size());
    for (double y_budget : y_grid) {
        RatioRow row;
        row.y_budget = y_budget;
        const GreedyTrace trace = greedy_response(x, y_budget, g);
        row.deterministic_payoff = pure_payoff(x, trace.response, g, tie);
        row.gamma_value = gamma(x_budget, y_budget);
        if (row.gamma_value > 0.0) {
            row.ratio = row.deterministic_payoff / row.gamma_value;
        } else {
            row.degenerate = row.deterministic_payoff == 0.0;
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace lotto
