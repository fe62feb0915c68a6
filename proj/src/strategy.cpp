#include "lotto/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

namespace lotto {

namespace {
constexpr double kSumTolerance = 1e-12;

void check_budgets(double x_budget, double y_budget) {
    if (!(x_budget > 0.0) || !(y_budget > 0.0)) {
        throw std::invalid_argument("budgets must be positive");
    }
}
}  // namespace

CorrelatedStrategy::CorrelatedStrategy(int node_count, double budget, double delta,
                                       std::vector<StrategyGroup> groups)
    : n_(node_count), budget_(budget), delta_(delta), groups_(std::move(groups)) {
    if (n_ < 1) throw std::invalid_argument("strategy needs at least one node");
    if (!(budget_ > 0.0) || !std::isfinite(budget_)) {
        throw std::invalid_argument("budget must be positive and finite");
    }
    if (!(delta_ > 0.0 && delta_ <= 1.0)) {
        throw std::invalid_argument("delta must lie in (0, 1]");
    }
    if (groups_.empty()) throw std::invalid_argument("strategy needs at least one group");

    long double prob_sum = 0.0L;
    for (const auto& grp : groups_) {
        if (grp.nodes.empty()) throw std::invalid_argument("group support is empty");
        if (grp.nodes.size() != grp.weights.size()) {
            throw std::invalid_argument("group nodes/weights length mismatch");
        }
        if (!(grp.prob >= 0.0 && grp.prob <= 1.0)) {
            throw std::invalid_argument("group probability outside [0, 1]");
        }
        prob_sum += grp.prob;
        long double weight_sum = 0.0L;
        std::unordered_set<int> seen;
        for (std::size_t k = 0; k < grp.nodes.size(); ++k) {
            const int node = grp.nodes[k];
            if (node < 0 || node >= n_) throw std::invalid_argument("group node out of range");
            if (!seen.insert(node).second) {
                throw std::invalid_argument("duplicate node in group support");
            }
            if (!(grp.weights[k] > 0.0)) {
                throw std::invalid_argument("group weights must be strictly positive");
            }
            weight_sum += grp.weights[k];
        }
        if (std::fabs(static_cast<double>(weight_sum) - 1.0) > kSumTolerance) {
            throw std::invalid_argument("group weights must sum to 1");
        }
    }
    if (std::fabs(static_cast<double>(prob_sum) - 1.0) > kSumTolerance) {
        throw std::invalid_argument("group probabilities must sum to 1");
    }

    cum_probs_.reserve(groups_.size());
    double running = 0.0;
    for (const auto& grp : groups_) {
        running += grp.prob;
        cum_probs_.push_back(running);
    }
    cum_probs_.back() = 1.0;

    caps_.assign(n_, 0.0);
    const double top = 2.0 * budget_ / delta_;
    for (const auto& grp : groups_) {
        for (std::size_t k = 0; k < grp.nodes.size(); ++k) {
            caps_[grp.nodes[k]] = std::max(caps_[grp.nodes[k]], top * grp.weights[k]);
        }
    }
}

double CorrelatedStrategy::node_cap(int i) const {
    if (i < 0 || i >= n_) throw std::invalid_argument("node out of range");
    return caps_[i];
}

void CorrelatedStrategy::sample(rng::Engine& eng, Allocation& out) const {
    out.assign(n_, 0.0);
    // Fixed draw count per sample keeps replicate substreams aligned.
    const double group_draw = rng::uniform01(eng);
    const double atom_draw = rng::uniform01(eng);
    const double u_draw = rng::uniform01(eng);
    const auto it = std::upper_bound(cum_probs_.begin(), cum_probs_.end(), group_draw);
    const auto& grp = groups_[std::min<std::size_t>(it - cum_probs_.begin(),
                                                    groups_.size() - 1)];
    if (atom_draw >= delta_) return;  // allocate nothing with probability 1-delta
    const double u = u_draw * (2.0 * budget_ / delta_);
    for (std::size_t k = 0; k < grp.nodes.size(); ++k) {
        out[grp.nodes[k]] = grp.weights[k] * u;
    }
}

Allocation CorrelatedStrategy::sample(rng::Engine& eng) const {
    Allocation out;
    sample(eng, out);
    return out;
}

double CorrelatedStrategy::cdf(const Allocation& z) const {
    if (static_cast<int>(z.size()) != n_) {
        throw std::invalid_argument("allocation length mismatch");
    }
    for (double v : z) {
        if (!(v >= 0.0)) throw std::invalid_argument("allocation must be nonnegative");
    }
    const double top = 2.0 * budget_ / delta_;
    double acc = 0.0;
    for (const auto& grp : groups_) {
        double m = top;
        for (std::size_t k = 0; k < grp.nodes.size(); ++k) {
            m = std::min(m, z[grp.nodes[k]] / grp.weights[k]);
        }
        acc += grp.prob * m;
    }
    return 1.0 - delta_ + delta_ * delta_ / (2.0 * budget_) * acc;
}

std::string CorrelatedStrategy::to_json() const {
    nlohmann::json j;
    j["n"] = n_;
    j["budget"] = budget_;
    j["delta"] = delta_;
    auto& arr = j["groups"] = nlohmann::json::array();
    for (const auto& grp : groups_) {
        arr.push_back({{"p", grp.prob}, {"nodes", grp.nodes}, {"weights", grp.weights}});
    }
    return j.dump(2);
}

CorrelatedStrategy CorrelatedStrategy::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    std::vector<StrategyGroup> groups;
    for (const auto& item : j.at("groups")) {
        StrategyGroup grp;
        grp.prob = item.at("p").get<double>();
        grp.nodes = item.at("nodes").get<std::vector<int>>();
        grp.weights = item.at("weights").get<std::vector<double>>();
        groups.push_back(std::move(grp));
    }
    return CorrelatedStrategy(j.at("n").get<int>(), j.at("budget").get<double>(),
                              j.at("delta").get<double>(), std::move(groups));
}

CorrelatedStrategy defender_equilibrium(const Graph& g, double x_budget,
                                        double y_budget) {
    check_budgets(x_budget, y_budget);
    const double delta = std::min(1.0, x_budget / (2.0 * y_budget));
    const double two_e = 2.0 * g.edge_count();
    StrategyGroup grp;
    grp.prob = 1.0;
    for (int i = 0; i < g.node_count(); ++i) {
        if (g.degree(i) == 0) continue;
        grp.nodes.push_back(i);
        grp.weights.push_back(g.degree(i) / two_e);
    }
    return CorrelatedStrategy(g.node_count(), x_budget, delta, {std::move(grp)});
}

CorrelatedStrategy attacker_equilibrium(const Graph& g,
                                        const BipartitePartition& part,
                                        double x_budget, double y_budget) {
    check_budgets(x_budget, y_budget);
    // 0 = part1, 1 = part2, -1 = missing; every node exactly once.
    std::vector<int> side(g.node_count(), -1);
    for (int i : part.part1) {
        if (i < 0 || i >= g.node_count() || side[i] != -1) {
            throw std::invalid_argument("partition is not a disjoint cover of the nodes");
        }
        side[i] = 0;
    }
    for (int i : part.part2) {
        if (i < 0 || i >= g.node_count() || side[i] != -1) {
            throw std::invalid_argument("partition is not a disjoint cover of the nodes");
        }
        side[i] = 1;
    }
    for (int i = 0; i < g.node_count(); ++i) {
        if (side[i] == -1) throw std::invalid_argument("partition misses a node");
    }
    for (auto [a, b] : g.edges()) {
        if (side[a] == side[b]) {
            throw std::invalid_argument("partition has an edge inside one side");
        }
    }

    const double delta = std::min(1.0, 2.0 * y_budget / x_budget);
    const double e = g.edge_count();
    StrategyGroup g1, g2;
    g1.prob = g2.prob = 0.5;
    for (int i = 0; i < g.node_count(); ++i) {
        if (g.degree(i) == 0) continue;
        auto& grp = side[i] == 0 ? g1 : g2;
        grp.nodes.push_back(i);
        grp.weights.push_back(g.degree(i) / e);
    }
    return CorrelatedStrategy(g.node_count(), y_budget, delta,
                              {std::move(g1), std::move(g2)});
}

CorrelatedStrategy attacker_upper_bound(const Graph& g, double x_budget,
                                        double y_budget) {
    check_budgets(x_budget, y_budget);
    const int n = g.node_count();
    const double delta = std::min(1.0, n * y_budget / ((n - 1.0) * x_budget));
    const double two_e = 2.0 * g.edge_count();
    std::vector<StrategyGroup> groups;
    groups.reserve(n);
    for (int k = 0; k < n; ++k) {
        StrategyGroup grp;
        grp.prob = 1.0 / n;
        for (int i = 0; i < n; ++i) {
            if (i == k || g.degree(i) == 0) continue;
            const double bump = g.has_edge(i, k) ? 1.0 : 0.0;
            grp.nodes.push_back(i);
            grp.weights.push_back((g.degree(i) + bump) / two_e);
        }
        groups.push_back(std::move(grp));
    }
    return CorrelatedStrategy(n, y_budget, delta, std::move(groups));
}

}  // namespace lotto
