#include "lotto/payoff.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace lotto {

namespace {

constexpr std::int64_t kBlock = 1024;  // replicates per partial sum
constexpr std::uint64_t kStreamDefender = 0xD0;
constexpr std::uint64_t kStreamAttacker = 0xA0;

void check_allocation(const Allocation& a, const Graph& g, const char* who) {
    if (static_cast<int>(a.size()) != g.node_count()) {
        throw std::invalid_argument(std::string(who) + ": allocation length mismatch");
    }
    for (double v : a) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument(std::string(who) +
                                        ": allocation entries must be finite and nonnegative");
        }
    }
}

void check_side(const SideStrategy& s, const Graph& g, const char* who) {
    if (const auto* alloc = std::get_if<Allocation>(&s)) {
        check_allocation(*alloc, g, who);
    } else {
        const auto& strat = std::get<CorrelatedStrategy>(s);
        if (strat.node_count() != g.node_count()) {
            throw std::invalid_argument(std::string(who) + ": strategy node count mismatch");
        }
    }
}

struct SideDrawer {
    const Allocation* fixed = nullptr;
    const CorrelatedStrategy* random = nullptr;
    std::uint64_t stream = 0;

    void draw(std::uint64_t seed, std::int64_t replicate, Allocation& buf) const {
        if (random) {
            rng::Engine eng = rng::make_engine(seed, stream, static_cast<std::uint64_t>(replicate));
            random->sample(eng, buf);
        }
    }
};

SideDrawer make_drawer(const SideStrategy& s, std::uint64_t stream) {
    SideDrawer d;
    d.stream = stream;
    if (const auto* alloc = std::get_if<Allocation>(&s)) {
        d.fixed = alloc;
    } else {
        d.random = &std::get<CorrelatedStrategy>(s);
    }
    return d;
}

PayoffEstimate finish_estimate(double total, double total_sq, std::int64_t samples,
                               std::uint64_t seed) {
    PayoffEstimate est;
    est.samples = samples;
    est.seed = seed;
    est.mean = total / static_cast<double>(samples);
    if (samples > 1) {
        const double var = std::max(
            0.0, (total_sq - samples * est.mean * est.mean) / (samples - 1.0));
        est.std_error = std::sqrt(var / static_cast<double>(samples));
    }
    return est;
}

}  // namespace

const char* to_string(TieRule tie) {
    return tie == TieRule::defender_wins_ties ? "defender" : "attacker";
}

double pure_payoff(const Allocation& x, const Allocation& y, const Graph& g,
                   TieRule tie) {
    check_allocation(x, g, "defender");
    check_allocation(y, g, "attacker");
    int secured = 0;
    if (tie == TieRule::defender_wins_ties) {
        for (auto [a, b] : g.edges()) secured += (x[a] >= y[a] && x[b] >= y[b]) ? 1 : 0;
    } else {
        for (auto [a, b] : g.edges()) secured += (x[a] > y[a] && x[b] > y[b]) ? 1 : 0;
    }
    return static_cast<double>(secured) / g.edge_count();
}

PayoffEstimate monte_carlo_payoff(const SideStrategy& fx, const SideStrategy& fy,
                                  const Graph& g, TieRule tie,
                                  std::int64_t samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("samples must be at least 1");
    check_side(fx, g, "defender");
    check_side(fy, g, "attacker");
    const SideDrawer dx = make_drawer(fx, kStreamDefender);
    const SideDrawer dy = make_drawer(fy, kStreamAttacker);
    if (dx.fixed && dy.fixed) {
        PayoffEstimate est;
        est.mean = pure_payoff(*dx.fixed, *dy.fixed, g, tie);
        est.samples = samples;
        est.seed = seed;
        return est;
    }

    const std::int64_t blocks = (samples + kBlock - 1) / kBlock;
    std::vector<double> sums(blocks, 0.0), sums_sq(blocks, 0.0);
#pragma omp parallel for schedule(static)
    for (std::int64_t blk = 0; blk < blocks; ++blk) {
        Allocation xbuf = dx.fixed ? *dx.fixed : Allocation(g.node_count(), 0.0);
        Allocation ybuf = dy.fixed ? *dy.fixed : Allocation(g.node_count(), 0.0);
        double s = 0.0, q = 0.0;
        const std::int64_t lo = blk * kBlock;
        const std::int64_t hi = std::min(samples, lo + kBlock);
        for (std::int64_t r = lo; r < hi; ++r) {
            dx.draw(seed, r, xbuf);
            dy.draw(seed, r, ybuf);
            const double p = pure_payoff(xbuf, ybuf, g, tie);
            s += p;
            q += p * p;
        }
        sums[blk] = s;
        sums_sq[blk] = q;
    }
    double total = 0.0, total_sq = 0.0;
    for (std::int64_t blk = 0; blk < blocks; ++blk) {
        total += sums[blk];
        total_sq += sums_sq[blk];
    }
    return finish_estimate(total, total_sq, samples, seed);
}

PayoffEstimate monte_carlo_payoff_serial(const SideStrategy& fx,
                                         const SideStrategy& fy, const Graph& g,
                                         TieRule tie, std::int64_t samples,
                                         std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("samples must be at least 1");
    check_side(fx, g, "defender");
    check_side(fy, g, "attacker");
    const SideDrawer dx = make_drawer(fx, kStreamDefender);
    const SideDrawer dy = make_drawer(fy, kStreamAttacker);
    if (dx.fixed && dy.fixed) {
        PayoffEstimate est;
        est.mean = pure_payoff(*dx.fixed, *dy.fixed, g, tie);
        est.samples = samples;
        est.seed = seed;
        return est;
    }

    Allocation xbuf = dx.fixed ? *dx.fixed : Allocation(g.node_count(), 0.0);
    Allocation ybuf = dy.fixed ? *dy.fixed : Allocation(g.node_count(), 0.0);
    double total = 0.0, total_sq = 0.0;
    double block_s = 0.0, block_q = 0.0;
    for (std::int64_t r = 0; r < samples; ++r) {
        dx.draw(seed, r, xbuf);
        dy.draw(seed, r, ybuf);
        const double p = pure_payoff(xbuf, ybuf, g, tie);
        block_s += p;
        block_q += p * p;
        if ((r + 1) % kBlock == 0) {
            total += block_s;
            total_sq += block_q;
            block_s = block_q = 0.0;
        }
    }
    total += block_s;
    total_sq += block_q;
    return finish_estimate(total, total_sq, samples, seed);
}

double gamma(double x_budget, double y_budget) {
    if (x_budget < 0.0 || y_budget < 0.0) {
        throw std::invalid_argument("budgets must be nonnegative");
    }
    if (y_budget == 0.0) return 1.0;
    if (x_budget == 0.0) return 0.0;
    return x_budget >= 2.0 * y_budget ? 1.0 - y_budget / x_budget
                                      : x_budget / (4.0 * y_budget);
}

double gamma_n(int n, double x_budget, double y_budget) {
    if (n < 2) throw std::invalid_argument("gamma_n needs n >= 2");
    if (x_budget < 0.0 || y_budget < 0.0) {
        throw std::invalid_argument("budgets must be nonnegative");
    }
    if (y_budget == 0.0) return 1.0;
    if (x_budget == 0.0) return 0.0;
    const double nn = n;
    if (x_budget >= nn / (nn - 1.0) * y_budget) {
        return 1.0 - nn / (2.0 * (nn - 1.0)) * (y_budget / x_budget);
    }
    return (nn - 1.0) / (2.0 * nn) * (x_budget / y_budget);
}

namespace {

// Per-node support cap of the opponent's strategy: top draw times weight.
std::vector<double> regime_caps(const Graph& g, double top_draw, double weight_scale) {
    std::vector<double> caps(g.node_count());
    for (int i = 0; i < g.node_count(); ++i) {
        caps[i] = top_draw * g.degree(i) / weight_scale;
    }
    return caps;
}

void check_caps(const Allocation& a, const std::vector<double>& caps, const char* who) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > caps[i] * (1.0 + 1e-12) + 1e-15) {
            throw std::invalid_argument(std::string(who) +
                                        ": allocation exceeds the support cap at node " +
                                        std::to_string(i));
        }
    }
}

}  // namespace

double analytic_value_vs_attacker_eq(const Allocation& x, const Graph& g,
                                     double x_budget, double y_budget) {
    if (!(x_budget > 0.0) || !(y_budget > 0.0)) {
        throw std::invalid_argument("budgets must be positive");
    }
    check_allocation(x, g, "defender");
    const bool defender_strong = x_budget >= 2.0 * y_budget;
    // Attacker's top draw is X when X >= 2Y (delta = 2Y/X), else 2Y; weights d_i/|E|.
    const double top = defender_strong ? x_budget : 2.0 * y_budget;
    check_caps(x, regime_caps(g, top, static_cast<double>(g.edge_count())), "defender");
    double total = 0.0;
    for (double v : x) total += v;
    if (defender_strong) {
        return 1.0 - 2.0 * y_budget / x_budget +
               y_budget / (x_budget * x_budget) * total;
    }
    return total / (4.0 * y_budget);
}

double analytic_value_vs_defender_eq(const Allocation& y, const Graph& g,
                                     double x_budget, double y_budget) {
    if (!(x_budget > 0.0) || !(y_budget > 0.0)) {
        throw std::invalid_argument("budgets must be positive");
    }
    check_allocation(y, g, "attacker");
    const bool defender_strong = x_budget >= 2.0 * y_budget;
    // Defender's top draw is 2X when delta = 1, else 4Y; weights d_i/(2|E|).
    const double top = defender_strong ? 2.0 * x_budget : 4.0 * y_budget;
    check_caps(y, regime_caps(g, top, 2.0 * g.edge_count()), "attacker");

    const double e = g.edge_count();
    if (defender_strong) {
        double acc = 0.0;
        for (auto [a, b] : g.edges()) {
            acc += std::max(y[a] / g.degree(a), y[b] / g.degree(b));
        }
        return acc / x_budget;
    }
    // Edges the attacker leaves fully alone are kept by the defender even
    // when it draws its zero atom, so they contribute nothing here.
    double acc = 0.0;
    const double base = 1.0 - x_budget / (2.0 * y_budget);
    const double scale = x_budget * e / (4.0 * y_budget * y_budget);
    for (auto [a, b] : g.edges()) {
        if (y[a] == 0.0 && y[b] == 0.0) continue;
        acc += base + scale * std::max(y[a] / g.degree(a), y[b] / g.degree(b));
    }
    return acc / e;
}

}  // namespace lotto
