// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Expects the path to the netlotto binary as argv[1] (used by the
// CSV determinism criterion).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "lotto/deterministic.hpp"
#include "lotto/experiment.hpp"
#include "lotto/graph.hpp"
#include "lotto/payoff.hpp"
#include "lotto/rng.hpp"
#include "lotto/strategy.hpp"

using lotto::Allocation;
using lotto::CorrelatedStrategy;
using lotto::Graph;
using lotto::TieRule;

namespace {

constexpr std::uint64_t kSeed = 20250811;
std::string g_netlotto_path;

// --- helpers ---------------------------------------------------------------

Allocation capped_deviation(const std::vector<double>& caps, double budget,
                            lotto::rng::Engine& eng) {
    Allocation x(caps.size());
    double total = 0.0;
    for (std::size_t i = 0; i < caps.size(); ++i) {
        x[i] = lotto::rng::uniform(eng, 0.0, caps[i]);
        total += x[i];
    }
    if (total > budget) {
        const double scale = budget * lotto::rng::uniform01(eng) / total;
        for (double& v : x) v *= scale;
    }
    return x;
}

Graph random_bipartite(int n1, int n2, double p, lotto::rng::Engine& eng) {
    std::vector<Graph::Edge> edges;
    for (int a = 0; a < n1; ++a) {
        for (int b = 0; b < n2; ++b) {
            if (lotto::rng::uniform01(eng) < p) edges.push_back({a, n1 + b});
        }
    }
    if (edges.empty()) edges.push_back({0, n1});
    return Graph(n1 + n2, std::move(edges));
}

Allocation random_feasible(int n, double budget, lotto::rng::Engine& eng) {
    Allocation x(n);
    double total = 0.0;
    for (double& v : x) {
        v = lotto::rng::uniform(eng, 0.0, 1.0);
        total += v;
    }
    for (double& v : x) v *= budget / total;
    return x;
}

struct Check {
    bool ok = true;
    std::string detail;

    void fail(const std::string& message) {
        if (ok) detail = message;
        ok = false;
    }
    void require(bool cond, const std::string& message) {
        if (!cond) fail(message);
    }
};

// --- criterion 1: closed-form values ----------------------------------------

bool criterion_closed_forms(std::string& detail) {
    Check c;
    c.require(lotto::gamma(6.0, 6.0) == 0.25, "gamma(6,6) != 0.25");
    c.require(lotto::gamma(4.0, 1.0) == 0.75, "gamma(4,1) != 0.75");
    for (double y : {0.25, 1.0, 3.0, 7.5}) {
        const double x = 2.0 * y;
        c.require(1.0 - y / x == 0.5 && x / (4.0 * y) == 0.5 &&
                      lotto::gamma(x, y) == 0.5,
                  "branches disagree at X = 2Y");
    }
    int points = 0;
    for (int xi = 1; xi <= 10; ++xi) {
        for (int yi = 1; yi <= 10; ++yi) {
            const double x = 0.5 * xi, y = 0.5 * yi;
            ++points;
            if (lotto::gamma_n(2, x, y) != lotto::gamma(x, y)) {
                c.fail("gamma_2 != gamma at X=" + lotto::format_double(x) +
                       " Y=" + lotto::format_double(y));
            }
            for (int n : {2, 3, 4, 7, 20, 100}) {
                if (lotto::gamma_n(n, x, y) < lotto::gamma(x, y)) {
                    c.fail("gamma_n < gamma on the grid");
                }
            }
        }
    }
    detail = "exact values, gamma_2 == gamma bitwise on " +
             std::to_string(points) + " grid points, gamma_n >= gamma";
    if (!c.ok) detail = c.detail;
    return c.ok;
}

// --- criterion 2: bipartite equilibrium payoff ------------------------------

bool criterion_equilibrium_payoff(std::string& detail) {
    const double X = 6.0, Y = 6.0;
    const std::int64_t samples = 1000000;
    struct Row {
        const char* name;
        Graph g;
    };
    const std::vector<Row> rows = {
        {"star(6)", lotto::star(6)}, {"ring(6)", lotto::ring(6)},
        {"line(5)", lotto::line(5)}};
    Check c;
    std::vector<lotto::PayoffEstimate> estimates;
    std::ostringstream note;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const Graph& g = rows[k].g;
        const auto part = lotto::bipartite_partition(g);
        const auto fx = lotto::defender_equilibrium(g, X, Y);
        const auto fy = lotto::attacker_equilibrium(g, *part, X, Y);
        const auto est = lotto::monte_carlo_payoff(
            fx, fy, g, TieRule::defender_wins_ties, samples,
            lotto::rng::stream_key(kSeed, 2, k));
        estimates.push_back(est);
        note << rows[k].name << "=" << est.mean << " ";
        c.require(std::fabs(est.mean - 0.25) <= 0.005,
                  std::string(rows[k].name) + " off 0.25 by more than 0.005");
    }
    for (std::size_t a = 0; a < estimates.size(); ++a) {
        for (std::size_t b = a + 1; b < estimates.size(); ++b) {
            const double band = 3.0 * std::hypot(estimates[a].std_error,
                                                 estimates[b].std_error);
            c.require(std::fabs(estimates[a].mean - estimates[b].mean) <= band,
                      "graphs disagree beyond combined 3 sigma");
        }
    }
    detail = c.ok ? note.str() + "(each within 0.005 of 0.25)" : c.detail;
    return c.ok;
}

// --- criteria 3 & 4: proof oracles and no-profitable-deviation --------------

struct DeviationCase {
    double mc_mean = 0.0;     // defender's Monte Carlo payoff
    double mc_se = 0.0;
    double analytic = 0.0;    // defender's closed-form payoff
    double gamma_value = 0.0;
    bool defender_side = false;
};

const std::vector<DeviationCase>& deviation_study() {
    static const std::vector<DeviationCase> cases = [] {
        std::vector<DeviationCase> out;
        lotto::rng::Engine graph_eng = lotto::rng::make_engine(kSeed, 3, 0);
        const Graph ring6 = lotto::ring(6);
        const Graph bip10 = random_bipartite(5, 5, 0.5, graph_eng);
        const std::int64_t samples = 100000;
        int run = 0;
        for (const Graph* g : {&ring6, &bip10}) {
            const auto part = lotto::bipartite_partition(*g);
            for (auto [X, Y] : {std::pair{6.0, 6.0}, std::pair{12.0, 3.0}}) {
                const auto fx = lotto::defender_equilibrium(*g, X, Y);
                const auto fy = lotto::attacker_equilibrium(*g, *part, X, Y);
                const double gam = lotto::gamma(X, Y);
                lotto::rng::Engine dev_eng =
                    lotto::rng::make_engine(kSeed, 4, run);
                for (int d = 0; d < 50; ++d) {
                    DeviationCase dc;
                    dc.defender_side = true;
                    dc.gamma_value = gam;
                    const Allocation x = capped_deviation(fy.node_caps(), X, dev_eng);
                    dc.analytic = lotto::analytic_value_vs_attacker_eq(x, *g, X, Y);
                    const auto est = lotto::monte_carlo_payoff(
                        x, fy, *g, TieRule::defender_wins_ties, samples,
                        lotto::rng::stream_key(kSeed, 5, run * 1000 + d));
                    dc.mc_mean = est.mean;
                    dc.mc_se = est.std_error;
                    out.push_back(dc);
                }
                for (int d = 0; d < 50; ++d) {
                    DeviationCase dc;
                    dc.defender_side = false;
                    dc.gamma_value = gam;
                    const Allocation y = capped_deviation(fx.node_caps(), Y, dev_eng);
                    // Attacker's closed form, stated as the defender's payoff.
                    dc.analytic =
                        1.0 - lotto::analytic_value_vs_defender_eq(y, *g, X, Y);
                    const auto est = lotto::monte_carlo_payoff(
                        fx, y, *g, TieRule::defender_wins_ties, samples,
                        lotto::rng::stream_key(kSeed, 6, run * 1000 + d));
                    dc.mc_mean = est.mean;
                    dc.mc_se = est.std_error;
                    out.push_back(dc);
                }
                ++run;
            }
        }
        return out;
    }();
    return cases;
}

bool criterion_proof_oracles(std::string& detail) {
    const auto& cases = deviation_study();
    int inside = 0;
    double worst = 0.0;
    for (const auto& dc : cases) {
        const double band = 3.0 * dc.mc_se + 1e-12;
        const double dev = std::fabs(dc.mc_mean - dc.analytic);
        worst = std::max(worst, dc.mc_se > 0 ? dev / dc.mc_se : 0.0);
        if (dev <= band) ++inside;
    }
    const double frac = static_cast<double>(inside) / cases.size();
    std::ostringstream note;
    note << inside << "/" << cases.size() << " inside 3 sigma (worst "
         << worst << " sigma)";
    detail = note.str();
    return frac >= 0.95;
}

bool criterion_no_profitable_deviation(std::string& detail) {
    const auto& cases = deviation_study();
    Check c;
    for (const auto& dc : cases) {
        const double band = 3.0 * dc.mc_se + 1e-12;
        if (dc.defender_side) {
            c.require(dc.mc_mean <= dc.gamma_value + band,
                      "defender deviation beats gamma beyond 3 sigma");
        } else {
            c.require(dc.mc_mean >= dc.gamma_value - band,
                      "attacker deviation pushes the defender below gamma");
        }
    }
    detail = c.ok ? std::to_string(cases.size()) + " deviations bounded by gamma"
                  : c.detail;
    return c.ok;
}

// --- criterion 5: vertex-cover upper bound ----------------------------------

bool criterion_upper_bound(std::string& detail) {
    std::vector<std::pair<std::string, Graph>> graphs;
    graphs.emplace_back("triangle", Graph(3, {{0, 1}, {1, 2}, {0, 2}}));
    graphs.emplace_back("complete(6)", lotto::complete(6));
    graphs.emplace_back("complete(10)", lotto::complete(10));
    for (int k = 0; k < 20; ++k) {
        graphs.emplace_back("er10-" + std::to_string(k),
                            lotto::erdos_renyi(10, 0.5, kSeed + 100 + k));
    }
    const std::int64_t samples = 20000;
    Check c;
    int tested = 0;
    int pair_index = 0;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        const Graph& g = graphs[gi].second;
        for (auto [X, Y] : {std::pair{2.0, 2.0}, std::pair{6.0, 2.0},
                            std::pair{2.0, 6.0}}) {
            const auto fy = lotto::attacker_upper_bound(g, X, Y);
            const double bound = lotto::gamma_n(g.node_count(), X, Y);
            lotto::rng::Engine dev_eng =
                lotto::rng::make_engine(kSeed, 7, pair_index++);
            for (int d = 0; d < 50; ++d) {
                const Allocation x = capped_deviation(fy.node_caps(), X, dev_eng);
                const auto est = lotto::monte_carlo_payoff(
                    x, fy, g, TieRule::defender_wins_ties, samples,
                    lotto::rng::stream_key(kSeed, 8, tested));
                ++tested;
                if (est.mean > bound + 3.0 * est.std_error + 1e-12) {
                    c.fail(graphs[gi].first + " beats gamma_n at X=" +
                           lotto::format_double(X) + " Y=" +
                           lotto::format_double(Y));
                }
            }
        }
    }
    detail = c.ok ? std::to_string(tested) + " defender strategies capped by gamma_n"
                  : c.detail;
    return c.ok;
}

// --- criterion 6: cdf fidelity and budget -----------------------------------

bool criterion_cdf_fidelity(std::string& detail) {
    struct Item {
        std::string name;
        Graph g;
        CorrelatedStrategy s;
    };
    std::vector<Item> items;
    for (auto [X, Y] : {std::pair{6.0, 6.0}, std::pair{12.0, 3.0}}) {
        for (const auto& [name, g] :
             std::vector<std::pair<std::string, Graph>>{{"star6", lotto::star(6)},
                                                        {"ring6", lotto::ring(6)},
                                                        {"line5", lotto::line(5)}}) {
            const auto part = lotto::bipartite_partition(g);
            items.push_back({name + ".defender", g,
                             lotto::defender_equilibrium(g, X, Y)});
            items.push_back({name + ".attacker", g,
                             lotto::attacker_equilibrium(g, *part, X, Y)});
        }
    }
    const Graph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
    for (auto [X, Y] : {std::pair{2.0, 2.0}, std::pair{6.0, 2.0},
                        std::pair{2.0, 6.0}}) {
        items.push_back({"triangle.cover", triangle,
                         lotto::attacker_upper_bound(triangle, X, Y)});
        items.push_back({"complete6.cover", lotto::complete(6),
                         lotto::attacker_upper_bound(lotto::complete(6), X, Y)});
        const Graph er = lotto::erdos_renyi(10, 0.5, kSeed + 300);
        items.push_back({"er10.cover", er, lotto::attacker_upper_bound(er, X, Y)});
    }

    const int samples = 100000;
    const int points = 20;
    Check c;
    double worst = 0.0;
    for (std::size_t it = 0; it < items.size(); ++it) {
        const auto& item = items[it];
        const int n = item.g.node_count();
        lotto::rng::Engine point_eng = lotto::rng::make_engine(kSeed, 9, it);
        std::vector<Allocation> probes(points, Allocation(n, 0.0));
        std::vector<double> closed(points);
        for (int k = 0; k < points; ++k) {
            for (int i = 0; i < n; ++i) {
                probes[k][i] =
                    lotto::rng::uniform(point_eng, 0.0, 1.25 * item.s.node_cap(i));
            }
            closed[k] = item.s.cdf(probes[k]);
        }
        std::vector<int> hits(points, 0);
        lotto::rng::Engine sample_eng = lotto::rng::make_engine(kSeed, 10, it);
        Allocation buf;
        double total = 0.0, total_sq = 0.0;
        for (int r = 0; r < samples; ++r) {
            item.s.sample(sample_eng, buf);
            double t = 0.0;
            for (double v : buf) t += v;
            total += t;
            total_sq += t * t;
            for (int k = 0; k < points; ++k) {
                bool le = true;
                for (int i = 0; i < n && le; ++i) le = buf[i] <= probes[k][i];
                hits[k] += le;
            }
        }
        for (int k = 0; k < points; ++k) {
            const double dev =
                std::fabs(static_cast<double>(hits[k]) / samples - closed[k]);
            worst = std::max(worst, dev);
            if (dev >= 0.01) {
                c.fail(item.name + ": empirical cdf off by " +
                       lotto::format_double(dev));
            }
        }
        const double mean = total / samples;
        const double var = (total_sq - samples * mean * mean) / (samples - 1.0);
        const double se = std::sqrt(var / samples);
        if (std::fabs(mean - item.s.budget()) > 3.0 * se) {
            c.fail(item.name + ": sampled budget off the mark");
        }
    }
    if (c.ok) {
        detail = std::to_string(items.size()) + " strategies x " +
                 std::to_string(points) + " points, worst |emp-cdf| = " +
                 lotto::format_double(worst);
    } else {
        detail = c.detail;
    }
    return c.ok;
}

// --- criterion 7: greedy approximation guarantee -----------------------------

bool criterion_greedy_guarantee(std::string& detail) {
    const double factor = 1.0 - 1.0 / std::sqrt(std::exp(1.0));
    lotto::rng::Engine eng = lotto::rng::make_engine(kSeed, 11, 0);
    const double ps[] = {0.3, 0.5, 0.8};
    Check c;
    double worst_ratio = 1.0;
    for (int inst = 0; inst < 200; ++inst) {
        const int n = 6 + static_cast<int>(lotto::rng::uniform01(eng) * 7);
        const Graph g = lotto::erdos_renyi(n, ps[inst % 3], kSeed + 500 + inst);
        Allocation x(n);
        for (double& v : x) v = lotto::rng::uniform(eng, 0.05, 1.0);
        const double budget = lotto::rng::uniform01(eng) * 1.2 *
                              std::accumulate(x.begin(), x.end(), 0.0);
        const auto greedy = lotto::greedy_response(x, budget, g);
        const auto exact = lotto::brute_force_response(x, budget, g);
        if (greedy.covered_edges > exact.covered) {
            c.fail("greedy exceeded the optimum");
        }
        if (exact.covered > 0) {
            const double ratio =
                static_cast<double>(greedy.covered_edges) / exact.covered;
            worst_ratio = std::min(worst_ratio, ratio);
            if (ratio < factor) c.fail("greedy below the guarantee");
        }
    }
    detail = c.ok ? "200 instances, worst greedy/optimal = " +
                        lotto::format_double(worst_ratio) + " >= " +
                        lotto::format_double(factor)
                  : c.detail;
    return c.ok;
}

// --- criterion 8: deterministic positivity constructions ---------------------

bool criterion_positivity(std::string& detail) {
    Check c;
    lotto::rng::Engine eng = lotto::rng::make_engine(kSeed, 12, 0);
    const double X = 2.0;

    // (a) bipartite: above X/2 the attacker floods the cheaper side.
    for (int trial = 0; trial < 100; ++trial) {
        const int n1 = 2 + static_cast<int>(lotto::rng::uniform01(eng) * 5);
        const int n2 = 2 + static_cast<int>(lotto::rng::uniform01(eng) * 5);
        const Graph g = random_bipartite(n1, n2, 0.6, eng);
        const Allocation x = random_feasible(g.node_count(), X, eng);
        const auto part = lotto::bipartite_partition(g);
        if (!part) {
            c.fail("bipartite construction produced an odd cycle");
            continue;
        }
        auto cost = [&x](const std::vector<int>& side) {
            double t = 0.0;
            for (int v : side) t += x[v];
            return t;
        };
        const double c1 = cost(part->part1), c2 = cost(part->part2);
        const auto& cheap = c1 <= c2 ? part->part1 : part->part2;
        c.require(std::min(c1, c2) <= X / 2.0 + 1e-12, "side sums exceed X/2");
        c.require(std::min(c1, c2) <= 0.51 * X, "cheap side unaffordable at 0.51X");
        Allocation y(g.node_count(), 0.0);
        for (int v : cheap) y[v] = x[v];
        c.require(lotto::edges_covered(g, cheap) == g.edge_count(),
                  "side cover missed an edge");
        c.require(lotto::pure_payoff(x, y, g, TieRule::attacker_wins_ties) == 0.0,
                  "defender kept an edge against the side cover");
        c.require(lotto::positivity_certificate(g, X, 0.51 * X) ==
                      lotto::Positivity::zero,
                  "certificate sign wrong on bipartite");
    }

    // (b)/(c) complete graphs: threshold (n-1)X/n from both sides.
    for (int n = 3; n <= 10; ++n) {
        const Graph g = lotto::complete(n);
        const double threshold = (n - 1.0) * X / n;
        const Allocation uniform(n, X / n);
        const auto below = lotto::brute_force_response(uniform, 0.99 * threshold, g);
        c.require(below.covered < g.edge_count(),
                  "uniform defense lost everything below the threshold");
        c.require(lotto::positivity_certificate(g, X, 0.99 * threshold) ==
                      lotto::Positivity::positive,
                  "certificate sign wrong below threshold");
        c.require(lotto::positivity_certificate(g, X, 1.01 * threshold) ==
                      lotto::Positivity::zero,
                  "certificate sign wrong above threshold");
        for (int trial = 0; trial < 20; ++trial) {
            const Allocation x = random_feasible(n, X, eng);
            const int hog = static_cast<int>(
                std::max_element(x.begin(), x.end()) - x.begin());
            const auto cover = lotto::vertex_cover_complement(g, hog);
            double cover_cost = 0.0;
            Allocation y(n, 0.0);
            for (int v : cover) {
                cover_cost += x[v];
                y[v] = x[v];
            }
            c.require(cover_cost <= 1.01 * threshold, "cheapest cover unaffordable");
            c.require(lotto::pure_payoff(x, y, g, TieRule::attacker_wins_ties) == 0.0,
                      "cover attack left the defender an edge");
        }
    }

    // (d) arbitrary graphs: pairing X/2 on one edge resists Y < X/2.
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 4 + static_cast<int>(lotto::rng::uniform01(eng) * 7);
        const Graph g = lotto::erdos_renyi(n, 0.5, kSeed + 700 + trial);
        Allocation x(n, 0.0);
        const auto [a, b] = g.edges()[0];
        x[a] = x[b] = X / 2.0;
        const auto exact = lotto::brute_force_response(x, 0.49 * X, g);
        c.require(exact.covered == g.edge_count() - 1,
                  "paired edge fell below X/2");
        c.require(lotto::positivity_certificate(g, X, 0.49 * X) ==
                      lotto::Positivity::positive,
                  "certificate sign wrong under paired defense");
    }

    detail = c.ok ? "side covers, complete-graph thresholds, cheapest covers, "
                    "paired edges all as constructed"
                  : c.detail;
    return c.ok;
}

// --- criterion 9: deterministic-vs-randomized sweep --------------------------

bool criterion_ratio_sweep(std::string& detail) {
    const double X = 2.0;
    const std::vector<double> grid = lotto::parse_grid("0.2:4.0:0.2");
    const std::vector<double> er_ps = {0.1, 0.3, 0.5, 0.8};
    const int replicates = 100;
    const int n = 100;

    // mean ratio and its standard error per (curve, grid point)
    struct Curve {
        std::string name;
        std::vector<double> mean, se;
    };
    std::vector<Curve> er_curves;
    for (std::size_t pi = 0; pi < er_ps.size(); ++pi) {
        const double p = er_ps[pi];
        Curve curve;
        curve.name = "er:" + lotto::format_double(p);
        const std::int64_t cells =
            static_cast<std::int64_t>(grid.size()) * replicates;
        std::vector<double> ratios(cells, 0.0);
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t cell = 0; cell < cells; ++cell) {
            const int yi = static_cast<int>(cell / replicates);
            const Graph g = lotto::erdos_renyi(
                n, p,
                lotto::rng::stream_key(kSeed, 13 + pi, static_cast<std::uint64_t>(cell)));
            const auto rows = lotto::ratio_experiment(
                g, X, {grid[yi]}, TieRule::attacker_wins_ties);
            ratios[cell] = rows[0].ratio;
        }
        for (std::size_t yi = 0; yi < grid.size(); ++yi) {
            double sum = 0.0, sum_sq = 0.0;
            for (int rep = 0; rep < replicates; ++rep) {
                const double r = ratios[yi * replicates + rep];
                sum += r;
                sum_sq += r * r;
            }
            const double mean = sum / replicates;
            const double var = std::max(
                0.0, (sum_sq - replicates * mean * mean) / (replicates - 1.0));
            curve.mean.push_back(mean);
            curve.se.push_back(std::sqrt(var / replicates));
        }
        er_curves.push_back(std::move(curve));
    }

    std::map<std::string, std::vector<double>> fixed_curves;
    for (const char* name : {"complete", "star", "ring", "line"}) {
        const Graph g = std::string(name) == "complete" ? lotto::complete(n)
                        : std::string(name) == "star"   ? lotto::star(n)
                        : std::string(name) == "ring"   ? lotto::ring(n)
                                                        : lotto::line(n);
        const auto rows =
            lotto::ratio_experiment(g, X, grid, TieRule::attacker_wins_ties);
        std::vector<double> ratios;
        for (const auto& row : rows) ratios.push_back(row.ratio);
        fixed_curves[name] = std::move(ratios);
    }

    // Four sub-claims, each tracked separately so a failure names the exact
    // grid points involved. Grid points where the ordering degenerates are
    // also summarized: for Y >= X the greedy attacker affords the whole
    // defense budget and every curve is identically zero, and near Y = 0 the
    // budget-quantization regime bunches every ratio at ~gamma.
    const Curve& sparse = er_curves.front();   // p = 0.1
    const Curve& dense = er_curves.back();     // p = 0.8
    std::vector<std::string> bad_density, bad_complete, bad_sparse_graphs, bad_cap;
    std::vector<std::string> mid_violations;
    for (std::size_t yi = 0; yi < grid.size(); ++yi) {
        const std::string at = lotto::format_double(grid[yi]);
        const bool mid = grid[yi] >= 0.59 && grid[yi] <= 1.81;
        auto note_bad = [&](std::vector<std::string>& bucket, const std::string& what) {
            bucket.push_back(what);
            if (mid) mid_violations.push_back(what);
        };
        if (!(dense.mean[yi] > sparse.mean[yi])) note_bad(bad_density, at);
        for (const auto& curve : er_curves) {
            if (!(fixed_curves["complete"][yi] >= curve.mean[yi])) {
                note_bad(bad_complete, at + "(" + curve.name + ")");
            }
            for (const char* low : {"star", "ring", "line"}) {
                if (!(fixed_curves[low][yi] <= curve.mean[yi])) {
                    note_bad(bad_sparse_graphs,
                             std::string(low) + "@" + at + ">" + curve.name);
                }
            }
            if (!(curve.mean[yi] <= 1.0 + 3.0 * curve.se[yi])) {
                note_bad(bad_cap, curve.name + "@" + at);
            }
        }
        for (const auto& [name, ratios] : fixed_curves) {
            if (!(ratios[yi] <= 1.0 + 1e-12)) note_bad(bad_cap, name + "@" + at);
        }
    }

    auto join = [](const std::vector<std::string>& items) {
        std::string out;
        for (std::size_t k = 0; k < items.size() && k < 6; ++k) {
            if (k) out += ' ';
            out += items[k];
        }
        if (items.size() > 6) out += " ...(" + std::to_string(items.size()) + ")";
        return out.empty() ? std::string("ok") : out;
    };
    std::ostringstream note;
    note << "er(0.8)>er(0.1): " << join(bad_density)
         << "; complete>=er: " << join(bad_complete)
         << "; star/ring/line<=er: " << join(bad_sparse_graphs)
         << "; ratios<=1: " << join(bad_cap)
         << "; non-degenerate range Y in [0.6,1.8]: "
         << (mid_violations.empty() ? "all orderings hold" : join(mid_violations));
    detail = note.str();
    return bad_density.empty() && bad_complete.empty() &&
           bad_sparse_graphs.empty() && bad_cap.empty();
}

// --- criterion 10: byte-identical csv ----------------------------------------

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

bool criterion_determinism(std::string& detail) {
    if (g_netlotto_path.empty()) {
        detail = "netlotto binary path not given";
        return false;
    }
    Check c;
    const std::string base = "acceptance_tmp";
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"simulate",
         " simulate --graph star:6 --x 6 --y 6 --samples 20000 --seed 3"},
        {"simulate-er",
         " simulate --graph er:10:0.5 --x 4 --y 2 --strategy-y upper-bound"
         " --replicates 3 --samples 5000 --seed 9"},
        {"ratio-sweep",
         " ratio-sweep --graph er:30:0.3 --graph star:30 --x 2"
         " --y-grid 0.4:2.0:0.4 --replicates 5 --seed 4 --tie attacker"},
        {"greedy", " greedy --graph complete:12 --x 2 --y 1.1 --tie attacker"},
        {"gen-graph", " gen-graph --graph er:12:0.4 --seed 11"},
    };
    for (const auto& [name, args] : commands) {
        std::vector<std::string> outputs;
        for (int run = 0; run < 2; ++run) {
            const std::string path =
                base + "_" + name + "_" + std::to_string(run) + ".csv";
            // Alternate worker counts where the flag exists; output must not move.
            const std::string workers =
                name == "ratio-sweep" || name == "simulate"
                    ? " --workers " + std::to_string(1 + run)
                    : "";
            const std::string cmd =
                "\"" + g_netlotto_path + "\"" + args + workers + " --out " + path;
            const int rc = std::system(cmd.c_str());
            if (rc != 0) {
                c.fail(name + " exited with " + std::to_string(rc));
                break;
            }
            outputs.push_back(slurp(path));
            std::remove(path.c_str());
        }
        if (outputs.size() == 2) {
            c.require(!outputs[0].empty(), name + " produced no output");
            c.require(outputs[0] == outputs[1], name + " reruns differ");
        }
    }
    detail = c.ok ? std::to_string(commands.size()) +
                        " commands byte-identical across reruns and worker counts"
                  : c.detail;
    return c.ok;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_netlotto_path = argv[1];
    int only = 0;
    if (argc > 2) only = std::atoi(argv[2]);

    struct Entry {
        int id;
        const char* title;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Entry> entries = {
        {1, "closed-form values", criterion_closed_forms},
        {2, "bipartite equilibrium payoff", criterion_equilibrium_payoff},
        {3, "proof-oracle equivalence", criterion_proof_oracles},
        {4, "no profitable deviation", criterion_no_profitable_deviation},
        {5, "vertex-cover upper bound", criterion_upper_bound},
        {6, "cdf fidelity and budget", criterion_cdf_fidelity},
        {7, "greedy approximation guarantee", criterion_greedy_guarantee},
        {8, "deterministic positivity constructions", criterion_positivity},
        {9, "deterministic-vs-randomized sweep", criterion_ratio_sweep},
        {10, "byte-identical csv", criterion_determinism},
    };

    int failures = 0;
    for (const auto& entry : entries) {
        if (only != 0 && entry.id != only) continue;
        std::string note;
        bool ok = false;
        try {
            ok = entry.run(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        std::printf("[%s] criterion %d: %s - %s\n", ok ? "PASS" : "FAIL",
                    entry.id, entry.title, note.c_str());
        std::fflush(stdout);
        failures += ok ? 0 : 1;
    }
    if (failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", failures);
    return 1;
}
