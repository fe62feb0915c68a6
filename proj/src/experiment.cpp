#include "lotto/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "lotto/rng.hpp"
#include "lotto/strategy.hpp"

namespace lotto {

namespace {

constexpr std::uint64_t kStreamGraphDraw = 0x6731;
constexpr std::uint64_t kStreamEstimate = 0x6d63;

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, sep)) parts.push_back(token);
    return parts;
}

int parse_int(const std::string& text, const char* what) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("bad ") + what + ": '" + text + "'");
    }
}

double parse_double(const std::string& text, const char* what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("bad ") + what + ": '" + text + "'");
    }
}

std::string join_nodes(const std::vector<int>& nodes) {
    std::string out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(nodes[i]);
    }
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

GraphSpec GraphSpec::parse(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.empty()) throw std::invalid_argument("empty graph spec");
    GraphSpec spec;
    const std::string& kind = parts[0];
    auto need = [&](std::size_t count) {
        if (parts.size() != count) {
            throw std::invalid_argument("bad graph spec '" + text + "'");
        }
    };
    if (kind == "star" || kind == "ring" || kind == "line" || kind == "complete") {
        need(2);
        spec.n = parse_int(parts[1], "node count");
        spec.kind = kind == "star"     ? Kind::star
                    : kind == "ring"   ? Kind::ring
                    : kind == "line"   ? Kind::line
                                       : Kind::complete;
    } else if (kind == "er") {
        need(3);
        spec.kind = Kind::erdos_renyi;
        spec.n = parse_int(parts[1], "node count");
        spec.p = parse_double(parts[2], "edge probability");
    } else if (kind == "file") {
        // Paths may contain ':'; everything after the prefix is the path.
        if (text.size() <= 5) throw std::invalid_argument("bad graph spec '" + text + "'");
        spec.kind = Kind::file;
        spec.path = text.substr(5);
    } else {
        throw std::invalid_argument("unknown graph kind '" + kind + "'");
    }
    return spec;
}

std::string GraphSpec::id() const {
    switch (kind) {
        case Kind::star: return "star:" + std::to_string(n);
        case Kind::ring: return "ring:" + std::to_string(n);
        case Kind::line: return "line:" + std::to_string(n);
        case Kind::complete: return "complete:" + std::to_string(n);
        case Kind::erdos_renyi:
            return "er:" + std::to_string(n) + ":" + format_double(p);
        default: return "file:" + path;
    }
}

Graph GraphSpec::build(std::uint64_t seed, int* redraws) const {
    if (redraws) *redraws = 0;
    switch (kind) {
        case Kind::star: return star(n);
        case Kind::ring: return ring(n);
        case Kind::line: return line(n);
        case Kind::complete: return complete(n);
        case Kind::erdos_renyi: return erdos_renyi(n, p, seed, redraws);
        default: return read_edge_list_file(path);
    }
}

const char* to_string(StrategyChoice c) {
    switch (c) {
        case StrategyChoice::defender_eq: return "defender-eq";
        case StrategyChoice::attacker_eq: return "attacker-eq";
        case StrategyChoice::upper_bound: return "upper-bound";
        default: return "pure";
    }
}

StrategyChoice parse_strategy_choice(const std::string& text) {
    if (text == "defender-eq") return StrategyChoice::defender_eq;
    if (text == "attacker-eq") return StrategyChoice::attacker_eq;
    if (text == "upper-bound") return StrategyChoice::upper_bound;
    if (text == "pure") return StrategyChoice::pure;
    throw std::invalid_argument("unknown strategy '" + text + "'");
}

namespace {

SideStrategy build_side(StrategyChoice choice, bool defender_side, const Graph& g,
                        const SimulateConfig& cfg) {
    switch (choice) {
        case StrategyChoice::defender_eq:
            if (!defender_side) {
                throw std::invalid_argument("defender-eq is a defender strategy");
            }
            return defender_equilibrium(g, cfg.x_budget, cfg.y_budget);
        case StrategyChoice::attacker_eq: {
            if (defender_side) {
                throw std::invalid_argument("attacker-eq is an attacker strategy");
            }
            const auto part = bipartite_partition(g);
            if (!part) {
                throw std::runtime_error(
                    "attacker equilibrium needs a bipartite graph; odd cycle: " +
                    join_nodes(odd_cycle(g)));
            }
            return attacker_equilibrium(g, *part, cfg.x_budget, cfg.y_budget);
        }
        case StrategyChoice::upper_bound:
            if (defender_side) {
                throw std::invalid_argument("upper-bound is an attacker strategy");
            }
            return attacker_upper_bound(g, cfg.x_budget, cfg.y_budget);
        default: {
            const Allocation& alloc = defender_side ? cfg.pure_x : cfg.pure_y;
            if (static_cast<int>(alloc.size()) != g.node_count()) {
                throw std::invalid_argument("pure allocation length mismatch");
            }
            return alloc;
        }
    }
}

}  // namespace

SimulateResult run_simulate(const SimulateConfig& cfg) {
    if (cfg.samples < 1) throw std::invalid_argument("samples must be at least 1");
    if (cfg.replicates < 1) throw std::invalid_argument("replicates must be at least 1");
    if (!(cfg.x_budget > 0.0) || !(cfg.y_budget > 0.0)) {
        throw std::invalid_argument("budgets must be positive");
    }
    const int reps = cfg.graph.randomized() ? cfg.replicates : 1;

    SimulateResult result;
    std::ostringstream out;
    out << "# netlotto simulate csv v1\n";
    out << "graph_id,n,edges,x_budget,y_budget,strategy_x,strategy_y,tie_rule,"
           "samples,seed,mean,std_error\n";
    for (int rep = 0; rep < reps; ++rep) {
        const std::uint64_t graph_seed =
            rng::stream_key(cfg.seed, kStreamGraphDraw, rep);
        const Graph g = cfg.graph.build(graph_seed);
        const SideStrategy fx = build_side(cfg.strategy_x, true, g, cfg);
        const SideStrategy fy = build_side(cfg.strategy_y, false, g, cfg);
        const std::uint64_t mc_seed = rng::stream_key(cfg.seed, kStreamEstimate, rep);
        const PayoffEstimate est =
            monte_carlo_payoff(fx, fy, g, cfg.tie, cfg.samples, mc_seed);
        out << cfg.graph.id() << ',' << g.node_count() << ',' << g.edge_count()
            << ',' << format_double(cfg.x_budget) << ','
            << format_double(cfg.y_budget) << ',' << to_string(cfg.strategy_x)
            << ',' << to_string(cfg.strategy_y) << ',' << to_string(cfg.tie) << ','
            << cfg.samples << ',' << mc_seed << ',' << format_double(est.mean)
            << ',' << format_double(est.std_error) << '\n';
        if (cfg.dump_strategies) {
            const std::string tag = reps > 1 ? ".rep" + std::to_string(rep) : "";
            if (const auto* s = std::get_if<CorrelatedStrategy>(&fx)) {
                result.strategy_dumps.emplace_back(
                    std::string(to_string(cfg.strategy_x)) + tag, s->to_json());
            }
            if (const auto* s = std::get_if<CorrelatedStrategy>(&fy)) {
                result.strategy_dumps.emplace_back(
                    std::string(to_string(cfg.strategy_y)) + tag, s->to_json());
            }
        }
    }
    result.csv = out.str();
    return result;
}

std::string run_ratio_sweep(const RatioSweepConfig& cfg) {
    if (cfg.graphs.empty()) throw std::invalid_argument("no graphs given");
    if (cfg.y_grid.empty()) throw std::invalid_argument("Y grid must be nonempty");
    if (cfg.replicates < 1) throw std::invalid_argument("replicates must be at least 1");
    if (!(cfg.x_budget > 0.0)) throw std::invalid_argument("budget must be positive");

    struct Cell {
        int graph_index, y_index, replicate;
        double payoff = 0.0, ratio = 0.0;
        bool degenerate = false;
        int n = 0;
    };
    std::vector<Cell> cells;
    for (int gi = 0; gi < static_cast<int>(cfg.graphs.size()); ++gi) {
        const int reps = cfg.graphs[gi].randomized() ? cfg.replicates : 1;
        for (int yi = 0; yi < static_cast<int>(cfg.y_grid.size()); ++yi) {
            for (int rep = 0; rep < reps; ++rep) {
                cells.push_back({gi, yi, rep});
            }
        }
    }

    const std::int64_t count = static_cast<std::int64_t>(cells.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < count; ++c) {
        Cell& cell = cells[c];
        const GraphSpec& spec = cfg.graphs[cell.graph_index];
        // One substream per (graph, Y index, replicate) cell.
        const std::uint64_t graph_seed = rng::stream_key(
            cfg.seed, kStreamGraphDraw + cell.graph_index,
            (static_cast<std::uint64_t>(cell.y_index) << 32) |
                static_cast<std::uint64_t>(cell.replicate));
        const Graph g = spec.build(graph_seed);
        const double y_budget = cfg.y_grid[cell.y_index];
        const auto rows = ratio_experiment(g, cfg.x_budget, {y_budget}, cfg.tie);
        cell.payoff = rows[0].deterministic_payoff;
        cell.ratio = rows[0].ratio;
        cell.degenerate = rows[0].degenerate;
        cell.n = g.node_count();
    }

    std::ostringstream out;
    out << "# netlotto ratio-sweep csv v1\n";
    out << "graph_id,n,x_budget,y_budget,replicates,u_mean,u_std,gamma,"
           "ratio_mean,ratio_std,flag\n";
    std::size_t idx = 0;
    for (int gi = 0; gi < static_cast<int>(cfg.graphs.size()); ++gi) {
        const int reps = cfg.graphs[gi].randomized() ? cfg.replicates : 1;
        for (int yi = 0; yi < static_cast<int>(cfg.y_grid.size()); ++yi) {
            double u_sum = 0.0, u_sq = 0.0, r_sum = 0.0, r_sq = 0.0;
            bool flagged = false;
            int n = 0;
            for (int rep = 0; rep < reps; ++rep, ++idx) {
                const Cell& cell = cells[idx];
                u_sum += cell.payoff;
                u_sq += cell.payoff * cell.payoff;
                r_sum += cell.ratio;
                r_sq += cell.ratio * cell.ratio;
                flagged = flagged || cell.degenerate;
                n = cell.n;
            }
            const double u_mean = u_sum / reps;
            const double r_mean = r_sum / reps;
            const double u_std =
                reps > 1 ? std::sqrt(std::max(0.0, (u_sq - reps * u_mean * u_mean) /
                                                       (reps - 1.0)))
                         : 0.0;
            const double r_std =
                reps > 1 ? std::sqrt(std::max(0.0, (r_sq - reps * r_mean * r_mean) /
                                                       (reps - 1.0)))
                         : 0.0;
            out << cfg.graphs[gi].id() << ',' << n << ','
                << format_double(cfg.x_budget) << ','
                << format_double(cfg.y_grid[yi]) << ',' << reps << ','
                << format_double(u_mean) << ',' << format_double(u_std) << ','
                << format_double(gamma(cfg.x_budget, cfg.y_grid[yi])) << ','
                << format_double(r_mean) << ',' << format_double(r_std) << ','
                << (flagged ? "degenerate" : "") << '\n';
        }
    }
    return out.str();
}

GreedyReport run_greedy(const GraphSpec& spec, double x_budget, double y_budget,
                        TieRule tie, std::uint64_t seed) {
    const std::uint64_t graph_seed = rng::stream_key(seed, kStreamGraphDraw, 0);
    const Graph g = spec.build(graph_seed);
    const Allocation x = degree_proportional(g, x_budget);
    GreedyReport report;
    report.trace = greedy_response(x, y_budget, g);
    const GreedyTrace& trace = report.trace;

    std::ostringstream out;
    out << "# netlotto greedy csv v1\n";
    out << "# defense: degree-proportional, X = " << format_double(x_budget) << "\n";
    for (std::size_t k = 0; k < trace.secured_nodes.size(); ++k) {
        const int node = trace.secured_nodes[k];
        out << "# pick " << k + 1 << ": node " << node
            << " ratio " << format_double(trace.marginal_ratios[k])
            << " cost " << format_double(x[node]) << "\n";
    }
    if (trace.chose_single_node) {
        out << "# fallback: single node " << trace.single_node
            << " beats the greedy set\n";
    }
    out << "graph_id,n,edges,x_budget,y_budget,tie_rule,covered_edges,"
           "total_edges,payoff,chose_single_node,response_nodes\n";
    const std::vector<int> response_nodes =
        trace.chose_single_node ? std::vector<int>{trace.single_node}
                                : trace.secured_nodes;
    const std::string nodes = join_nodes(response_nodes);
    out << spec.id() << ',' << g.node_count() << ',' << g.edge_count() << ','
        << format_double(x_budget) << ',' << format_double(y_budget) << ','
        << to_string(tie) << ',' << trace.covered_edges << ',' << g.edge_count()
        << ',' << format_double(pure_payoff(x, trace.response, g, tie)) << ','
        << (trace.chose_single_node ? 1 : 0) << ',' << nodes << '\n';
    report.text = out.str();
    return report;
}

std::vector<double> parse_grid(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() == 1) {
        return {parse_double(parts[0], "grid value")};
    }
    if (parts.size() != 3) {
        throw std::invalid_argument("grid must be 'a:b:step' or a single value");
    }
    const double lo = parse_double(parts[0], "grid start");
    const double hi = parse_double(parts[1], "grid end");
    const double step = parse_double(parts[2], "grid step");
    if (!(step > 0.0) || hi < lo) throw std::invalid_argument("bad grid bounds");
    const int count = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> grid;
    grid.reserve(count);
    for (int k = 0; k < count; ++k) grid.push_back(lo + k * step);
    return grid;
}

}  // namespace lotto
