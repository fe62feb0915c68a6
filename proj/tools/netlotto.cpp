// netlotto: simulate Network General Lotto games, check the closed-form
// equilibrium values and bounds, and run deterministic-strategy sweeps.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include <CLI11.hpp>

#include "lotto/experiment.hpp"
#include "lotto/payoff.hpp"
#include "lotto/strategy.hpp"

namespace {

using lotto::TieRule;

TieRule parse_tie(const std::string& text) {
    if (text == "defender") return TieRule::defender_wins_ties;
    if (text == "attacker") return TieRule::attacker_wins_ties;
    throw CLI::ValidationError("--tie", "must be 'defender' or 'attacker'");
}

lotto::Allocation parse_allocation(const std::string& text) {
    lotto::Allocation out;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) out.push_back(std::stod(token));
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

void set_workers(int workers) {
    if (workers > 0) omp_set_num_threads(workers);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Network General Lotto simulation engine"};
    app.set_config("--config", "", "Read options from an INI file; flags win");
    app.require_subcommand(1);

    // gamma ---------------------------------------------------------------
    auto* cmd_gamma = app.add_subcommand("gamma", "Print the closed-form values");
    double gx = 0.0, gy = 0.0;
    std::optional<int> gn;
    cmd_gamma->add_option("--x", gx, "Defender budget X")->required();
    cmd_gamma->add_option("--y", gy, "Attacker budget Y")->required();
    cmd_gamma->add_option("--n", gn, "Also print the n-node upper bound");
    cmd_gamma->callback([&] {
        const double value = lotto::gamma(gx, gy);
        std::cout << "gamma(" << lotto::format_double(gx) << ", "
                  << lotto::format_double(gy) << ") = " << lotto::format_double(value)
                  << "\n";
        if (gn) {
            const double bound = lotto::gamma_n(*gn, gx, gy);
            std::cout << "gamma_" << *gn << "(" << lotto::format_double(gx) << ", "
                      << lotto::format_double(gy)
                      << ") = " << lotto::format_double(bound)
                      << "  gap = " << lotto::format_double(bound - value) << "\n";
        }
    });

    // simulate --------------------------------------------------------------
    auto* cmd_sim = app.add_subcommand(
        "simulate", "Monte Carlo payoff of a strategy pair on one graph");
    std::string sim_graph, sim_sx = "defender-eq", sim_sy = "attacker-eq";
    std::string sim_tie = "defender", sim_out, sim_dump, sim_xalloc, sim_yalloc;
    lotto::SimulateConfig sim_cfg;
    int sim_workers = 0;
    cmd_sim->add_option("--graph", sim_graph,
                        "star:N | ring:N | line:N | complete:N | er:N:P | file:PATH")
        ->required();
    cmd_sim->add_option("--x", sim_cfg.x_budget, "Defender budget X")->required();
    cmd_sim->add_option("--y", sim_cfg.y_budget, "Attacker budget Y")->required();
    cmd_sim->add_option("--strategy-x", sim_sx, "defender-eq | pure");
    cmd_sim->add_option("--strategy-y", sim_sy, "attacker-eq | upper-bound | pure");
    cmd_sim->add_option("--x-alloc", sim_xalloc, "Pure defender allocation v0,v1,...");
    cmd_sim->add_option("--y-alloc", sim_yalloc, "Pure attacker allocation v0,v1,...");
    cmd_sim->add_option("--samples", sim_cfg.samples, "Monte Carlo replicates");
    cmd_sim->add_option("--seed", sim_cfg.seed, "Master seed");
    cmd_sim->add_option("--replicates", sim_cfg.replicates,
                        "Fresh graph draws (er graphs)");
    cmd_sim->add_option("--tie", sim_tie, "defender | attacker");
    cmd_sim->add_option("--out", sim_out, "Write CSV here instead of stdout");
    cmd_sim->add_option("--dump-strategies", sim_dump,
                        "Write constructed strategies as JSON files with this prefix");
    cmd_sim->add_option("--workers", sim_workers, "OpenMP thread count");
    cmd_sim->callback([&] {
        set_workers(sim_workers);
        sim_cfg.graph = lotto::GraphSpec::parse(sim_graph);
        sim_cfg.strategy_x = lotto::parse_strategy_choice(sim_sx);
        sim_cfg.strategy_y = lotto::parse_strategy_choice(sim_sy);
        sim_cfg.tie = parse_tie(sim_tie);
        if (!sim_xalloc.empty()) sim_cfg.pure_x = parse_allocation(sim_xalloc);
        if (!sim_yalloc.empty()) sim_cfg.pure_y = parse_allocation(sim_yalloc);
        sim_cfg.dump_strategies = !sim_dump.empty();
        const auto result = lotto::run_simulate(sim_cfg);
        emit(result.csv, sim_out);
        for (const auto& [label, json] : result.strategy_dumps) {
            std::ofstream out(sim_dump + "." + label + ".json", std::ios::binary);
            if (!out) throw std::runtime_error("cannot write strategy dump");
            out << json << "\n";
        }
    });

    // ratio-sweep -----------------------------------------------------------
    auto* cmd_sweep = app.add_subcommand(
        "ratio-sweep", "Deterministic-to-randomized payoff ratio over a Y grid");
    std::vector<std::string> sweep_graphs;
    std::string sweep_grid = "0.2:4.0:0.2", sweep_tie, sweep_out;
    lotto::RatioSweepConfig sweep_cfg;
    int sweep_workers = 0;
    cmd_sweep->add_option("--graph", sweep_graphs, "Graph spec (repeatable)")
        ->required();
    cmd_sweep->add_option("--x", sweep_cfg.x_budget, "Defender budget X");
    cmd_sweep->add_option("--y-grid", sweep_grid, "Attacker budgets a:b:step");
    cmd_sweep->add_option("--replicates", sweep_cfg.replicates,
                          "Graph samples per cell (er graphs)");
    cmd_sweep->add_option("--seed", sweep_cfg.seed, "Master seed");
    cmd_sweep->add_option("--tie", sweep_tie, "defender | attacker")->required();
    cmd_sweep->add_option("--out", sweep_out, "Write CSV here instead of stdout");
    cmd_sweep->add_option("--workers", sweep_workers, "OpenMP thread count");
    cmd_sweep->callback([&] {
        set_workers(sweep_workers);
        for (const auto& text : sweep_graphs) {
            sweep_cfg.graphs.push_back(lotto::GraphSpec::parse(text));
        }
        sweep_cfg.y_grid = lotto::parse_grid(sweep_grid);
        sweep_cfg.tie = parse_tie(sweep_tie);
        emit(lotto::run_ratio_sweep(sweep_cfg), sweep_out);
    });

    // greedy ----------------------------------------------------------------
    auto* cmd_greedy = app.add_subcommand(
        "greedy", "Greedy response to the degree-proportional defense");
    std::string greedy_graph, greedy_tie, greedy_out;
    double greedy_x = 0.0, greedy_y = 0.0;
    std::uint64_t greedy_seed = 1;
    cmd_greedy->add_option("--graph", greedy_graph, "Graph spec")->required();
    cmd_greedy->add_option("--x", greedy_x, "Defender budget X")->required();
    cmd_greedy->add_option("--y", greedy_y, "Attacker budget Y")->required();
    cmd_greedy->add_option("--tie", greedy_tie, "defender | attacker")->required();
    cmd_greedy->add_option("--seed", greedy_seed, "Master seed (er graphs)");
    cmd_greedy->add_option("--out", greedy_out, "Write CSV here instead of stdout");
    cmd_greedy->callback([&] {
        const auto report =
            lotto::run_greedy(lotto::GraphSpec::parse(greedy_graph), greedy_x,
                              greedy_y, parse_tie(greedy_tie), greedy_seed);
        emit(report.text, greedy_out);
    });

    // bipartite-check --------------------------------------------------------
    auto* cmd_bip = app.add_subcommand("bipartite-check",
                                       "Print a bipartition or an odd cycle");
    std::string bip_graph;
    std::uint64_t bip_seed = 1;
    cmd_bip->add_option("--graph", bip_graph, "Graph spec")->required();
    cmd_bip->add_option("--seed", bip_seed, "Master seed (er graphs)");
    cmd_bip->callback([&] {
        const lotto::Graph g = lotto::GraphSpec::parse(bip_graph).build(bip_seed);
        const auto part = lotto::bipartite_partition(g);
        if (part) {
            std::cout << "bipartite: yes\npart1:";
            for (int v : part->part1) std::cout << ' ' << v;
            std::cout << "\npart2:";
            for (int v : part->part2) std::cout << ' ' << v;
            std::cout << "\n";
        } else {
            std::cout << "bipartite: no\nodd cycle:";
            for (int v : lotto::odd_cycle(g)) std::cout << ' ' << v;
            std::cout << "\n";
            std::exit(1);
        }
    });

    // gen-graph ---------------------------------------------------------------
    auto* cmd_gen = app.add_subcommand("gen-graph", "Write a graph as an edge list");
    std::string gen_graph, gen_out;
    std::uint64_t gen_seed = 1;
    cmd_gen->add_option("--graph", gen_graph, "Graph spec")->required();
    cmd_gen->add_option("--seed", gen_seed, "Master seed (er graphs)");
    cmd_gen->add_option("--out", gen_out, "Write here instead of stdout");
    cmd_gen->callback([&] {
        const auto spec = lotto::GraphSpec::parse(gen_graph);
        int redraws = 0;
        const lotto::Graph g = spec.build(gen_seed, &redraws);
        std::ostringstream out;
        out << "# " << spec.id() << " seed=" << gen_seed << " redraws=" << redraws
            << "\n";
        lotto::write_edge_list(out, g);
        emit(out.str(), gen_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
