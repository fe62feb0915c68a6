#include "lotto/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "lotto/rng.hpp"

namespace lotto {

namespace {
constexpr std::uint64_t kErdosRenyiStream = 0x4752;
constexpr int kMaxErdosRenyiAttempts = 10000;

void check_node(const Graph& g, int i, const char* what) {
    if (i < 0 || i >= g.node_count()) {
        throw std::invalid_argument(std::string(what) + " out of range: " +
                                    std::to_string(i));
    }
}
}  // namespace

Graph::Graph(int node_count, std::vector<Edge> edges) : n_(node_count) {
    if (n_ < 2) throw std::invalid_argument("graph needs at least 2 nodes");
    for (auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n_ || b >= n_) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (a == b) throw std::invalid_argument("self-loops are not allowed");
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    if (edges.empty()) throw std::invalid_argument("graph needs at least one edge");
    edges_ = std::move(edges);
    adjacency_.resize(n_);
    for (auto [a, b] : edges_) {
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

const std::vector<int>& Graph::neighbors(int i) const {
    check_node(*this, i, "node");
    return adjacency_[i];
}

int Graph::degree(int i) const {
    check_node(*this, i, "node");
    return static_cast<int>(adjacency_[i].size());
}

bool Graph::has_edge(int i, int j) const {
    check_node(*this, i, "node");
    check_node(*this, j, "node");
    const auto& nb = adjacency_[i];
    return std::binary_search(nb.begin(), nb.end(), j);
}

Graph star(int n) {
    if (n < 2) throw std::invalid_argument("star needs n >= 2");
    std::vector<Graph::Edge> edges;
    edges.reserve(n - 1);
    for (int i = 1; i < n; ++i) edges.push_back({0, i});
    return Graph(n, std::move(edges));
}

Graph ring(int n) {
    if (n < 3) throw std::invalid_argument("ring needs n >= 3");
    std::vector<Graph::Edge> edges;
    edges.reserve(n);
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Graph(n, std::move(edges));
}

Graph line(int n) {
    if (n < 2) throw std::invalid_argument("line needs n >= 2");
    std::vector<Graph::Edge> edges;
    edges.reserve(n - 1);
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

Graph complete(int n) {
    if (n < 2) throw std::invalid_argument("complete graph needs n >= 2");
    std::vector<Graph::Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

Graph erdos_renyi(int n, double p, std::uint64_t seed, int* redraws) {
    if (n < 2) throw std::invalid_argument("erdos_renyi needs n >= 2");
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("edge probability must lie in [0, 1]");
    }
    for (int attempt = 0; attempt < kMaxErdosRenyiAttempts; ++attempt) {
        rng::Engine eng = rng::make_engine(seed, kErdosRenyiStream, attempt);
        std::vector<Graph::Edge> edges;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (rng::uniform01(eng) < p) edges.push_back({i, j});
            }
        }
        if (!edges.empty()) {
            if (redraws) *redraws = attempt;
            return Graph(n, std::move(edges));
        }
    }
    throw std::runtime_error("erdos_renyi: no non-empty graph after " +
                             std::to_string(kMaxErdosRenyiAttempts) + " draws");
}

std::optional<BipartitePartition> bipartite_partition(const Graph& g) {
    const int n = g.node_count();
    std::vector<int> color(n, -1);
    std::vector<int> queue;
    for (int root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        queue.assign(1, root);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int u = queue[qi];
            for (int v : g.neighbors(u)) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    BipartitePartition part;
    for (int i = 0; i < n; ++i) {
        (color[i] == 0 ? part.part1 : part.part2).push_back(i);
    }
    return part;
}

std::vector<int> odd_cycle(const Graph& g) {
    const int n = g.node_count();
    std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
    std::vector<int> queue;
    for (int root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        queue.assign(1, root);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int u = queue[qi];
            for (int v : g.neighbors(u)) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    // Close the cycle through the lowest common ancestor.
                    std::vector<int> up_u{u}, up_v{v};
                    int a = u, b = v;
                    while (depth[a] > depth[b]) up_u.push_back(a = parent[a]);
                    while (depth[b] > depth[a]) up_v.push_back(b = parent[b]);
                    while (a != b) {
                        up_u.push_back(a = parent[a]);
                        up_v.push_back(b = parent[b]);
                    }
                    std::vector<int> cycle(up_u.begin(), up_u.end());
                    for (auto it = up_v.rbegin() + 1; it != up_v.rend(); ++it) {
                        cycle.push_back(*it);
                    }
                    return cycle;
                }
            }
        }
    }
    return {};
}

int edges_covered(const Graph& g, const std::vector<int>& nodes) {
    std::vector<char> in(g.node_count(), 0);
    for (int v : nodes) {
        check_node(g, v, "covered node");
        in[v] = 1;
    }
    int count = 0;
    for (auto [a, b] : g.edges()) count += (in[a] || in[b]) ? 1 : 0;
    return count;
}

std::vector<int> vertex_cover_complement(const Graph& g, int k) {
    check_node(g, k, "excluded node");
    std::vector<int> nodes;
    nodes.reserve(g.node_count() - 1);
    for (int i = 0; i < g.node_count(); ++i)
        if (i != k) nodes.push_back(i);
    return nodes;
}

namespace {

bool is_unsigned_int(const std::string& tok) {
    if (tok.empty()) return false;
    return std::all_of(tok.begin(), tok.end(),
                       [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> raw;
    long long header_n = -1;
    bool first_data_line = true;
    std::string linebuf;
    while (std::getline(in, linebuf)) {
        const auto hash = linebuf.find('#');
        if (hash != std::string::npos) linebuf.erase(hash);
        std::istringstream ls(linebuf);
        std::string a, b, extra;
        if (!(ls >> a)) continue;  // blank line
        if (first_data_line && a == "n") {
            if (ls >> b && is_unsigned_int(b) && !(ls >> extra)) {
                header_n = std::stoll(b);
                first_data_line = false;
                continue;
            }
        }
        first_data_line = false;
        if (!(ls >> b) || (ls >> extra)) {
            throw std::runtime_error("edge list: expected two endpoints per line, got '" +
                                     linebuf + "'");
        }
        raw.emplace_back(a, b);
    }
    if (raw.empty()) throw std::runtime_error("edge list: no edges found");

    const bool numeric = std::all_of(raw.begin(), raw.end(), [](const auto& e) {
        return is_unsigned_int(e.first) && is_unsigned_int(e.second);
    });

    std::vector<Graph::Edge> edges;
    long long n = 0;
    if (numeric) {
        for (const auto& [a, b] : raw) {
            const long long ia = std::stoll(a), ib = std::stoll(b);
            n = std::max({n, ia + 1, ib + 1});
            edges.push_back({static_cast<int>(ia), static_cast<int>(ib)});
        }
        if (header_n >= 0) {
            if (header_n < n) {
                throw std::runtime_error("edge list: header node count smaller than max index + 1");
            }
            n = header_n;
        }
    } else {
        // Named nodes: indices by first appearance.
        std::unordered_map<std::string, int> ids;
        auto id_of = [&ids](const std::string& name) {
            auto [it, inserted] = ids.try_emplace(name, static_cast<int>(ids.size()));
            (void)inserted;
            return it->second;
        };
        for (const auto& [a, b] : raw) edges.push_back({id_of(a), id_of(b)});
        n = static_cast<long long>(ids.size());
        if (header_n > n) n = header_n;
    }
    return Graph(static_cast<int>(std::max(n, 2LL)), std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list file: " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "n " << g.node_count() << "\n";
    for (auto [a, b] : g.edges()) out << a << " " << b << "\n";
}

}  // namespace lotto
