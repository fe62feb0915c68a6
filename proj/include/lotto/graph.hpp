#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lotto {

// Undirected simple graph on nodes 0..n-1. Edges are kept as canonical
// (min,max) pairs in sorted order, which fixes the iteration order used by
// sampling and greedy tie-breaking. At least one edge is required; isolated
// nodes are allowed.
class Graph {
public:
    using Edge = std::pair<int, int>;

    Graph(int node_count, std::vector<Edge> edges);

    int node_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int i) const;
    int degree(int i) const;
    bool has_edge(int i, int j) const;

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
};

struct BipartitePartition {
    std::vector<int> part1;
    std::vector<int> part2;
};

// --- generators ---------------------------------------------------------

Graph star(int n);      // node 0 is the center
Graph ring(int n);      // n-cycle, n >= 3
Graph line(int n);      // n-path
Graph complete(int n);  // K_n

// Each of the C(n,2) pairs appears independently with probability p. Draws
// with zero edges are rejected and redrawn from the next substream of the
// seed; the number of rejected draws is written to *redraws when given.
Graph erdos_renyi(int n, double p, std::uint64_t seed, int* redraws = nullptr);

// --- queries ------------------------------------------------------------

// 2-coloring by breadth-first traversal per component. The lowest-indexed
// node of each component (isolated nodes included) lands in part1.
std::optional<BipartitePartition> bipartite_partition(const Graph& g);

// Node sequence of one odd cycle, empty when the graph is bipartite.
// Consecutive nodes are adjacent and the last connects back to the first.
std::vector<int> odd_cycle(const Graph& g);

// |{ {i,j} in E : i in nodes or j in nodes }|
int edges_covered(const Graph& g, const std::vector<int>& nodes);

// V \ {k}; touches every edge of g.
std::vector<int> vertex_cover_complement(const Graph& g, int k);

// --- edge-list text format ----------------------------------------------
//
// One "i j" pair per line, '#' starts a comment, optional first line
// "n <count>" pins the node count (otherwise max index + 1). Files whose
// endpoints are not all integers are read as named nodes, mapped to indices
// in first-appearance order.

Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace lotto
