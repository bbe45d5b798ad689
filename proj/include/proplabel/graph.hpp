#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace proplabel {

/// Unordered edge, stored normalized as (min, max).
using Edge = std::pair<int, int>;

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Finite undirected simple graph on vertices 0..n-1.
/// Immutable after construction; construction rejects self-loops,
/// duplicate edges and out-of-range endpoints.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
    /// Index of {u,v} in the sorted edge list, or -1.
    int edge_index(int u, int v) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;           // sorted lexicographically, u < v
    std::vector<std::vector<int>> adj_; // sorted neighbor lists
};

/// Proper two-sided split of the vertex set; every edge crosses sides.
struct Bipartition {
    std::vector<int> side_x;
    std::vector<int> side_y;
};

/// Either a bipartition or an odd-cycle witness.
struct BipartitionResult {
    std::optional<Bipartition> parts;
    std::vector<int> odd_cycle; // closed walk of odd length when not bipartite
    bool ok() const { return parts.has_value(); }
};

using ComponentDecomposition = std::vector<std::vector<int>>;

/// Line format: comments start with 'c' or '#', header "p graph <n> <m>",
/// then m lines "e <u> <v>" with 1-based endpoints. Duplicate edge lines
/// collapse to one edge.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

/// BFS layering. Per component, the side containing the lowest-index
/// vertex is side_x.
BipartitionResult bipartition(const Graph& g);

/// Connected components as sorted vertex sets, ordered by least vertex.
ComponentDecomposition components(const Graph& g);

bool is_connected(const Graph& g);

/// All 3-cliques, each once, lexicographically ordered.
std::vector<std::array<int, 3>> triangles(const Graph& g);

/// Subgraph induced on `verts`; local ids follow ascending global ids.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_global; // local vertex -> global vertex
};
InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> verts);

} // namespace proplabel
