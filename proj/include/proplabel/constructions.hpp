#pragma once

#include <optional>
#include <vector>

#include "proplabel/graph.hpp"
#include "proplabel/labeling.hpp"
#include "proplabel/solvers.hpp"

namespace proplabel {

/// Growing table of primes, 1-indexed (nth_prime(1) == 2).
class PrimeTable {
public:
    long long nth_prime(int i);

private:
    std::vector<long long> primes_;
};

/// Shared table convenience.
long long nth_prime(int i);

/// Deterministic greedy proper coloring, colors 1..t, vertices in
/// ascending order.
std::vector<int> greedy_coloring(const Graph& g);

/// Vertex gap labeling of a tree from {1,2}: label 1 exactly at distance
/// = 0 (mod 4) from the root.
Labeling tree_gap_labeling(const Graph& g, int root);

/// Edge gap labeling of K_n (n >= 3) with labels within {1..n+1}, built
/// by the recursive scheme starting from f(v1v2)=4, f(v1v3)=1, f(v2v3)=2.
Labeling complete_gap_labeling(int n);

/// Returns K_n itself, vertices 0..n-1.
Graph complete_graph(int n);

/// Vertex gap labeling of a bipartite graph: X gets 1, Y gets distinct
/// even numbers 2,4,6,... in vertex order.
Labeling bipartite_vertex_gap(const Graph& g, const Bipartition& bp);

/// Edge gap labeling by distinct powers of two in lexicographic edge
/// order. On a degree-one collision the labels incident to degree-one
/// vertices are permuted, and as a final resort every second power is
/// used (still distinct powers of two, never colliding). Rejects graphs
/// with a K2 component.
Labeling powers_of_two_edge_gap(const Graph& g);

/// Vertex product labeling from a proper coloring with colors 1..t:
/// color 1 maps to label 1, color i>1 to the (i-1)-th prime.
Labeling prime_product_labeling(const Graph& g, const std::vector<int>& coloring);

/// Vertex maximum labeling of a bipartite graph: X gets 1, Y gets 2.
Labeling bipartite_vertex_maximum(const Graph& g, const Bipartition& bp);

/// Vertex gap labeling of an r-regular bipartite graph, r >= 4, via a
/// proper 2-coloring of the dual hypergraph (X as vertices, Y as edges).
Labeling regular_bipartite_vertex_gap(const Graph& g, const SearchBudget& budget = {});

/// Five consecutive index blocks of (almost) equal size labeled
/// 2,3,5,7,11. May fail on a fixed graph; the violation, if any, is
/// reported alongside the labeling.
struct GnpLabelingResult {
    Labeling labeling;
    std::optional<Violation> violation;
};
GnpLabelingResult gnp_prime_labeling(const Graph& g);

} // namespace proplabel
