#include "proplabel/constructions.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace proplabel {

long long PrimeTable::nth_prime(int i) {
    if (i < 1) throw std::invalid_argument("nth_prime: index is 1-based");
    long long candidate = primes_.empty() ? 1 : primes_.back();
    while (static_cast<int>(primes_.size()) < i) {
        ++candidate;
        bool prime = candidate >= 2;
        for (long long p : primes_) {
            if (p * p > candidate) break;
            if (candidate % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime) primes_.push_back(candidate);
    }
    return primes_[i - 1];
}

long long nth_prime(int i) {
    static PrimeTable table;
    return table.nth_prime(i);
}

std::vector<int> greedy_coloring(const Graph& g) {
    std::vector<int> color(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<char> used(g.degree(v) + 2, 0);
        for (int u : g.neighbors(v))
            if (u < v && color[u] < static_cast<int>(used.size())) used[color[u]] = 1;
        int c = 1;
        while (used[c]) ++c;
        color[v] = c;
    }
    return color;
}

namespace {

void must_verify(const Graph& g, Rule rule, const Labeling& f, const char* who) {
    if (auto bad = verify_proper(g, rule, f))
        throw std::logic_error(std::string(who) + ": construction failed verification on edge {" +
                               std::to_string(bad->edge.first + 1) + "," +
                               std::to_string(bad->edge.second + 1) + "}");
}

} // namespace

Labeling tree_gap_labeling(const Graph& g, int root) {
    const int n = g.vertex_count();
    if (root < 0 || root >= n) throw std::invalid_argument("tree_gap_labeling: root out of range");
    if (!is_connected(g) || g.edge_count() != n - 1)
        throw std::invalid_argument("tree_gap_labeling: graph is not a tree");
    std::vector<int> dist(n, -1);
    std::deque<int> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u : g.neighbors(v))
            if (dist[u] == -1) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
    }
    Labeling f;
    f.kind = LabelKind::Vertex;
    for (int v = 0; v < n; ++v) f.values.push_back(dist[v] % 4 == 0 ? 1 : 2);
    must_verify(g, Rule::VertexGap, f, "tree_gap_labeling");
    return f;
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Labeling complete_gap_labeling(int n) {
    if (n < 3) throw std::invalid_argument("complete_gap_labeling: n must be >= 3");
    // f over pairs (i,j), 1-based vertices, grown one vertex at a time
    std::vector<std::vector<long long>> f(n + 1, std::vector<long long>(n + 1, 0));
    f[1][2] = 4;
    f[1][3] = 1;
    f[2][3] = 2;
    for (int t = 4; t <= n; ++t) {
        for (int i = 1; i < t; ++i)
            for (int j = i + 1; j < t; ++j) f[i][j] += 1;
        for (int i = 1; i < t; ++i) f[i][t] = (i != 2) ? 1 : 2;
    }
    Graph g = complete_graph(n);
    Labeling lab;
    lab.kind = LabelKind::Edge;
    for (const auto& [u, v] : g.edges()) lab.values.push_back(f[u + 1][v + 1]);
    must_verify(g, Rule::EdgeGap, lab, "complete_gap_labeling");
    return lab;
}

Labeling bipartite_vertex_gap(const Graph& g, const Bipartition& bp) {
    Labeling f;
    f.kind = LabelKind::Vertex;
    f.values.assign(g.vertex_count(), 1);
    long long even = 2;
    for (int v : bp.side_y) {
        f.values[v] = even;
        even += 2;
    }
    must_verify(g, Rule::VertexGap, f, "bipartite_vertex_gap");
    return f;
}

namespace {

Labeling powers_labeling(const std::vector<int>& exponents) {
    Labeling f;
    f.kind = LabelKind::Edge;
    for (int e : exponents) {
        if (e > 62) throw std::invalid_argument("powers_of_two_edge_gap: graph too large for 64-bit powers");
        f.values.push_back(1LL << e);
    }
    return f;
}

} // namespace

Labeling powers_of_two_edge_gap(const Graph& g) {
    for (const auto& comp : components(g))
        if (comp.size() == 2)
            throw std::invalid_argument(
                "powers_of_two_edge_gap: no connected component may be a single edge");

    const int m = g.edge_count();
    std::vector<int> exponents(m);
    std::iota(exponents.begin(), exponents.end(), 0);
    Labeling f = powers_labeling(exponents);
    if (!verify_proper(g, Rule::EdgeGap, f)) return f;

    // collisions can only involve degree-one vertices: permute the powers
    // sitting on their edges
    std::vector<int> pendant_edges;
    for (int i = 0; i < m; ++i) {
        auto [u, v] = g.edges()[i];
        if (g.degree(u) == 1 || g.degree(v) == 1) pendant_edges.push_back(i);
    }
    if (pendant_edges.size() <= 7) {
        std::vector<int> perm(pendant_edges.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<int> base;
        for (int i : pendant_edges) base.push_back(exponents[i]);
        while (std::next_permutation(perm.begin(), perm.end())) {
            for (size_t i = 0; i < perm.size(); ++i) exponents[pendant_edges[i]] = base[perm[i]];
            f = powers_labeling(exponents);
            if (!verify_proper(g, Rule::EdgeGap, f)) return f;
        }
    }

    // every second power: max - min of two even powers is never itself a
    // power of two, so no degree-one color can be matched
    for (int i = 0; i < m; ++i) exponents[i] = 2 * i;
    f = powers_labeling(exponents);
    must_verify(g, Rule::EdgeGap, f, "powers_of_two_edge_gap");
    return f;
}

Labeling prime_product_labeling(const Graph& g, const std::vector<int>& coloring) {
    if (static_cast<int>(coloring.size()) != g.vertex_count())
        throw std::invalid_argument("prime_product_labeling: coloring size mismatch");
    for (int c : coloring)
        if (c < 1) throw std::invalid_argument("prime_product_labeling: colors are 1-based");
    for (const auto& [u, v] : g.edges())
        if (coloring[u] == coloring[v])
            throw std::invalid_argument("prime_product_labeling: coloring is not proper");
    Labeling f;
    f.kind = LabelKind::Vertex;
    for (int c : coloring) f.values.push_back(c == 1 ? 1 : nth_prime(c - 1));
    must_verify(g, Rule::VertexProduct, f, "prime_product_labeling");
    return f;
}

Labeling bipartite_vertex_maximum(const Graph& g, const Bipartition& bp) {
    Labeling f;
    f.kind = LabelKind::Vertex;
    f.values.assign(g.vertex_count(), 1);
    for (int v : bp.side_y) f.values[v] = 2;
    must_verify(g, Rule::VertexMaximum, f, "bipartite_vertex_maximum");
    return f;
}

Labeling regular_bipartite_vertex_gap(const Graph& g, const SearchBudget& budget) {
    auto bip = bipartition(g);
    if (!bip.ok())
        throw std::invalid_argument("regular_bipartite_vertex_gap: graph is not bipartite");
    int r = g.vertex_count() ? g.degree(0) : 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != r)
            throw std::invalid_argument("regular_bipartite_vertex_gap: graph is not regular");
    if (r == 3)
        throw std::invalid_argument(
            "regular_bipartite_vertex_gap: r=3 is unsupported (complexity open); r >= 4 required");
    if (r < 4)
        throw std::invalid_argument("regular_bipartite_vertex_gap: requires r >= 4");

    // dual hypergraph 2-coloring: one NAE clause per Y vertex over its X
    // neighborhood; a proper 2-coloring always exists for r >= 4
    const auto& side_x = bip.parts->side_x;
    const auto& side_y = bip.parts->side_y;
    Formula phi;
    phi.mode = FormulaMode::Nae;
    phi.var_count = static_cast<int>(side_x.size());
    std::vector<int> var_of(g.vertex_count(), 0);
    for (size_t i = 0; i < side_x.size(); ++i) var_of[side_x[i]] = static_cast<int>(i) + 1;
    for (int u : side_y) {
        std::vector<int> clause;
        for (int v : g.neighbors(u)) clause.push_back(var_of[v]);
        phi.clauses.push_back(std::move(clause));
    }
    auto gamma = solve_nae(phi, budget);
    if (!gamma)
        throw std::logic_error("regular_bipartite_vertex_gap: no 2-coloring found (unexpected)");

    Labeling f;
    f.kind = LabelKind::Vertex;
    f.values.assign(g.vertex_count(), 2);
    for (size_t i = 0; i < side_x.size(); ++i) f.values[side_x[i]] = (*gamma)[i] ? 2 : 1;
    must_verify(g, Rule::VertexGap, f, "regular_bipartite_vertex_gap");
    return f;
}

GnpLabelingResult gnp_prime_labeling(const Graph& g) {
    const int n = g.vertex_count();
    static const long long block_label[5] = {2, 3, 5, 7, 11};
    Labeling f;
    f.kind = LabelKind::Vertex;
    f.values.resize(n);
    int q = n / 5, r = n % 5, v = 0;
    for (int b = 0; b < 5; ++b) {
        int size = q + (b < r ? 1 : 0);
        for (int i = 0; i < size; ++i) f.values[v++] = block_label[b];
    }
    GnpLabelingResult res{f, verify_proper(g, Rule::VertexProduct, f)};
    return res;
}

} // namespace proplabel
