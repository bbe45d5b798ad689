#pragma once

// Shared test fixtures: small graph families, seeded random generators and
// the independent oracles the solver tests compare against.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "proplabel/formula.hpp"
#include "proplabel/graph.hpp"

namespace testhelp {

using proplabel::Edge;
using proplabel::Formula;
using proplabel::Graph;

inline Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

inline Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

inline Graph complete(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
    return Graph(a + b, e);
}

inline Graph star(int leaves) {
    std::vector<Edge> e;
    for (int v = 1; v <= leaves; ++v) e.emplace_back(0, v);
    return Graph(leaves + 1, e);
}

/// K_{2,2,2}: 4-regular, chromatic number 3. Antipodal pairs (v, v+3)
/// are the non-edges.
inline Graph octahedron() {
    std::vector<Edge> e;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (v != u + 3) e.emplace_back(u, v);
    return Graph(6, e);
}

inline Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);     // outer cycle
        e.emplace_back(i, i + 5);           // spokes
        e.emplace_back(i + 5, (i + 2) % 5 + 5); // pentagram
    }
    return Graph(10, e);
}

inline Graph prism() { // C3 x K2, 3-regular
    return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) e.emplace_back(u, v);
    return Graph(n, e);
}

inline Graph random_connected(int n, double p, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Graph g = random_graph(n, p, rng);
        if (proplabel::is_connected(g)) return g;
    }
    return complete(n);
}

inline Graph random_tree(int n, std::mt19937_64& rng) {
    std::vector<Edge> e;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        e.emplace_back(pick(rng), v);
    }
    return Graph(n, e);
}

inline Graph random_bipartite(int nx, int ny, double p, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<Edge> e;
    for (int u = 0; u < nx; ++u)
        for (int v = 0; v < ny; ++v)
            if (coin(rng) < p) e.emplace_back(u, nx + v);
    return Graph(nx + ny, e);
}

inline Graph random_connected_bipartite(int n, double p, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 20000; ++attempt) {
        std::uniform_int_distribution<int> split(1, n - 1);
        int nx = split(rng);
        Graph g = random_bipartite(nx, n - nx, p, rng);
        if (proplabel::is_connected(g)) return g;
    }
    return complete_bipartite(1, n - 1);
}

/// Connected bipartite with minimum degree two (n >= 4): deficient
/// vertices get extra cross edges.
inline Graph random_bipartite_min_deg2(int n, double p, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 20000; ++attempt) {
        std::uniform_int_distribution<int> split(2, n - 2);
        int nx = split(rng);
        Graph g = random_bipartite(nx, n - nx, p, rng);
        std::set<Edge> edges(g.edges().begin(), g.edges().end());
        std::vector<int> deg(n, 0);
        for (const auto& [a, b] : edges) ++deg[a], ++deg[b];
        for (int v = 0; v < n; ++v) {
            int lo = v < nx ? nx : 0;
            int hi = v < nx ? n : nx;
            std::uniform_int_distribution<int> other(lo, hi - 1);
            for (int guard = 0; deg[v] < 2 && guard < 1000; ++guard) {
                int u = other(rng);
                if (edges.insert({std::min(u, v), std::max(u, v)}).second) ++deg[v], ++deg[u];
            }
        }
        Graph fixed(n, {edges.begin(), edges.end()});
        if (proplabel::is_connected(fixed)) return fixed;
    }
    return complete_bipartite(2, n - 2);
}

/// Truth-table satisfaction of one clause under the formula's mode.
inline bool clause_ok(const Formula& phi, const std::vector<int>& clause, unsigned mask) {
    int trues = 0, falses = 0;
    for (int lit : clause) {
        bool val = (mask >> (std::abs(lit) - 1)) & 1u;
        if (lit < 0) val = !val;
        (val ? trues : falses)++;
    }
    switch (phi.mode) {
    case proplabel::FormulaMode::Sat:
    case proplabel::FormulaMode::TwoSat:
        return trues > 0;
    case proplabel::FormulaMode::Nae:
        return trues > 0 && falses > 0;
    case proplabel::FormulaMode::OneInThree:
        return trues == 1;
    }
    return false;
}

inline bool assignment_satisfies(const Formula& phi, const std::vector<bool>& gamma) {
    unsigned mask = 0;
    for (size_t i = 0; i < gamma.size(); ++i)
        if (gamma[i]) mask |= 1u << i;
    for (const auto& clause : phi.clauses)
        if (!clause_ok(phi, clause, mask)) return false;
    return true;
}

/// Exhaustive satisfiability for <= 20 variables.
inline bool truth_table_satisfiable(const Formula& phi) {
    for (unsigned mask = 0; mask < (1u << phi.var_count); ++mask) {
        bool ok = true;
        for (const auto& clause : phi.clauses)
            if (!clause_ok(phi, clause, mask)) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return phi.clauses.empty() && phi.var_count == 0;
}

/// Exact chromatic number by backtracking; fine for tiny graphs.
inline bool colorable(const Graph& g, int k, std::vector<int>& color, int v) {
    if (v == g.vertex_count()) return true;
    for (int c = 1; c <= k; ++c) {
        bool ok = true;
        for (int u : g.neighbors(v))
            if (u < v && color[u] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        color[v] = c;
        if (colorable(g, k, color, v + 1)) return true;
    }
    color[v] = 0;
    return false;
}

inline int chromatic_number(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    for (int k = 1; k <= g.vertex_count(); ++k) {
        std::vector<int> color(g.vertex_count(), 0);
        if (colorable(g, k, color, 0)) return k;
    }
    return g.vertex_count();
}

inline std::vector<int> some_k_coloring(const Graph& g, int k) {
    std::vector<int> color(g.vertex_count(), 0);
    if (!colorable(g, k, color, 0)) return {};
    return color;
}

} // namespace testhelp
