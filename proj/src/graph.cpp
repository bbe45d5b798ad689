#include "proplabel/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace proplabel {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("graph: endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("graph: duplicate edge");
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v}) return -1;
    return static_cast<int>(it - edges_.begin());
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& line, const std::string& why) {
    throw ParseError("line " + std::to_string(line_no) + " ('" + line + "'): " + why);
}

} // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_header = false;
    int n = 0, declared_m = 0, seen_m = 0;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue; // blank
        if (tag == "c" || tag[0] == '#') continue;
        if (tag == "p") {
            if (have_header) parse_fail(line_no, line, "duplicate header");
            std::string kind;
            if (!(ls >> kind >> n >> declared_m) || kind != "graph")
                parse_fail(line_no, line, "expected 'p graph <n> <m>'");
            if (n < 0 || declared_m < 0) parse_fail(line_no, line, "negative count");
            have_header = true;
            continue;
        }
        if (tag == "e") {
            if (!have_header) parse_fail(line_no, line, "edge before header");
            int u, v;
            if (!(ls >> u >> v)) parse_fail(line_no, line, "expected 'e <u> <v>'");
            std::string rest;
            if (ls >> rest) parse_fail(line_no, line, "trailing tokens");
            if (u < 1 || v < 1 || u > n || v > n)
                parse_fail(line_no, line, "endpoint out of range 1.." + std::to_string(n));
            if (u == v) parse_fail(line_no, line, "self-loop");
            ++seen_m;
            edges.emplace_back(u - 1, v - 1);
            continue;
        }
        parse_fail(line_no, line, "unknown line type '" + tag + "'");
    }
    if (!have_header) throw ParseError("missing 'p graph' header");
    if (seen_m != declared_m)
        throw ParseError("declared " + std::to_string(declared_m) + " edges, found " +
                         std::to_string(seen_m));
    // duplicate lines collapse to one edge
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(n, std::move(edges));
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "p graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

BipartitionResult bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1), parent(n, -1);
    BipartitionResult res;
    Bipartition parts;
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int u : g.neighbors(v)) {
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    parent[u] = v;
                    queue.push_back(u);
                } else if (color[u] == color[v]) {
                    // odd cycle: climb both BFS paths to their meeting point
                    std::vector<int> pv, pu;
                    for (int x = v; x != -1; x = parent[x]) pv.push_back(x);
                    for (int x = u; x != -1; x = parent[x]) pu.push_back(x);
                    while (pv.size() >= 2 && pu.size() >= 2 &&
                           pv[pv.size() - 2] == pu[pu.size() - 2]) {
                        pv.pop_back();
                        pu.pop_back();
                    }
                    res.odd_cycle.assign(pv.begin(), pv.end());
                    for (auto it = pu.rbegin() + 1; it != pu.rend(); ++it)
                        res.odd_cycle.push_back(*it);
                    return res;
                }
            }
        }
    }
    for (int v = 0; v < n; ++v)
        (color[v] == 0 ? parts.side_x : parts.side_y).push_back(v);
    res.parts = std::move(parts);
    return res;
}

ComponentDecomposition components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    ComponentDecomposition comps;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u : g.neighbors(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

std::vector<std::array<int, 3>> triangles(const Graph& g) {
    std::vector<std::array<int, 3>> out;
    for (const auto& [u, v] : g.edges()) {
        // u < v; look for w > v adjacent to both
        const auto& nu = g.neighbors(u);
        for (auto it = std::upper_bound(nu.begin(), nu.end(), v); it != nu.end(); ++it)
            if (g.has_edge(v, *it)) out.push_back({u, v, *it});
    }
    std::sort(out.begin(), out.end());
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<int> local(g.vertex_count(), -1);
    for (size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (local[u] != -1 && local[v] != -1) edges.emplace_back(local[u], local[v]);
    return {Graph(static_cast<int>(verts.size()), std::move(edges)), std::move(verts)};
}

} // namespace proplabel
