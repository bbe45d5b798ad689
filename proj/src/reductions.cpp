#include "proplabel/reductions.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace proplabel {

nlohmann::json reduction_sidecar_json(const ReductionOutput& out) {
    nlohmann::json j;
    j["meta"] = out.meta;
    j["meta"]["reduction"] = out.name;
    auto& vm = j["varMap"] = nlohmann::json::object();
    for (const auto& [key, verts] : out.var_map) {
        nlohmann::json arr = nlohmann::json::array();
        for (int v : verts) arr.push_back(v + 1);
        vm[std::to_string(key)] = arr;
    }
    auto& cm = j["clauseMap"] = nlohmann::json::object();
    for (const auto& [key, v] : out.clause_map) cm[std::to_string(key)] = v + 1;
    return j;
}

GadgetCheckResult check_gadget(const GadgetSpec& spec, const SearchBudget& budget) {
    Graph aug = spec.graph;
    std::vector<int> stub_edges;
    if (spec.add_port_stubs && !spec.ports.empty()) {
        std::vector<Edge> edges = spec.graph.edges();
        int base = spec.graph.vertex_count();
        for (size_t i = 0; i < spec.ports.size(); ++i)
            edges.emplace_back(spec.ports[i], base + static_cast<int>(i));
        aug = Graph(base + static_cast<int>(spec.ports.size()), std::move(edges));
        for (size_t i = 0; i < spec.ports.size(); ++i)
            stub_edges.push_back(aug.edge_index(spec.ports[i], base + static_cast<int>(i)));
    }

    EnumerateOptions opts;
    opts.budget = budget;
    opts.unchecked_vertex.assign(aug.vertex_count(), 0);
    for (int v : spec.unchecked_vertices) opts.unchecked_vertex[v] = 1;
    for (int v = spec.graph.vertex_count(); v < aug.vertex_count(); ++v)
        opts.unchecked_vertex[v] = 1; // stub far ends are free boundary

    GadgetCheckResult res;
    std::vector<char> exists_seen(spec.exists.size(), 0);
    long long count = 0;
    enumerate_proper_labelings(
        aug, spec.rule, spec.max_label,
        [&](const Labeling& f) {
            ++count;
            if (spec.forall && !spec.forall(aug, f, stub_edges)) {
                res.counterexample = f;
                return false;
            }
            for (size_t i = 0; i < spec.exists.size(); ++i)
                if (!exists_seen[i] && spec.exists[i](aug, f, stub_edges)) exists_seen[i] = 1;
            return true;
        },
        opts);

    if (res.counterexample) {
        res.detail = spec.description + ": universal property violated";
        return res;
    }
    for (size_t i = 0; i < exists_seen.size(); ++i)
        if (!exists_seen[i]) {
            res.detail = spec.description + ": existence requirement " + std::to_string(i) +
                         " never witnessed (" + std::to_string(count) + " labelings)";
            return res;
        }
    res.pass = true;
    res.detail = spec.description + ": ok over " + std::to_string(count) + " labelings";
    return res;
}

// ---------------------------------------------------------------------------
// default gadgets
// ---------------------------------------------------------------------------

namespace {

// link gadget: a(0) - u1(1) - {u2(2),u3(3)} - u4(4) - b(5), K4 minus the
// u1u4 edge in the middle
const std::vector<Edge> kLinkEdges = {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {4, 5}};

// variable gadget for edge-product: anchor x(0) with two forcing trees.
// Rigid induced colors 2^3 and 2^4 next to x pin the stub sum to 0 or 3.
const std::vector<Edge> kHxEdges = {
    {0, 1},  {1, 2},   {1, 3},   {2, 3},   {1, 4},   {4, 5},   {4, 6},   {5, 6},
    {0, 7},  {7, 8},   {7, 9},   {8, 9},   {7, 10},  {10, 11}, {10, 12}, {11, 12},
    {7, 13}, {13, 14}, {13, 15}, {14, 15}, {13, 16}, {16, 17}, {16, 18}, {17, 18}};
const int kHxVertices = 19;
// exponents (label = 2^e) of the canonical proper labeling
const std::vector<int> kHxExp = {1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0,
                                 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0};

// clause gadget for edge-product: anchor c(0), rigid colors 2^2 and 2^4
// beside c pin the stub sum to 1 or 3.
const std::vector<Edge> kIcEdges = {{0, 1},   {1, 2},   {1, 3},   {2, 3},   {0, 4},
                                    {4, 5},   {4, 6},   {5, 6},   {4, 7},   {7, 8},
                                    {7, 9},   {8, 9},   {4, 10},  {10, 11}, {10, 12},
                                    {11, 12}, {10, 13}, {13, 14}, {13, 15}, {14, 15}};
const int kIcVertices = 16;
const std::vector<int> kIcExp = {1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0};

long long stub_value(const Labeling& f, const std::vector<int>& stubs, size_t i) {
    return f.values[stubs[i]];
}

} // namespace

GadgetSpec default_edge_sum_link_gadget() {
    GadgetSpec spec;
    spec.description = "edge-sum link gadget (K4 minus an edge, tailed)";
    spec.graph = Graph(6, kLinkEdges);
    spec.ports = {0, 5};
    spec.rule = Rule::EdgeSum;
    spec.max_label = 2;
    spec.add_port_stubs = false;   // ports live inside a larger cycle
    spec.unchecked_vertices = {0, 5};
    spec.forall = [](const Graph& g, const Labeling& f, const std::vector<int>&) {
        return f.values[g.edge_index(0, 1)] == f.values[g.edge_index(4, 5)];
    };
    for (long long want : {1LL, 2LL})
        spec.exists.push_back([want](const Graph& g, const Labeling& f, const std::vector<int>&) {
            return f.values[g.edge_index(0, 1)] == want;
        });
    return spec;
}

namespace {

/// Appends a copy of `gadget` between existing vertices a and b; gadget
/// ports map to a and b, internal vertices get fresh ids from `next`.
/// Returns internal vertex ids in ascending local order.
std::vector<int> instantiate_two_port(const Graph& gadget, int pa, int pb, int a, int b,
                                      int& next, std::vector<Edge>& edges) {
    std::vector<int> map(gadget.vertex_count(), -1);
    map[pa] = a;
    map[pb] = b;
    std::vector<int> internals;
    for (int v = 0; v < gadget.vertex_count(); ++v)
        if (map[v] == -1) {
            map[v] = next++;
            internals.push_back(map[v]);
        }
    for (const auto& [u, v] : gadget.edges()) edges.emplace_back(map[u], map[v]);
    return internals;
}

} // namespace

GadgetSpec edge_sum_variable_cycle_spec(int cycle_len) {
    if (cycle_len < 2) throw std::invalid_argument("edge_sum_variable_cycle_spec: need length >= 2");
    GadgetSpec link = default_edge_sum_link_gadget();
    std::vector<Edge> edges;
    int next = cycle_len;
    for (int j = 0; j < cycle_len; ++j)
        instantiate_two_port(link.graph, link.ports[0], link.ports[1], j, (j + 1) % cycle_len,
                             next, edges);
    GadgetSpec spec;
    spec.description = "edge-sum variable cycle of " + std::to_string(cycle_len) + " links";
    spec.graph = Graph(next, std::move(edges));
    for (int j = 0; j < cycle_len; ++j) spec.ports.push_back(j);
    spec.rule = Rule::EdgeSum;
    spec.max_label = 2;
    spec.add_port_stubs = true;
    spec.forall = [](const Graph&, const Labeling& f, const std::vector<int>& stubs) {
        for (size_t i = 1; i < stubs.size(); ++i)
            if (stub_value(f, stubs, i) != stub_value(f, stubs, 0)) return false;
        return true;
    };
    for (long long want : {1LL, 2LL})
        spec.exists.push_back([want](const Graph&, const Labeling& f,
                                     const std::vector<int>& stubs) {
            return stub_value(f, stubs, 0) == want;
        });
    return spec;
}

GadgetSpec default_edge_product_variable_gadget() {
    GadgetSpec spec;
    spec.description = "edge-product variable gadget (three stubs forced equal)";
    spec.graph = Graph(kHxVertices, kHxEdges);
    spec.ports = {0, 0, 0};
    spec.rule = Rule::EdgeProduct;
    spec.max_label = 2;
    spec.forall = [](const Graph&, const Labeling& f, const std::vector<int>& stubs) {
        return stub_value(f, stubs, 0) == stub_value(f, stubs, 1) &&
               stub_value(f, stubs, 1) == stub_value(f, stubs, 2);
    };
    for (long long want : {1LL, 2LL})
        spec.exists.push_back([want](const Graph&, const Labeling& f,
                                     const std::vector<int>& stubs) {
            return stub_value(f, stubs, 0) == want;
        });
    return spec;
}

GadgetSpec default_edge_product_clause_gadget() {
    GadgetSpec spec;
    spec.description = "edge-product clause gadget (2-count of stubs in {1,3})";
    spec.graph = Graph(kIcVertices, kIcEdges);
    spec.ports = {0, 0, 0};
    spec.rule = Rule::EdgeProduct;
    spec.max_label = 2;
    auto count2 = [](const Labeling& f, const std::vector<int>& stubs) {
        int c = 0;
        for (size_t i = 0; i < stubs.size(); ++i)
            if (stub_value(f, stubs, i) == 2) ++c;
        return c;
    };
    spec.forall = [count2](const Graph&, const Labeling& f, const std::vector<int>& stubs) {
        int c = count2(f, stubs);
        return c == 1 || c == 3;
    };
    for (int want : {1, 3})
        spec.exists.push_back(
            [count2, want](const Graph&, const Labeling& f, const std::vector<int>& stubs) {
                return count2(f, stubs) == want;
            });
    return spec;
}

// ---------------------------------------------------------------------------
// NAE-3SAT -> edge sum (3-regular target)
// ---------------------------------------------------------------------------

namespace {

void require_width3(const Formula& phi, bool monotone_required) {
    validate(phi);
    for (const auto& clause : phi.clauses) {
        if (clause.size() != 3)
            throw std::invalid_argument("reduction: every clause must have width 3");
        std::set<int> vars;
        for (int lit : clause) {
            if (monotone_required && lit < 0)
                throw std::invalid_argument("reduction: formula must be monotone");
            vars.insert(std::abs(lit));
        }
        if (vars.size() != 3)
            throw std::invalid_argument("reduction: clause variables must be distinct");
    }
}

struct EdgeSumLayout {
    Formula work; // after clause duplication
    std::vector<std::vector<int>> var_clauses;             // 1-based var -> clause ids
    std::vector<std::vector<int>> ports;                   // 1-based var -> port vertices
    std::vector<std::vector<std::vector<int>>> internals;  // var -> gadget -> fresh ids
    Graph graph;
};

EdgeSumLayout build_edge_sum_layout(const Formula& phi, const GadgetSpec& link) {
    EdgeSumLayout layout;
    layout.work = phi;
    // every used variable must occur at least twice: duplicate offending
    // clauses (duplication preserves NAE-satisfiability)
    while (true) {
        auto gamma = occurrence_counts(layout.work);
        int lonely = 0;
        for (int v = 1; v <= layout.work.var_count; ++v)
            if (gamma[v] == 1) lonely = v;
        if (!lonely) break;
        for (size_t j = 0; j < layout.work.clauses.size(); ++j) {
            bool has = false;
            for (int lit : layout.work.clauses[j])
                if (std::abs(lit) == lonely) has = true;
            if (has) {
                layout.work.clauses.push_back(layout.work.clauses[j]);
                break;
            }
        }
    }

    const int n = layout.work.var_count;
    const int m = static_cast<int>(layout.work.clauses.size());
    layout.var_clauses.assign(n + 1, {});
    for (int j = 0; j < m; ++j)
        for (int lit : layout.work.clauses[j]) layout.var_clauses[std::abs(lit)].push_back(j);

    std::vector<Edge> edges;
    int next = m; // clause vertices come first
    layout.ports.assign(n + 1, {});
    layout.internals.assign(n + 1, {});
    for (int v = 1; v <= n; ++v) {
        int occ = static_cast<int>(layout.var_clauses[v].size());
        for (int i = 0; i < occ; ++i) layout.ports[v].push_back(next++);
    }
    for (int v = 1; v <= n; ++v) {
        int occ = static_cast<int>(layout.ports[v].size());
        for (int gdx = 0; gdx < occ; ++gdx) {
            int a = layout.ports[v][gdx];
            int b = layout.ports[v][(gdx + 1) % occ];
            layout.internals[v].push_back(
                instantiate_two_port(link.graph, link.ports[0], link.ports[1], a, b, next, edges));
        }
    }
    for (int j = 0; j < m; ++j)
        for (int lit : layout.work.clauses[j]) {
            int v = std::abs(lit);
            // clause ids in var_clauses[v] are distinct, so the port of
            // this occurrence is unambiguous
            int occ_idx = static_cast<int>(
                std::find(layout.var_clauses[v].begin(), layout.var_clauses[v].end(), j) -
                layout.var_clauses[v].begin());
            edges.emplace_back(j, layout.ports[v][occ_idx]);
        }

    layout.graph = Graph(next, std::move(edges));
    return layout;
}

} // namespace

ReductionOutput reduce_nae3sat_to_edge_sum(const Formula& phi, const GadgetSpec* link_gadget) {
    if (phi.mode != FormulaMode::Nae)
        throw std::invalid_argument("reduce_nae3sat_to_edge_sum: formula mode must be nae");
    require_width3(phi, /*monotone_required=*/true);

    GadgetSpec link = link_gadget ? *link_gadget : default_edge_sum_link_gadget();
    if (link.ports.size() != 2)
        throw std::invalid_argument("reduce_nae3sat_to_edge_sum: link gadget needs two ports");
    auto gate = check_gadget(link);
    if (!gate.pass)
        throw std::invalid_argument("reduce_nae3sat_to_edge_sum: gadget rejected: " + gate.detail);

    EdgeSumLayout layout = build_edge_sum_layout(phi, link);
    for (int v = 0; v < layout.graph.vertex_count(); ++v)
        if (layout.graph.degree(v) != 3)
            throw std::logic_error("reduce_nae3sat_to_edge_sum: output is not 3-regular");

    ReductionOutput out;
    out.graph = layout.graph;
    out.name = "nae3sat-edge-sum";
    for (int v = 1; v <= layout.work.var_count; ++v) out.var_map[v] = layout.ports[v];
    for (size_t j = 0; j < layout.work.clauses.size(); ++j)
        out.clause_map[static_cast<int>(j) + 1] = static_cast<int>(j);
    out.meta["clause_count_after_duplication"] = layout.work.clauses.size();
    out.meta["gadget"] = link.description;
    return out;
}

Labeling nae3sat_edge_sum_certificate(const Formula& phi, const ReductionOutput& out,
                                      const std::vector<bool>& gamma) {
    if (static_cast<int>(gamma.size()) != phi.var_count)
        throw std::invalid_argument("certificate: assignment size mismatch");
    GadgetSpec link = default_edge_sum_link_gadget();
    EdgeSumLayout layout = build_edge_sum_layout(phi, link);
    if (!(layout.graph == out.graph))
        throw std::invalid_argument("certificate: output was not built with the default gadget");

    const Graph& g = layout.graph;
    Labeling f;
    f.kind = LabelKind::Edge;
    f.values.assign(g.edges().size(), 0);
    auto set = [&](int u, int v, long long val) { f.values[g.edge_index(u, v)] = val; };
    for (int v = 1; v <= layout.work.var_count; ++v) {
        if (layout.ports[v].empty()) continue;
        long long lam = gamma[v - 1] ? 2 : 1;
        int occ = static_cast<int>(layout.ports[v].size());
        for (int gdx = 0; gdx < occ; ++gdx) {
            int a = layout.ports[v][gdx];
            int b = layout.ports[v][(gdx + 1) % occ];
            const auto& in = layout.internals[v][gdx]; // u1..u4 ascending
            set(a, in[0], lam);
            set(in[0], in[1], 1);
            set(in[0], in[2], 2);
            set(in[1], in[2], lam);
            set(in[1], in[3], 1);
            set(in[2], in[3], 2);
            set(in[3], b, lam);
        }
        for (int gdx = 0; gdx < occ; ++gdx)
            set(layout.ports[v][gdx], layout.var_clauses[v][gdx], lam); // clause edge
    }
    if (verify_proper(g, Rule::EdgeSum, f))
        throw std::logic_error("nae3sat_edge_sum_certificate: labeling failed verification");
    return f;
}

// ---------------------------------------------------------------------------
// cubic 1-in-3 -> edge product
// ---------------------------------------------------------------------------

namespace {

/// Appends a copy of an anchored gadget; the anchor maps to `anchor`,
/// internal vertices get fresh ids. Returns local->global map.
std::vector<int> instantiate_anchored(const Graph& gadget, int local_anchor, int anchor,
                                      int& next, std::vector<Edge>& edges) {
    std::vector<int> map(gadget.vertex_count(), -1);
    map[local_anchor] = anchor;
    for (int v = 0; v < gadget.vertex_count(); ++v)
        if (map[v] == -1) map[v] = next++;
    for (const auto& [u, v] : gadget.edges()) edges.emplace_back(map[u], map[v]);
    return map;
}

} // namespace

ReductionOutput reduce_1in3_to_edge_product(const Formula& phi, const GadgetSpec* variable_gadget,
                                            const GadgetSpec* clause_gadget) {
    if (phi.mode != FormulaMode::OneInThree)
        throw std::invalid_argument("reduce_1in3_to_edge_product: formula mode must be 1in3");
    require_width3(phi, /*monotone_required=*/true);
    auto gamma_counts = occurrence_counts(phi);
    for (int v = 1; v <= phi.var_count; ++v)
        if (gamma_counts[v] != 3)
            throw std::invalid_argument(
                "reduce_1in3_to_edge_product: instance must be cubic (every variable in exactly "
                "three clauses)");

    GadgetSpec hx = variable_gadget ? *variable_gadget : default_edge_product_variable_gadget();
    GadgetSpec ic = clause_gadget ? *clause_gadget : default_edge_product_clause_gadget();
    for (const GadgetSpec* spec : {&hx, &ic}) {
        if (spec->ports.size() != 3 || spec->ports[0] != spec->ports[1] ||
            spec->ports[1] != spec->ports[2])
            throw std::invalid_argument(
                "reduce_1in3_to_edge_product: gadgets must expose one anchor with three stubs");
        auto gate = check_gadget(*spec);
        if (!gate.pass)
            throw std::invalid_argument("reduce_1in3_to_edge_product: gadget rejected: " +
                                        gate.detail);
    }

    const int n = phi.var_count;
    const int m = static_cast<int>(phi.clauses.size());
    std::vector<Edge> edges;
    int next = n + m;
    ReductionOutput out;
    out.name = "1in3-edge-product";
    for (int v = 0; v < n; ++v) {
        auto map = instantiate_anchored(hx.graph, hx.ports[0], v, next, edges);
        out.var_map[v + 1] = {v};
        out.meta["variable_gadget_base"].push_back(map[1]);
    }
    for (int j = 0; j < m; ++j) {
        auto map = instantiate_anchored(ic.graph, ic.ports[0], n + j, next, edges);
        out.clause_map[j + 1] = n + j;
        out.meta["clause_gadget_base"].push_back(map[1]);
        for (int lit : phi.clauses[j]) edges.emplace_back(n + j, lit - 1);
    }
    out.graph = Graph(next, std::move(edges));
    out.meta["variable_gadget"] = hx.description;
    out.meta["clause_gadget"] = ic.description;
    return out;
}

Labeling one_in3_edge_product_certificate(const Formula& phi, const ReductionOutput& out,
                                          const std::vector<bool>& gamma) {
    if (static_cast<int>(gamma.size()) != phi.var_count)
        throw std::invalid_argument("certificate: assignment size mismatch");
    const Graph& g = out.graph;
    Labeling f;
    f.kind = LabelKind::Edge;
    f.values.assign(g.edges().size(), 0);

    const int n = phi.var_count;
    const int m = static_cast<int>(phi.clauses.size());
    auto base_list = [&](const char* key) { return out.meta.at(key); };
    // gadget internals occupy [base, base + size - 2] with local ids 1..size-1
    auto fill = [&](int anchor, int base, const std::vector<Edge>& local_edges,
                    const std::vector<int>& exps) {
        for (size_t i = 0; i < local_edges.size(); ++i) {
            auto [lu, lv] = local_edges[i];
            int u = lu == 0 ? anchor : base + lu - 1;
            int v = lv == 0 ? anchor : base + lv - 1;
            f.values[g.edge_index(u, v)] = 1LL << exps[i];
        }
    };
    for (int v = 0; v < n; ++v)
        fill(v, base_list("variable_gadget_base")[v].get<int>(), kHxEdges, kHxExp);
    for (int j = 0; j < m; ++j) {
        fill(n + j, base_list("clause_gadget_base")[j].get<int>(), kIcEdges, kIcExp);
        for (int lit : phi.clauses[j])
            f.values[g.edge_index(n + j, lit - 1)] = gamma[lit - 1] ? 2 : 1;
    }
    if (verify_proper(g, Rule::EdgeProduct, f))
        throw std::logic_error("one_in3_edge_product_certificate: labeling failed verification");
    return f;
}

// ---------------------------------------------------------------------------
// 1-in-3 -> vertex product via H gadgets
// ---------------------------------------------------------------------------

HGadget build_H_c_i(int i) {
    if (i < 3) throw std::invalid_argument("build_H_c_i: i must be >= 3");
    std::vector<Edge> edges = {{0, 1}, {0, 2}, {1, 2}};
    int next = 3;
    auto attach_pairs = [&](int z, int pairs) {
        for (int p = 0; p < pairs; ++p) {
            int t1 = next++, t2 = next++;
            edges.emplace_back(z, t1);
            edges.emplace_back(z, t2);
            edges.emplace_back(t1, t2);
        }
    };
    attach_pairs(0, i);     // z1: 2i pendants
    attach_pairs(1, i);     // z2: 2i pendants
    attach_pairs(2, i - 1); // z3: 2i-2 pendants
    HGadget h;
    h.graph = Graph(next, std::move(edges));
    return h;
}

ReductionOutput reduce_1in3_to_vertex_product(const Formula& phi) {
    if (phi.mode != FormulaMode::OneInThree)
        throw std::invalid_argument("reduce_1in3_to_vertex_product: formula mode must be 1in3");
    require_width3(phi, /*monotone_required=*/true);

    const int n = phi.var_count;
    const int m = static_cast<int>(phi.clauses.size());
    static const int kOrders[3] = {3, 5, 6};
    std::vector<Edge> edges;
    ReductionOutput out;
    out.name = "1in3-vertex-product";
    int next = n;
    for (int j = 0; j < m; ++j) {
        int c = next++;
        out.clause_map[j + 1] = c;
        for (int oi = 0; oi < 3; ++oi) {
            HGadget h = build_H_c_i(kOrders[oi]);
            int base = next;
            for (const auto& [u, v] : h.graph.edges()) edges.emplace_back(base + u, base + v);
            next += h.graph.vertex_count();
            edges.emplace_back(c, base + h.z3);
        }
        for (int lit : phi.clauses[j]) edges.emplace_back(c, lit - 1);
    }
    for (int v = 1; v <= n; ++v) out.var_map[v] = {v - 1};
    out.graph = Graph(next, std::move(edges));
    out.meta["clause_block_size"] = 1 + (6 * 3 + 1) + (6 * 5 + 1) + (6 * 6 + 1);
    return out;
}

Labeling one_in3_vertex_product_certificate(const Formula& phi, const ReductionOutput& out,
                                            const std::vector<bool>& gamma) {
    if (static_cast<int>(gamma.size()) != phi.var_count)
        throw std::invalid_argument("certificate: assignment size mismatch");
    const int n = phi.var_count;
    const int m = static_cast<int>(phi.clauses.size());
    static const int kOrders[3] = {3, 5, 6};
    Labeling f;
    f.kind = LabelKind::Vertex;
    f.values.assign(out.graph.vertex_count(), 1);
    for (int v = 0; v < n; ++v) f.values[v] = gamma[v] ? 2 : 1;
    int next = n;
    for (int j = 0; j < m; ++j) {
        int c = next++;
        f.values[c] = 1;
        for (int oi = 0; oi < 3; ++oi) {
            int i = kOrders[oi];
            int base = next;
            f.values[base + 0] = 2; // z1
            f.values[base + 1] = 1; // z2
            f.values[base + 2] = 2; // z3
            int pendant = base + 3;
            int pairs = 3 * i - 1;
            for (int p = 0; p < pairs; ++p) {
                f.values[pendant++] = 2;
                f.values[pendant++] = 1;
            }
            next += 6 * i + 1;
        }
    }
    if (verify_proper(out.graph, Rule::VertexProduct, f))
        throw std::logic_error("one_in3_vertex_product_certificate: labeling failed verification");
    return f;
}

// ---------------------------------------------------------------------------
// alpha(k) and 3-colorability -> vertex product from N_k
// ---------------------------------------------------------------------------

AlphaResult alpha_k(int k) {
    if (k < 3 || k > 12) throw std::invalid_argument("alpha_k: supported range is 3..12");
    std::set<long long> products;
    for (long long m = 1; m <= k; ++m)
        for (long long n = m; n <= k; ++n) products.insert(m * n);
    std::vector<long long> a(products.begin(), products.end());
    const int sz = static_cast<int>(a.size());

    auto ratio_in_bk = [&](long long d, long long dp) {
        for (long long m = 1; m <= k; ++m)
            for (long long n = 1; n <= k; ++n)
                if (d * n == dp * m) return true;
        return false;
    };
    std::vector<std::vector<char>> compatible(sz, std::vector<char>(sz, 0));
    for (int i = 0; i < sz; ++i)
        for (int j = i + 1; j < sz; ++j)
            compatible[i][j] = compatible[j][i] = !ratio_in_bk(a[i], a[j]);

    // include-first ascending DFS: the first clique of each size is the
    // lexicographically least one
    AlphaResult best;
    std::vector<int> current;
    std::function<void(int)> extend = [&](int from) {
        if (static_cast<int>(current.size()) > best.value) {
            best.value = static_cast<int>(current.size());
            best.witness.clear();
            for (int idx : current) best.witness.push_back(a[idx]);
        }
        for (int i = from; i < sz; ++i) {
            if (static_cast<int>(current.size()) + (sz - i) <= best.value) break;
            bool ok = true;
            for (int idx : current)
                if (!compatible[idx][i]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            current.push_back(i);
            extend(i + 1);
            current.pop_back();
        }
    };
    extend(0);
    return best;
}

ReductionOutput reduce_3col_to_vertex_product_k(const Graph& g, int k) {
    if (!is_connected(g))
        throw std::invalid_argument("reduce_3col_to_vertex_product_k: graph must be connected");
    AlphaResult alpha = alpha_k(k);
    const int n = g.vertex_count();
    const int cols = n + alpha.value - 3; // G* has this many vertices
    // G* adjacency test: original edges, clique tail, complete join
    auto star_adjacent = [&](int i, int j) {
        if (i == j) return false;
        if (i >= n || j >= n) return true;
        return g.has_edge(i, j);
    };
    std::vector<Edge> edges;
    auto cell = [&](int column, int row) { return column * k + row; };
    for (int i = 0; i < cols; ++i)
        for (int r1 = 0; r1 < k; ++r1)
            for (int r2 = r1 + 1; r2 < k; ++r2) edges.emplace_back(cell(i, r1), cell(i, r2));
    for (int i = 0; i < cols; ++i)
        for (int j = i + 1; j < cols; ++j) {
            if (!star_adjacent(i, j)) continue;
            for (int r1 = 0; r1 < k; ++r1)
                for (int r2 = 0; r2 < k; ++r2) edges.emplace_back(cell(i, r1), cell(j, r2));
        }
    int pendant_base = cols * k;
    for (int i = 0; i < cols; ++i)
        for (int p = 0; p < 2; ++p)
            for (int r = 0; r < k; ++r) edges.emplace_back(pendant_base + 2 * i + p, cell(i, r));

    ReductionOutput out;
    out.graph = Graph(cols * k + 2 * cols, std::move(edges));
    out.name = "3col-vertex-product-k";
    for (int v = 0; v < n; ++v) {
        std::vector<int> image;
        for (int r = 0; r < k; ++r) image.push_back(cell(v, r));
        image.push_back(pendant_base + 2 * v);
        image.push_back(pendant_base + 2 * v + 1);
        out.var_map[v] = image;
    }
    out.meta["k"] = k;
    out.meta["alpha"] = alpha.value;
    out.meta["alpha_witness"] = alpha.witness;
    return out;
}

// ---------------------------------------------------------------------------
// 3-SAT type 2 -> edge gap {1,2}, NAE-3SAT -> vertex gap {1,2}
// ---------------------------------------------------------------------------

namespace {

/// Shared skeleton: a C4 x-t-(not x)-t' per variable, a C6 anchored at
/// variable 1, and clause-literal edges. Clause vertices are provided by
/// the caller (single vertex or P4 head).
struct SkeletonParts {
    std::vector<Edge> edges;
    int c6_base = 0;
    int total = 0;
};

int literal_vertex(int lit) {
    int v = std::abs(lit) - 1;
    return 4 * v + (lit > 0 ? 0 : 2);
}

} // namespace

ReductionOutput reduce_3sat2_to_edge_gap2(const Formula& phi) {
    if (phi.mode != FormulaMode::Sat)
        throw std::invalid_argument("reduce_3sat2_to_edge_gap2: formula mode must be sat");
    require_width3(phi, /*monotone_required=*/false);
    if (phi.var_count < 1)
        throw std::invalid_argument("reduce_3sat2_to_edge_gap2: need at least one variable");

    const int n = phi.var_count;
    const int m = static_cast<int>(phi.clauses.size());
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) {
        int x = 4 * v;
        edges.emplace_back(x, x + 1);
        edges.emplace_back(x + 1, x + 2);
        edges.emplace_back(x + 2, x + 3);
        edges.emplace_back(x + 3, x);
    }
    int clause_base = 4 * n;
    for (int j = 0; j < m; ++j) {
        int c = clause_base + 4 * j;
        edges.emplace_back(c, c + 1);
        edges.emplace_back(c + 1, c + 2);
        edges.emplace_back(c + 2, c + 3);
        for (int lit : phi.clauses[j]) edges.emplace_back(c, literal_vertex(lit));
    }
    int c6 = clause_base + 4 * m;
    for (int i = 0; i < 6; ++i) edges.emplace_back(c6 + i, c6 + (i + 1) % 6);
    edges.emplace_back(0, c6); // anchor at variable 1

    ReductionOutput out;
    out.graph = Graph(c6 + 6, std::move(edges));
    out.name = "3sat2-edge-gap2";
    for (int v = 1; v <= n; ++v) out.var_map[v] = {4 * (v - 1), 4 * (v - 1) + 2};
    for (int j = 0; j < m; ++j) out.clause_map[j + 1] = clause_base + 4 * j;
    out.meta["c6_base"] = c6;
    return out;
}

ReductionOutput reduce_nae3sat_to_vertex_gap2(const Formula& phi) {
    if (phi.mode != FormulaMode::Nae)
        throw std::invalid_argument("reduce_nae3sat_to_vertex_gap2: formula mode must be nae");
    require_width3(phi, /*monotone_required=*/false);
    if (phi.var_count < 1)
        throw std::invalid_argument("reduce_nae3sat_to_vertex_gap2: need at least one variable");

    const int n = phi.var_count;
    const int m = static_cast<int>(phi.clauses.size());
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) {
        int x = 4 * v;
        edges.emplace_back(x, x + 1);
        edges.emplace_back(x + 1, x + 2);
        edges.emplace_back(x + 2, x + 3);
        edges.emplace_back(x + 3, x);
    }
    int clause_base = 4 * n;
    for (int j = 0; j < m; ++j)
        for (int lit : phi.clauses[j]) edges.emplace_back(clause_base + j, literal_vertex(lit));
    int c6 = clause_base + m;
    for (int i = 0; i < 6; ++i) edges.emplace_back(c6 + i, c6 + (i + 1) % 6);
    edges.emplace_back(0, c6);

    ReductionOutput out;
    out.graph = Graph(c6 + 6, std::move(edges));
    out.name = "nae3sat-vertex-gap2";
    for (int v = 1; v <= n; ++v) out.var_map[v] = {4 * (v - 1), 4 * (v - 1) + 2};
    for (int j = 0; j < m; ++j) out.clause_map[j + 1] = clause_base + j;
    out.meta["c6_base"] = c6;
    return out;
}

// ---------------------------------------------------------------------------
// k-colorability -> edge gap from N_k
// ---------------------------------------------------------------------------

ReductionOutput reduce_kcol_to_edge_gap_k(const Graph& g, int k) {
    if (k < 3) throw std::invalid_argument("reduce_kcol_to_edge_gap_k: k must be >= 3");
    if (!is_connected(g) || g.vertex_count() <= 2)
        throw std::invalid_argument(
            "reduce_kcol_to_edge_gap_k: graph must be connected with more than two vertices");
    const int n = g.vertex_count();
    std::vector<Edge> edges = g.edges(); // v' copies keep original ids
    for (int v = 0; v < n; ++v) {
        edges.emplace_back(v, n + v);
        edges.emplace_back(n + v, 2 * n + v);
    }
    ReductionOutput out;
    out.graph = Graph(3 * n, std::move(edges));
    out.name = "kcol-edge-gap-k";
    for (int v = 0; v < n; ++v) out.var_map[v] = {v, n + v, 2 * n + v};
    out.meta["k"] = k;
    return out;
}

Labeling kcol_edge_gap_certificate(const Graph& g, int k, const std::vector<int>& coloring,
                                   const ReductionOutput& out) {
    const int n = g.vertex_count();
    if (static_cast<int>(coloring.size()) != n)
        throw std::invalid_argument("certificate: coloring size mismatch");
    for (int c : coloring)
        if (c < 1 || c > k) throw std::invalid_argument("certificate: colors must be in 1..k");
    for (const auto& [u, v] : g.edges())
        if (coloring[u] == coloring[v])
            throw std::invalid_argument("certificate: coloring is not proper");
    Labeling f;
    f.kind = LabelKind::Edge;
    f.values.assign(out.graph.edges().size(), 1); // edges among v' copies stay 1
    for (int v = 0; v < n; ++v) {
        f.values[out.graph.edge_index(v, n + v)] = coloring[v];
        f.values[out.graph.edge_index(n + v, 2 * n + v)] = coloring[v] != 1 ? coloring[v] : k;
    }
    if (verify_proper(out.graph, Rule::EdgeGap, f))
        throw std::logic_error("kcol_edge_gap_certificate: labeling failed verification");
    return f;
}

// ---------------------------------------------------------------------------
// 3-colorability of 4-regular graphs -> vertex degree from N_k
// ---------------------------------------------------------------------------

ReductionOutput reduce_3col_to_degree_label_k(const Graph& g, int k) {
    if (k < 3) throw std::invalid_argument("reduce_3col_to_degree_label_k: k must be >= 3");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 4)
            throw std::invalid_argument("reduce_3col_to_degree_label_k: graph must be 4-regular");

    ReductionOutput out;
    out.name = "3col-degree-label-k";
    out.meta["k"] = k;
    if (k == 3) {
        // the gadget degree set {4..k} is empty: the construction is the
        // identity, exposed as a documented passthrough
        out.graph = g;
        for (int v = 0; v < g.vertex_count(); ++v) out.var_map[v] = {v};
        out.meta["passthrough"] = true;
        return out;
    }

    const int n = g.vertex_count();
    const int deg_count = k - 3; // alphas 4..k
    const int block = 2 * k;     // K, v_alpha, K', v'_alpha
    std::vector<Edge> edges = g.edges();
    auto block_base = [&](int v, int alpha) { return n + (v * deg_count + (alpha - 4)) * block; };
    for (int v = 0; v < n; ++v) {
        for (int alpha = 4; alpha <= k; ++alpha) {
            int base = block_base(v, alpha);
            int va = base + k - 1;
            int base2 = base + k;
            int va2 = base2 + k - 1;
            for (int i = 0; i < k - 1; ++i) {
                edges.emplace_back(v, base + i);
                edges.emplace_back(v, base2 + i);
                edges.emplace_back(base + i, va);
                edges.emplace_back(base2 + i, va2);
                for (int j = i + 1; j < k - 1; ++j) {
                    edges.emplace_back(base + i, base + j);
                    edges.emplace_back(base2 + i, base2 + j);
                }
            }
            edges.emplace_back(va, va2);
        }
    }
    // degrees of H so far
    int h_count = n + n * deg_count * block;
    std::vector<int> deg(h_count, 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    int next = h_count;
    for (int v = 0; v < n; ++v)
        for (int alpha = 4; alpha <= k; ++alpha) {
            int base = block_base(v, alpha);
            for (int u = base; u < base + block; ++u) {
                int leaves = alpha * deg[v] - deg[u];
                for (int l = 0; l < leaves; ++l) edges.emplace_back(u, next++);
            }
        }
    out.graph = Graph(next, std::move(edges));
    for (int v = 0; v < n; ++v) out.var_map[v] = {v};
    out.meta["gadget_vertices_per_source_vertex"] = deg_count * block;
    return out;
}

// ---------------------------------------------------------------------------
// class 1 <-> vertex maximum from N_3
// ---------------------------------------------------------------------------

ReductionOutput reduce_class1_to_vertex_max3(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3)
            throw std::invalid_argument("reduce_class1_to_vertex_max3: graph must be 3-regular");
    const int n = g.vertex_count();
    const int m = g.edge_count();

    auto triangle_vertex = [&](int v, int neighbor, bool primed) {
        const auto& nb = g.neighbors(v);
        int rank = static_cast<int>(std::lower_bound(nb.begin(), nb.end(), neighbor) - nb.begin());
        return 6 * v + (primed ? 3 : 0) + rank;
    };
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
        for (int offset : {0, 3}) {
            edges.emplace_back(6 * v + offset, 6 * v + offset + 1);
            edges.emplace_back(6 * v + offset, 6 * v + offset + 2);
            edges.emplace_back(6 * v + offset + 1, 6 * v + offset + 2);
        }
    for (int e = 0; e < m; ++e) {
        auto [u, v] = g.edges()[e];
        int ev = 6 * n + 2 * e, ev2 = ev + 1;
        edges.emplace_back(ev, ev2);
        edges.emplace_back(ev, triangle_vertex(v, u, false));
        edges.emplace_back(ev, triangle_vertex(u, v, false));
        edges.emplace_back(ev2, triangle_vertex(v, u, true));
        edges.emplace_back(ev2, triangle_vertex(u, v, true));
    }
    ReductionOutput out;
    out.graph = Graph(6 * n + 2 * m, std::move(edges));
    out.name = "class1-vertex-max3";
    for (int v = 0; v < n; ++v)
        out.var_map[v] = {6 * v, 6 * v + 1, 6 * v + 2, 6 * v + 3, 6 * v + 4, 6 * v + 5};
    out.meta["edge_vertex_base"] = 6 * n;
    for (int v = 0; v < out.graph.vertex_count(); ++v)
        if (out.graph.degree(v) != 3)
            throw std::logic_error("reduce_class1_to_vertex_max3: output is not 3-regular");
    return out;
}

Labeling class1_vertex_max3_certificate(const Graph& g, const std::vector<int>& edge_coloring,
                                        const ReductionOutput& out) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (static_cast<int>(edge_coloring.size()) != m)
        throw std::invalid_argument("certificate: edge coloring size mismatch");
    for (int c : edge_coloring)
        if (c < 1 || c > 3) throw std::invalid_argument("certificate: colors must be in 1..3");
    for (int v = 0; v < n; ++v) {
        std::set<int> at_v;
        for (int u : g.neighbors(v)) at_v.insert(edge_coloring[g.edge_index(u, v)]);
        if (at_v.size() != g.neighbors(v).size())
            throw std::invalid_argument("certificate: edge coloring is not proper");
    }
    Labeling f;
    f.kind = LabelKind::Vertex;
    f.values.assign(out.graph.vertex_count(), 1); // all triangle vertices get 1
    for (int e = 0; e < m; ++e) {
        int c = edge_coloring[e];
        f.values[6 * n + 2 * e] = c;
        f.values[6 * n + 2 * e + 1] = c % 3 + 1;
    }
    if (verify_proper(out.graph, Rule::VertexMaximum, f))
        throw std::logic_error("class1_vertex_max3_certificate: labeling failed verification");
    return f;
}

Graph lift_max_labeling(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Edge> edges = g.edges();
    for (int v = 0; v < n; ++v) edges.emplace_back(v, n);
    edges.emplace_back(n, n + 1);
    return Graph(n + 2, std::move(edges));
}

} // namespace proplabel
