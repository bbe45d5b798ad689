#include "proplabel/solvers.hpp"

#include <algorithm>
#include <set>

namespace proplabel {

const char* method_name(SolveMethod m) {
    switch (m) {
    case SolveMethod::Brute: return "brute";
    case SolveMethod::TwoSat: return "twosat";
    case SolveMethod::NaeAlgorithm1: return "nae-algorithm1";
    case SolveMethod::NaeEdgeGap: return "nae-edge-gap";
    case SolveMethod::Construction: return "construction";
    }
    return "?";
}

namespace {

/// Backtracking enumerator over element labels. A vertex color becomes
/// final once the last element it depends on is assigned; branches die as
/// soon as two adjacent final colors collide.
class Enumerator {
public:
    Enumerator(const Graph& g, Rule rule, int k, const EnumerateOptions& opts)
        : g_(g), rule_(rule), k_(k), kind_(labeled_elements(rule)) {
        if (k < 1) throw std::invalid_argument("enumerate: max label must be >= 1");
        const int n = g.vertex_count();
        element_count_ = kind_ == LabelKind::Edge ? g.edge_count() : n;
        max_nodes_ = opts.budget.max_nodes;
        unchecked_ = opts.unchecked_vertex;
        unchecked_.resize(n, 0);

        finalize_at_.assign(n, -1);
        if (kind_ == LabelKind::Edge) {
            for (int i = 0; i < g.edge_count(); ++i) {
                finalize_at_[g.edges()[i].first] = i;
                finalize_at_[g.edges()[i].second] =
                    std::max(finalize_at_[g.edges()[i].second], i);
            }
        } else if (rule == Rule::VertexDegree) {
            for (int v = 0; v < n; ++v) finalize_at_[v] = v;
        } else {
            for (int v = 0; v < n; ++v)
                for (int u : g.neighbors(v)) finalize_at_[v] = std::max(finalize_at_[v], u);
        }
        finalize_list_.assign(std::max(element_count_, 1), {});
        for (int v = 0; v < n; ++v)
            if (finalize_at_[v] >= 0) finalize_list_[finalize_at_[v]].push_back(v);

        labels_.assign(element_count_, 0);
        color_.resize(n);
        for (int v = 0; v < n; ++v)
            if (finalize_at_[v] < 0) color_[v] = vertex_color(v); // isolated: constant
    }

    void run(const std::function<bool(const Labeling&)>& visit) {
        visit_ = &visit;
        dfs(0);
    }

private:
    Color vertex_color(int v) {
        scratch_.clear();
        if (kind_ == LabelKind::Edge) {
            for (int u : g_.neighbors(v)) scratch_.push_back(labels_[g_.edge_index(u, v)]);
        } else if (rule_ != Rule::VertexDegree) {
            for (int u : g_.neighbors(v)) scratch_.push_back(labels_[u]);
        }
        switch (rule_) {
        case Rule::EdgeSum:
        case Rule::VertexSum: {
            long long s = 0;
            for (long long x : scratch_) s += x;
            return Color::scalar(s);
        }
        case Rule::EdgeProduct:
        case Rule::VertexProduct:
            return Color::product(scratch_);
        case Rule::EdgeGap:
        case Rule::VertexGap: {
            if (scratch_.empty()) return Color::scalar(1);
            if (scratch_.size() == 1) return Color::scalar(scratch_[0]);
            auto [mn, mx] = std::minmax_element(scratch_.begin(), scratch_.end());
            return Color::scalar(*mx - *mn);
        }
        case Rule::VertexDegree:
            return Color::scalar(labels_[v] * g_.degree(v));
        case Rule::VertexMaximum:
            return Color::scalar(scratch_.empty()
                                     ? 0
                                     : *std::max_element(scratch_.begin(), scratch_.end()));
        }
        return Color();
    }

    // returns false when the visitor requested a stop
    bool dfs(int d) {
        if (d == element_count_) {
            Labeling f{kind_, labels_};
            return (*visit_)(f);
        }
        for (int val = 1; val <= k_; ++val) {
            if (++nodes_ > max_nodes_)
                throw BudgetExceededError("search budget exceeded after " +
                                          std::to_string(nodes_ - 1) + " nodes");
            labels_[d] = val;
            bool ok = true;
            for (int v : finalize_list_[d]) color_[v] = vertex_color(v);
            for (int v : finalize_list_[d]) {
                if (unchecked_[v]) continue;
                for (int u : g_.neighbors(v)) {
                    if (unchecked_[u] || finalize_at_[u] > d) continue;
                    if (color_[u] == color_[v]) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) break;
            }
            if (ok && !dfs(d + 1)) return false;
        }
        return true;
    }

    const Graph& g_;
    Rule rule_;
    int k_;
    LabelKind kind_;
    int element_count_ = 0;
    std::vector<char> unchecked_;
    std::vector<int> finalize_at_;
    std::vector<std::vector<int>> finalize_list_;
    std::vector<long long> labels_;
    std::vector<Color> color_;
    std::vector<long long> scratch_;
    long long nodes_ = 0, max_nodes_ = 0;
    const std::function<bool(const Labeling&)>* visit_ = nullptr;
};

} // namespace

void enumerate_proper_labelings(const Graph& g, Rule rule, int max_label,
                                const std::function<bool(const Labeling&)>& visit,
                                const EnumerateOptions& opts) {
    Enumerator(g, rule, max_label, opts).run(visit);
}

SolveOutcome brute_force_decide(const Graph& g, Rule rule, int max_label,
                                const SearchBudget& budget) {
    std::optional<Labeling> witness;
    EnumerateOptions opts;
    opts.budget = budget;
    enumerate_proper_labelings(
        g, rule, max_label,
        [&](const Labeling& f) {
            witness = f;
            return false;
        },
        opts);
    if (witness && verify_proper(g, rule, *witness))
        throw std::logic_error("brute_force_decide: enumerator produced an improper witness");
    return {witness.has_value(), std::move(witness), SolveMethod::Brute, ""};
}

std::optional<std::vector<bool>> solve_2sat(const Formula& phi) {
    if (phi.mode != FormulaMode::TwoSat)
        throw std::invalid_argument("solve_2sat: formula mode must be 2sat");
    validate(phi);
    const int n = phi.var_count;
    const int N = 2 * n;
    auto node = [](int lit) { return lit > 0 ? 2 * (lit - 1) : 2 * (-lit - 1) + 1; };
    std::vector<std::vector<int>> adj(N);
    for (const auto& clause : phi.clauses) {
        int a = clause[0], b = clause[1];
        adj[node(-a)].push_back(node(b));
        adj[node(-b)].push_back(node(a));
    }

    // iterative Tarjan; component ids are assigned sink-first
    std::vector<int> num(N, -1), low(N, 0), comp(N, -1), stack;
    std::vector<char> on_stack(N, 0);
    int next_num = 0, next_comp = 0;
    struct Frame {
        int v;
        size_t edge;
    };
    std::vector<Frame> frames;
    for (int s = 0; s < N; ++s) {
        if (num[s] != -1) continue;
        frames.push_back({s, 0});
        num[s] = low[s] = next_num++;
        stack.push_back(s);
        on_stack[s] = 1;
        while (!frames.empty()) {
            Frame& fr = frames.back();
            if (fr.edge < adj[fr.v].size()) {
                int u = adj[fr.v][fr.edge++];
                if (num[u] == -1) {
                    num[u] = low[u] = next_num++;
                    stack.push_back(u);
                    on_stack[u] = 1;
                    frames.push_back({u, 0});
                } else if (on_stack[u]) {
                    low[fr.v] = std::min(low[fr.v], num[u]);
                }
            } else {
                int v = fr.v;
                if (low[v] == num[v]) {
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp[w] = next_comp;
                        if (w == v) break;
                    }
                    ++next_comp;
                }
                frames.pop_back();
                if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            }
        }
    }

    std::vector<bool> assignment(n, false);
    for (int v = 0; v < n; ++v) {
        if (comp[2 * v] == comp[2 * v + 1]) return std::nullopt;
        assignment[v] = comp[2 * v] < comp[2 * v + 1];
    }
    return assignment;
}

std::optional<std::vector<bool>> solve_nae(const Formula& phi, const SearchBudget& budget) {
    if (phi.mode != FormulaMode::Nae)
        throw std::invalid_argument("solve_nae: formula mode must be nae");
    validate(phi);
    const int n = phi.var_count;

    // normalize: drop clauses holding a variable in both signs (always
    // NAE-satisfied), collapse duplicate literals and duplicate clauses
    std::vector<std::vector<int>> clauses;
    std::set<std::vector<int>> seen;
    for (auto clause : phi.clauses) {
        std::sort(clause.begin(), clause.end());
        clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
        bool tautological = false;
        for (int lit : clause)
            if (std::binary_search(clause.begin(), clause.end(), -lit)) {
                tautological = true;
                break;
            }
        if (tautological) continue;
        if (clause.size() == 1) return std::nullopt; // single literal can't be mixed
        if (seen.insert(clause).second) clauses.push_back(std::move(clause));
    }

    std::vector<int> value(n + 1, -1);
    std::vector<int> trail;
    long long nodes = 0;

    auto set_var = [&](int var, int val) {
        if (++nodes > budget.max_nodes)
            throw BudgetExceededError("solve_nae: budget exceeded");
        value[var] = val;
        trail.push_back(var);
    };
    auto undo_to = [&](size_t mark) {
        while (trail.size() > mark) {
            value[trail.back()] = -1;
            trail.pop_back();
        }
    };
    auto lit_value = [&](int lit) {
        int v = value[std::abs(lit)];
        if (v == -1) return -1;
        return lit > 0 ? v : 1 - v;
    };

    // force a literal in every clause whose other literals are already
    // uniform; report conflicts on fully-uniform clauses
    auto propagate = [&]() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& clause : clauses) {
                int trues = 0, falses = 0, free_lit = 0, frees = 0;
                for (int lit : clause) {
                    int lv = lit_value(lit);
                    if (lv == -1) {
                        ++frees;
                        free_lit = lit;
                    } else if (lv == 1)
                        ++trues;
                    else
                        ++falses;
                }
                if (frees == 0) {
                    if (trues == 0 || falses == 0) return false;
                } else if (frees == 1 && (trues == 0 || falses == 0) &&
                           trues + falses == static_cast<int>(clause.size()) - 1) {
                    int forced = trues == 0 ? 1 : 0; // make the clause mixed
                    set_var(std::abs(free_lit), free_lit > 0 ? forced : 1 - forced);
                    changed = true;
                }
            }
        }
        return true;
    };

    std::function<bool(int)> dfs = [&](int var) {
        while (var <= n && value[var] != -1) ++var;
        if (var > n) return true;
        for (int val : {1, 0}) {
            size_t mark = trail.size();
            set_var(var, val);
            if (propagate() && dfs(var + 1)) return true;
            undo_to(mark);
        }
        return false;
    };

    if (!propagate()) return std::nullopt;
    if (!dfs(1)) return std::nullopt;

    std::vector<bool> assignment(n, false);
    for (int v = 1; v <= n; ++v) assignment[v - 1] = value[v] == 1;
    // complement closure: normalize so that variable 1 is true
    if (n > 0 && !assignment[0]) assignment.flip();
    return assignment;
}

Formula wide_nae_to_3nae(const Formula& phi) {
    if (phi.mode != FormulaMode::Nae)
        throw std::invalid_argument("wide_nae_to_3nae: formula mode must be nae");
    validate(phi);
    std::vector<std::vector<int>> clauses;
    for (auto clause : phi.clauses) {
        std::sort(clause.begin(), clause.end());
        clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
        if (clause.size() < 2)
            throw std::invalid_argument("wide_nae_to_3nae: clause width < 2");
        clauses.push_back(std::move(clause));
    }
    Formula out;
    out.mode = FormulaMode::Nae;
    out.var_count = phi.var_count;
    for (const auto& clause : clauses) {
        if (clause.size() == 2) {
            int t = ++out.var_count;
            out.clauses.push_back({clause[0], clause[1], t});
            out.clauses.push_back({clause[0], clause[1], -t});
            continue;
        }
        std::vector<int> cur = clause;
        while (cur.size() > 4) {
            int t = ++out.var_count;
            out.clauses.push_back({cur[0], cur[1], t});
            std::vector<int> rest(cur.begin() + 2, cur.end());
            rest.push_back(-t);
            cur = std::move(rest);
        }
        if (cur.size() == 4) {
            int t = ++out.var_count;
            out.clauses.push_back({cur[0], cur[1], t});
            out.clauses.push_back({cur[2], cur[3], -t});
        } else {
            out.clauses.push_back(cur);
        }
    }
    return out;
}

SolveOutcome degree_label_from_2(const Graph& g) {
    Formula phi;
    phi.mode = FormulaMode::TwoSat;
    phi.var_count = g.vertex_count();
    for (const auto& [u, v] : g.edges()) {
        int du = g.degree(u), dv = g.degree(v);
        int a = u + 1, b = v + 1;
        if (du == dv) {
            phi.clauses.push_back({a, b});
            phi.clauses.push_back({-a, -b});
        } else if (du == 2 * dv) {
            phi.clauses.push_back({a, -b}); // forbid f(u)=1, f(v)=2
        } else if (dv == 2 * du) {
            phi.clauses.push_back({-a, b});
        }
        // other degree ratios can never collide with labels from {1,2}
    }
    auto sol = solve_2sat(phi);
    if (!sol) return {false, std::nullopt, SolveMethod::TwoSat, ""};
    Labeling f;
    f.kind = LabelKind::Vertex;
    for (int v = 0; v < g.vertex_count(); ++v) f.values.push_back((*sol)[v] ? 2 : 1);
    if (verify_proper(g, Rule::VertexDegree, f))
        throw std::logic_error("degree_label_from_2: 2-sat witness failed verification");
    return {true, std::move(f), SolveMethod::TwoSat, ""};
}

namespace {

/// One NAE clause per degree>=2 vertex of `clause_side`, over variables on
/// `var_side`. Variable i+1 <=> var_side[i].
Formula gap_side_formula(const Graph& g, const std::vector<int>& var_side,
                         const std::vector<int>& clause_side) {
    Formula phi;
    phi.mode = FormulaMode::Nae;
    phi.var_count = static_cast<int>(var_side.size());
    std::vector<int> var_of(g.vertex_count(), 0);
    for (size_t i = 0; i < var_side.size(); ++i) var_of[var_side[i]] = static_cast<int>(i) + 1;
    for (int u : clause_side) {
        if (g.degree(u) < 2) continue;
        std::vector<int> clause;
        for (int v : g.neighbors(u)) clause.push_back(var_of[v]);
        phi.clauses.push_back(std::move(clause));
    }
    return phi;
}

} // namespace

SolveOutcome vertex_gap_algorithm1(const Graph& g, const SearchBudget& budget) {
    auto bip = bipartition(g);
    if (!bip.ok())
        throw NotApplicableError("vertex_gap_algorithm1: graph is not bipartite");

    std::vector<long long> labels(g.vertex_count(), 0);
    SolveMethod method = SolveMethod::NaeAlgorithm1;
    std::string note;

    int comp_no = 0;
    for (const auto& comp : components(g)) {
        ++comp_no;
        auto [sub, to_global] = induced_subgraph(g, comp);
        const int ln = sub.vertex_count();

        bool core_has_edge = false;
        for (const auto& [u, v] : sub.edges())
            if (sub.degree(u) >= 2 && sub.degree(v) >= 2) core_has_edge = true;

        if (!core_has_edge) {
            // a star, a single edge or an isolated vertex
            if (ln == 1) {
                labels[to_global[0]] = 1;
            } else if (ln == 2) {
                labels[to_global[0]] = 1;
                labels[to_global[1]] = 2;
            } else {
                int center = 0;
                for (int v = 1; v < ln; ++v)
                    if (sub.degree(v) > sub.degree(center)) center = v;
                for (int v = 0; v < ln; ++v) labels[to_global[v]] = v == center ? 1 : 2;
            }
            continue;
        }

        auto sub_bip = bipartition(sub);
        const auto& side_x = sub_bip.parts->side_x;
        const auto& side_y = sub_bip.parts->side_y;

        auto try_side = [&](const std::vector<int>& vars, const std::vector<int>& cls) {
            return solve_nae(gap_side_formula(sub, vars, cls), budget);
        };
        auto apply = [&](const std::vector<int>& vars, const std::vector<int>& rest,
                         const std::vector<bool>& gamma) {
            for (size_t i = 0; i < vars.size(); ++i)
                labels[to_global[vars[i]]] = gamma[i] ? 2 : 1;
            for (int v : rest) labels[to_global[v]] = 2;
        };

        if (auto gamma = try_side(side_x, side_y)) {
            apply(side_x, side_y, *gamma);
            continue;
        }
        if (auto gamma = try_side(side_y, side_x)) {
            apply(side_y, side_x, *gamma);
            continue;
        }

        // Both formulas unsatisfiable. The "no" is justified only when the
        // degree>=2 core is connected; otherwise decide by brute force.
        std::vector<int> core;
        for (int v = 0; v < ln; ++v)
            if (sub.degree(v) >= 2) core.push_back(v);
        auto core_sub = induced_subgraph(sub, core);
        if (is_connected(core_sub.graph))
            return {false, std::nullopt, method,
                    "component " + std::to_string(comp_no) + ": both side formulas unsatisfiable"};

        note += "component " + std::to_string(comp_no) +
                ": degree core disconnected, brute-force fallback; ";
        method = SolveMethod::Brute;
        auto brute = brute_force_decide(sub, Rule::VertexGap, 2, budget);
        if (!brute.labelable) return {false, std::nullopt, method, note};
        for (int v = 0; v < ln; ++v) labels[to_global[v]] = brute.witness->values[v];
    }

    Labeling f{LabelKind::Vertex, std::move(labels)};
    if (verify_proper(g, Rule::VertexGap, f))
        throw std::logic_error("vertex_gap_algorithm1: assembled labeling failed verification");
    return {true, std::move(f), method, note};
}

SolveOutcome edge_gap_planar_bipartite(const Graph& g, const SearchBudget& budget) {
    if (!is_connected(g))
        throw NotApplicableError("edge_gap_planar_bipartite: graph must be connected");
    auto bip = bipartition(g);
    if (!bip.ok())
        throw NotApplicableError("edge_gap_planar_bipartite: graph is not bipartite");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) < 2)
            throw NotApplicableError("edge_gap_planar_bipartite: minimum degree must be >= 2");

    const auto& side_x = bip.parts->side_x;
    const auto& side_y = bip.parts->side_y;

    auto label_from = [&](const std::vector<int>& vars, const std::vector<bool>& gamma) {
        std::vector<int> var_of(g.vertex_count(), 0);
        for (size_t i = 0; i < vars.size(); ++i) var_of[vars[i]] = static_cast<int>(i) + 1;
        Labeling f;
        f.kind = LabelKind::Edge;
        for (const auto& [u, v] : g.edges()) {
            int anchor = var_of[u] ? u : v; // the endpoint on the variable side
            f.values.push_back(gamma[var_of[anchor] - 1] ? 2 : 1);
        }
        return f;
    };

    std::optional<Labeling> witness;
    if (auto gamma = solve_nae(gap_side_formula(g, side_x, side_y), budget))
        witness = label_from(side_x, *gamma);
    else if (auto gamma2 = solve_nae(gap_side_formula(g, side_y, side_x), budget))
        witness = label_from(side_y, *gamma2);
    if (!witness)
        return {false, std::nullopt, SolveMethod::NaeEdgeGap, "both side formulas unsatisfiable"};
    if (verify_proper(g, Rule::EdgeGap, *witness))
        throw std::logic_error("edge_gap_planar_bipartite: witness failed verification");
    return {true, std::move(witness), SolveMethod::NaeEdgeGap, ""};
}

namespace {

bool in_triangle_within(const Graph& g, int v, const std::vector<char>& in_set) {
    const auto& nb = g.neighbors(v);
    for (size_t i = 0; i < nb.size(); ++i) {
        if (!in_set[nb[i]]) continue;
        for (size_t j = i + 1; j < nb.size(); ++j)
            if (in_set[nb[j]] && g.has_edge(nb[i], nb[j])) return true;
    }
    return false;
}

bool removable(const Graph& g, int v, const std::vector<char>& in_set) {
    if (!in_triangle_within(g, v, in_set)) return true;
    for (int u : g.neighbors(v)) {
        if (in_set[u]) continue;
        bool covered = false;
        for (int z : g.neighbors(u))
            if (in_set[z] && g.has_edge(z, v)) {
                covered = true;
                break;
            }
        if (!covered) return true; // edge vu leaves the set uncovered
    }
    return false;
}

} // namespace

TsvResult tsv_find(const Graph& g, const std::vector<int>& scan_order) {
    std::vector<char> in_set(g.vertex_count(), 0);
    for (const auto& t : triangles(g))
        for (int v : t) in_set[v] = 1;

    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : scan_order) {
            if (!in_set[v]) continue;
            if (removable(g, v, in_set)) {
                in_set[v] = 0;
                changed = true;
            }
        }
    }

    TsvResult res;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (in_set[v]) res.tsv.push_back(v);
    res.found = !res.tsv.empty();
    return res;
}

TsvResult tsv_find(const Graph& g) {
    std::vector<int> order(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) order[v] = v;
    return tsv_find(g, order);
}

} // namespace proplabel
