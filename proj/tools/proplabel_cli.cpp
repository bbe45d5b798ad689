// Command-line surface: verify / solve / construct / reduce / tsv /
// experiment-gnp. Machine output is JSON on stdout; human tables go to
// stderr under --verbose. Exit codes: 0 yes/proper, 1 no/violation,
// 2 usage or input error, 3 search budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "proplabel/constructions.hpp"
#include "proplabel/formula.hpp"
#include "proplabel/graph.hpp"
#include "proplabel/labeling.hpp"
#include "proplabel/random_graph.hpp"
#include "proplabel/reductions.hpp"
#include "proplabel/solvers.hpp"

using nlohmann::json;
using namespace proplabel;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

Rule parse_rule(const std::string& name) {
    auto rule = rule_from_name(name);
    if (!rule) throw std::runtime_error("unknown rule '" + name + "'");
    return *rule;
}

FormulaMode parse_mode(const std::string& name) {
    for (FormulaMode m :
         {FormulaMode::Sat, FormulaMode::Nae, FormulaMode::OneInThree, FormulaMode::TwoSat})
        if (name == mode_name(m)) return m;
    throw std::runtime_error("unknown formula mode '" + name + "'");
}

json witness_json(const Graph& g, const SolveOutcome& outcome) {
    json j;
    j["labelable"] = outcome.labelable;
    j["method"] = method_name(outcome.method);
    if (!outcome.note.empty()) j["note"] = outcome.note;
    if (outcome.witness) j["witness"] = labeling_to_json(g, *outcome.witness);
    return j;
}

int cmd_verify(const std::string& graph_file, const std::string& labeling_file,
               const std::string& rule_name_arg) {
    Graph g = parse_graph(slurp(graph_file));
    Rule rule = parse_rule(rule_name_arg);
    Labeling f = labeling_from_json(g, json::parse(slurp(labeling_file)));
    auto violation = verify_proper(g, rule, f);
    json j;
    j["rule"] = rule_name_arg;
    j["proper"] = !violation.has_value();
    if (violation) {
        j["violation"] = {{"u", violation->edge.first + 1},
                          {"v", violation->edge.second + 1},
                          {"color", violation->color.str()}};
    } else {
        j["max_label"] = max_label_used(f);
    }
    std::cout << j.dump(2) << '\n';
    return violation ? 1 : 0;
}

int cmd_solve(const std::string& graph_file, const std::string& rule_name_arg, int labels,
              const std::string& method, long long budget) {
    Graph g = parse_graph(slurp(graph_file));
    Rule rule = parse_rule(rule_name_arg);
    SearchBudget sb{budget};

    auto fast_path = [&]() -> std::optional<SolveOutcome> {
        if (rule == Rule::VertexDegree && labels == 2) return degree_label_from_2(g);
        if (rule == Rule::VertexGap && labels == 2 && bipartition(g).ok())
            return vertex_gap_algorithm1(g, sb);
        if (rule == Rule::EdgeGap && labels == 2) {
            bool deg_ok = true;
            for (int v = 0; v < g.vertex_count(); ++v) deg_ok &= g.degree(v) >= 2;
            if (deg_ok && is_connected(g) && bipartition(g).ok())
                return edge_gap_planar_bipartite(g, sb);
        }
        return std::nullopt;
    };

    SolveOutcome outcome;
    if (method == "brute") {
        outcome = brute_force_decide(g, rule, labels, sb);
    } else if (method == "fast") {
        auto fast = fast_path();
        if (!fast) throw std::runtime_error("no fast method for this rule/label combination");
        outcome = *fast;
    } else {
        auto fast = fast_path();
        outcome = fast ? *fast : brute_force_decide(g, rule, labels, sb);
    }
    std::cout << witness_json(g, outcome).dump(2) << '\n';
    return outcome.labelable ? 0 : 1;
}

int cmd_construct(const std::string& family, const std::string& graph_file, int n, int root,
                  const std::string& out_file) {
    Graph g;
    Rule rule;
    Labeling f;
    if (family == "kn-gap") {
        g = complete_graph(n);
        f = complete_gap_labeling(n);
        rule = Rule::EdgeGap;
    } else {
        g = parse_graph(slurp(graph_file));
        if (family == "tree-gap") {
            f = tree_gap_labeling(g, root - 1);
            rule = Rule::VertexGap;
        } else if (family == "bip-gap") {
            auto bp = bipartition(g);
            if (!bp.ok()) throw std::runtime_error("bip-gap: graph is not bipartite");
            f = bipartite_vertex_gap(g, *bp.parts);
            rule = Rule::VertexGap;
        } else if (family == "pow2-edge-gap") {
            f = powers_of_two_edge_gap(g);
            rule = Rule::EdgeGap;
        } else if (family == "prime-product") {
            f = prime_product_labeling(g, greedy_coloring(g));
            rule = Rule::VertexProduct;
        } else if (family == "bip-max") {
            auto bp = bipartition(g);
            if (!bp.ok()) throw std::runtime_error("bip-max: graph is not bipartite");
            f = bipartite_vertex_maximum(g, *bp.parts);
            rule = Rule::VertexMaximum;
        } else if (family == "reg-bip-gap") {
            f = regular_bipartite_vertex_gap(g);
            rule = Rule::VertexGap;
        } else {
            throw std::runtime_error("unknown family '" + family + "'");
        }
    }
    if (verify_proper(g, rule, f))
        throw std::logic_error("construction produced an improper labeling");
    json j = labeling_to_json(g, f);
    j["rule"] = rule_name(rule);
    if (out_file.empty())
        std::cout << j.dump(2) << '\n';
    else
        spill(out_file, j.dump(2) + "\n");
    return 0;
}

int cmd_reduce(const std::string& reduction, const std::string& input_file,
               const std::string& mode_arg, int k, const std::string& out_prefix) {
    ReductionOutput out;
    if (reduction == "nae3sat-edge-sum") {
        out = reduce_nae3sat_to_edge_sum(parse_dimacs_cnf(slurp(input_file), FormulaMode::Nae));
    } else if (reduction == "1in3-edge-product") {
        out = reduce_1in3_to_edge_product(
            parse_dimacs_cnf(slurp(input_file), FormulaMode::OneInThree));
    } else if (reduction == "1in3-vertex-product") {
        out = reduce_1in3_to_vertex_product(
            parse_dimacs_cnf(slurp(input_file), FormulaMode::OneInThree));
    } else if (reduction == "3sat2-edge-gap2") {
        out = reduce_3sat2_to_edge_gap2(parse_dimacs_cnf(slurp(input_file), FormulaMode::Sat));
    } else if (reduction == "nae3sat-vertex-gap2") {
        out = reduce_nae3sat_to_vertex_gap2(parse_dimacs_cnf(slurp(input_file), FormulaMode::Nae));
    } else if (reduction == "kcol-edge-gap") {
        out = reduce_kcol_to_edge_gap_k(parse_graph(slurp(input_file)), k);
    } else if (reduction == "3col-vertex-product") {
        out = reduce_3col_to_vertex_product_k(parse_graph(slurp(input_file)), k);
    } else if (reduction == "3col-degree-label") {
        out = reduce_3col_to_degree_label_k(parse_graph(slurp(input_file)), k);
    } else if (reduction == "class1-vertex-max3") {
        out = reduce_class1_to_vertex_max3(parse_graph(slurp(input_file)));
    } else if (reduction == "lift-max") {
        Graph lifted = lift_max_labeling(parse_graph(slurp(input_file)));
        out.graph = lifted;
        out.name = "lift-max";
    } else {
        throw std::runtime_error("unknown reduction '" + reduction + "'");
    }
    (void)mode_arg;
    spill(out_prefix + ".graph", serialize_graph(out.graph));
    spill(out_prefix + ".json", reduction_sidecar_json(out).dump(2) + "\n");
    std::cerr << "wrote " << out_prefix << ".graph (" << out.graph.vertex_count() << " vertices, "
              << out.graph.edge_count() << " edges) and " << out_prefix << ".json\n";
    return 0;
}

int cmd_tsv(const std::string& graph_file) {
    Graph g = parse_graph(slurp(graph_file));
    TsvResult res = tsv_find(g);
    json j;
    j["found"] = res.found;
    auto& arr = j["tsv"] = json::array();
    for (int v : res.tsv) arr.push_back(v + 1);
    if (res.found) j["note"] = "no vertex-labeling by maximum exists";
    std::cout << j.dump(2) << '\n';
    return res.found ? 0 : 1;
}

int cmd_experiment(int n, double p, int trials, uint64_t seed, bool verbose) {
    if (!(p > 0.0 && p < 1.0)) throw std::runtime_error("experiment: need 0 < p < 1");
    ExperimentReport report = run_gnp_experiment(n, p, trials, seed);
    std::cout << experiment_to_json(report).dump(2) << '\n';
    if (verbose) {
        std::cerr << "n=" << n << " p=" << p << " trials=" << trials << " seed=" << seed << '\n'
                  << "successes " << report.successes << "/" << report.trials << " ("
                  << (report.trials ? 100.0 * report.successes / report.trials : 0.0) << "%) in "
                  << report.wall_ms << " ms\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"proper labeling toolkit"};
    app.require_subcommand(1);
    bool verbose = false;
    app.add_flag("--verbose", verbose, "human-readable summary on stderr");

    std::string graph_file, labeling_file, rule_arg, method = "auto", family, input_file;
    std::string mode_arg = "sat", reduction, out_file, out_prefix = "reduction";
    int labels = 2, n = 0, root = 1, k = 3, trials = 100;
    long long budget = 100'000'000;
    double p = 0.5;
    uint64_t seed = 1;

    auto* verify = app.add_subcommand("verify", "check a labeling against a rule");
    verify->add_option("graph", graph_file)->required();
    verify->add_option("labeling", labeling_file)->required();
    verify->add_option("--rule", rule_arg)->required();

    auto* solve = app.add_subcommand("solve", "decide labelability from N_k");
    solve->add_option("graph", graph_file)->required();
    solve->add_option("--rule", rule_arg)->required();
    solve->add_option("--labels", labels)->required();
    solve->add_option("--method", method)->check(CLI::IsMember({"auto", "brute", "fast"}));
    solve->add_option("--budget", budget);

    auto* construct = app.add_subcommand("construct", "emit a guaranteed labeling");
    construct->add_option("--family", family)->required();
    construct->add_option("graph", graph_file);
    construct->add_option("-n", n);
    construct->add_option("--root", root);
    construct->add_option("--out", out_file);

    auto* reduce = app.add_subcommand("reduce", "emit a reduction graph + sidecar");
    reduce->add_option("--reduction", reduction)->required();
    reduce->add_option("input", input_file)->required();
    reduce->add_option("--mode", mode_arg);
    reduce->add_option("-k", k);
    reduce->add_option("--out", out_prefix);

    auto* tsv = app.add_subcommand("tsv", "search for triangular-structured vertices");
    tsv->add_option("graph", graph_file)->required();

    auto* experiment = app.add_subcommand("experiment-gnp", "random-graph prime labeling trial");
    experiment->add_option("--n", n)->required();
    experiment->add_option("--p", p)->required();
    experiment->add_option("--trials", trials)->required();
    experiment->add_option("--seed", seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(graph_file, labeling_file, rule_arg);
        if (solve->parsed()) return cmd_solve(graph_file, rule_arg, labels, method, budget);
        if (construct->parsed()) return cmd_construct(family, graph_file, n, root, out_file);
        if (reduce->parsed()) return cmd_reduce(reduction, input_file, mode_arg, k, out_prefix);
        if (tsv->parsed()) return cmd_tsv(graph_file);
        if (experiment->parsed()) return cmd_experiment(n, p, trials, seed, verbose);
    } catch (const BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
