#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "proplabel/formula.hpp"
#include "proplabel/graph.hpp"
#include "proplabel/labeling.hpp"
#include "proplabel/solvers.hpp"

#include "json.hpp"

namespace proplabel {

/// Generated graph plus the correspondence needed to certify a reduction
/// round trip. For formula sources var_map/clause_map are keyed by the
/// 1-based variable / clause index; for graph sources var_map is keyed by
/// the 0-based source vertex.
struct ReductionOutput {
    Graph graph;
    std::string name;
    std::map<int, std::vector<int>> var_map;
    std::map<int, int> clause_map;
    nlohmann::json meta;
};

nlohmann::json reduction_sidecar_json(const ReductionOutput& out);

/// A candidate gadget together with the property all of its proper
/// labelings must satisfy. check_gadget enumerates every labeling of the
/// gadget plus one stub edge per port entry (stub far ends unconstrained,
/// as are `unchecked_vertices`), evaluates `forall` on each, and requires
/// every predicate in `exists` to hold somewhere.
struct GadgetSpec {
    std::string description;
    Graph graph;
    std::vector<int> ports; // may repeat a vertex to attach several stubs
    Rule rule = Rule::EdgeSum;
    int max_label = 2;
    bool add_port_stubs = true;
    std::vector<int> unchecked_vertices;

    /// Arguments: augmented graph, labeling over it, stub edge indices
    /// (aligned with `ports`).
    using Predicate =
        std::function<bool(const Graph&, const Labeling&, const std::vector<int>&)>;
    Predicate forall;               // may be null (always true)
    std::vector<Predicate> exists;  // each must be witnessed by some labeling
};

struct GadgetCheckResult {
    bool pass = false;
    std::string detail;
    std::optional<Labeling> counterexample; // on a forall violation
};

GadgetCheckResult check_gadget(const GadgetSpec& spec, const SearchBudget& budget = {});

// ---- default gadgets (the figures they mirror are not part of the spec;
// ---- these are property-checked candidates) ----

/// Link gadget for the edge-sum reduction: K4 minus an edge with a tail
/// edge at both ends. In every internally proper EdgeSum-{1,2} labeling
/// the two tail edges carry the same label.
GadgetSpec default_edge_sum_link_gadget();

/// Cycle of `cycle_len` link gadgets with one stub per shared port; in
/// every internally proper labeling all stubs agree, and both uniform
/// values occur.
GadgetSpec edge_sum_variable_cycle_spec(int cycle_len);

/// Variable gadget for the edge-product reduction: forces its three stub
/// edges to carry equal labels.
GadgetSpec default_edge_product_variable_gadget();

/// Clause gadget for the edge-product reduction: forces the number of
/// 2-labeled stubs into {1,3}; the all-2 case dies against the variable
/// side when assembled.
GadgetSpec default_edge_product_clause_gadget();

// ---- reductions ----

/// Monotone NAE-3SAT to a 3-regular graph that is EdgeSum-{1,2}-labelable
/// iff the formula is NAE-satisfiable. Clauses containing a variable that
/// occurs only once are duplicated first.
ReductionOutput reduce_nae3sat_to_edge_sum(const Formula& phi,
                                           const GadgetSpec* link_gadget = nullptr);

/// EdgeSum-{1,2} labeling of the reduced graph from a NAE assignment.
Labeling nae3sat_edge_sum_certificate(const Formula& phi, const ReductionOutput& out,
                                      const std::vector<bool>& gamma);

/// Cubic monotone 1-in-3 SAT to a graph that is EdgeProduct-{1,2}-
/// labelable iff the instance has an exactly-one assignment.
ReductionOutput reduce_1in3_to_edge_product(const Formula& phi,
                                            const GadgetSpec* variable_gadget = nullptr,
                                            const GadgetSpec* clause_gadget = nullptr);

Labeling one_in3_edge_product_certificate(const Formula& phi, const ReductionOutput& out,
                                          const std::vector<bool>& gamma);

/// Auxiliary gadget: triangle z1 z2 z3 with 2i matched pendant vertices
/// on z1 and z2 and 2i-2 on z3. 6i+1 vertices; z3 is the attachment
/// point.
struct HGadget {
    Graph graph;
    int z1 = 0, z2 = 1, z3 = 2;
};
HGadget build_H_c_i(int i);

/// Monotone 1-in-3 SAT to a graph that is VertexProduct-{1,2}-labelable
/// iff the instance is satisfiable (one clause vertex plus H_3, H_5, H_6
/// per clause).
ReductionOutput reduce_1in3_to_vertex_product(const Formula& phi);

Labeling one_in3_vertex_product_certificate(const Formula& phi, const ReductionOutput& out,
                                            const std::vector<bool>& gamma);

/// alpha(k): the largest subset of {m*n : m,n <= k} with no pairwise
/// ratio expressible as m/n with m,n <= k. Exhaustive; 3 <= k <= 12.
struct AlphaResult {
    int value = 0;
    std::vector<long long> witness; // lexicographically least maximum set
};
AlphaResult alpha_k(int k);

/// 3-colorability of a connected graph to VertexProduct from N_k: join a
/// K_{alpha(k)-3}, blow every vertex into a k-clique, then hang two
/// extra vertices per blown-up column.
ReductionOutput reduce_3col_to_vertex_product_k(const Graph& g, int k);

/// Planar 3-SAT (type 2, width-3 clauses, distinct variables per clause)
/// to EdgeGap from {1,2}: a C4 per variable, a P4 per clause, one C6
/// anchor.
ReductionOutput reduce_3sat2_to_edge_gap2(const Formula& phi);

/// NAE-3SAT to VertexGap from {1,2}: same skeleton with the clause path
/// replaced by a single clause vertex.
ReductionOutput reduce_nae3sat_to_vertex_gap2(const Formula& phi);

/// k-colorability (k >= 3) of a connected graph with more than two
/// vertices to EdgeGap from N_k: a pendant path v' v'' v''' per vertex.
ReductionOutput reduce_kcol_to_edge_gap_k(const Graph& g, int k);

/// EdgeGap-N_k labeling of the reduced graph from a proper k-coloring
/// (colors 1..k) of the source graph.
Labeling kcol_edge_gap_certificate(const Graph& g, int k, const std::vector<int>& coloring,
                                   const ReductionOutput& out);

/// 3-colorability of a 4-regular graph to VertexDegree from N_k, k >= 4.
/// k == 3 is a documented passthrough (the gadget set is empty).
ReductionOutput reduce_3col_to_degree_label_k(const Graph& g, int k);

/// Chromatic-index classification of a 3-regular graph to VertexMaximum
/// from N_3: two triangles per vertex, two adjacent vertices per edge.
ReductionOutput reduce_class1_to_vertex_max3(const Graph& g);

/// VertexMaximum-N_3 labeling of the reduced graph from a proper 3-edge-
/// coloring (colors 1..3) of the source graph.
Labeling class1_vertex_max3_certificate(const Graph& g, const std::vector<int>& edge_coloring,
                                        const ReductionOutput& out);

/// The lifting step: a new vertex joined to everything plus a pendant.
/// Preserves labelability with one extra label.
Graph lift_max_labeling(const Graph& g);

} // namespace proplabel
