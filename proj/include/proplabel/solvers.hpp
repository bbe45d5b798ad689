#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "proplabel/formula.hpp"
#include "proplabel/graph.hpp"
#include "proplabel/labeling.hpp"

namespace proplabel {

/// Node budget for exhaustive searches; one node per label assignment
/// tried. Exceeding it raises BudgetExceededError, never a wrong answer.
struct SearchBudget {
    long long max_nodes = 100'000'000;
};

class BudgetExceededError : public std::runtime_error {
public:
    explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an operation's structural precondition does not hold
/// (e.g. a bipartite-only decider on a non-bipartite graph).
class NotApplicableError : public std::runtime_error {
public:
    explicit NotApplicableError(const std::string& what) : std::runtime_error(what) {}
};

enum class SolveMethod { Brute, TwoSat, NaeAlgorithm1, NaeEdgeGap, Construction };
const char* method_name(SolveMethod m);

struct SolveOutcome {
    bool labelable = false;
    std::optional<Labeling> witness; // verified proper before return
    SolveMethod method = SolveMethod::Brute;
    std::string note; // fallbacks and other diagnostics
};

struct EnumerateOptions {
    /// Properness constraints touching these vertices are skipped
    /// (boundary vertices in gadget checks).
    std::vector<char> unchecked_vertex;
    SearchBudget budget;
};

/// Backtracking enumeration of all proper labelings from N_k, elements in
/// canonical order (edges lexicographic / vertices ascending), label
/// tuples in lexicographic order. A branch is cut as soon as two adjacent
/// finalized colors collide, so the first labeling visited is the
/// lexicographically least proper one. `visit` returns false to stop.
void enumerate_proper_labelings(const Graph& g, Rule rule, int max_label,
                                const std::function<bool(const Labeling&)>& visit,
                                const EnumerateOptions& opts = {});

/// Exhaustive decision: first proper labeling from N_k or a definite no.
SolveOutcome brute_force_decide(const Graph& g, Rule rule, int max_label,
                                const SearchBudget& budget = {});

/// Implication-graph strong connectivity; linear time.
std::optional<std::vector<bool>> solve_2sat(const Formula& phi);

/// Exact backtracking with unit-style pruning. Clauses with a variable in
/// both signs are dropped, duplicates collapse. If satisfiable, the
/// returned assignment has variable 1 true (complements are swapped in).
std::optional<std::vector<bool>> solve_nae(const Formula& phi, const SearchBudget& budget = {});

/// NAE-equisatisfiable 3-uniform formula. Width-2 clauses split with one
/// fresh link variable, wider clauses chain two-literal prefixes.
Formula wide_nae_to_3nae(const Formula& phi);

/// Vertex-labeling by degree from {1,2} via 2-SAT over one variable per
/// vertex (label 2 <=> true).
SolveOutcome degree_label_from_2(const Graph& g);

/// Vertex-labeling by gap from {1,2} for bipartite graphs: per component,
/// stars and tiny components are labeled directly, otherwise one NAE
/// clause per degree>=2 vertex of one side decides the component (both
/// orientations tried). Falls back to brute force when the degree>=2 core
/// of a component is disconnected.
SolveOutcome vertex_gap_algorithm1(const Graph& g, const SearchBudget& budget = {});

/// Edge-labeling by gap from {1,2} for connected bipartite graphs with
/// minimum degree two, by the same NAE encoding on either side.
SolveOutcome edge_gap_planar_bipartite(const Graph& g, const SearchBudget& budget = {});

/// Vertex set where every member lies in a triangle of the induced
/// subgraph and every edge leaving the set has a common neighbor inside.
/// Such a set certifies that no vertex-labeling by maximum exists.
struct TsvResult {
    bool found = false;
    std::vector<int> tsv; // sorted
};

/// Greatest-fixed-point elimination; the result is independent of the
/// scan order (an explicit order can be supplied for testing that).
TsvResult tsv_find(const Graph& g);
TsvResult tsv_find(const Graph& g, const std::vector<int>& scan_order);

} // namespace proplabel
