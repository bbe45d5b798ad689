#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "proplabel/graph.hpp"

#include "json.hpp"

namespace proplabel {

/// The eight induced-coloring semantics. Edge* rules label edges,
/// Vertex* rules label vertices.
enum class Rule {
    EdgeSum,
    VertexSum,
    EdgeProduct,
    VertexProduct,
    EdgeGap,
    VertexGap,
    VertexDegree,
    VertexMaximum,
};

enum class LabelKind { Vertex, Edge };

LabelKind labeled_elements(Rule rule);
const char* rule_name(Rule rule);
std::optional<Rule> rule_from_name(const std::string& name);

/// Assignment of positive integer labels to all vertices or all edges of a
/// graph. Edge values follow the graph's sorted edge order.
struct Labeling {
    LabelKind kind = LabelKind::Vertex;
    std::vector<long long> values;
};

/// Exact induced color. Sum/gap/degree/maximum colors fit in 64 bits;
/// product colors are kept in factored form so that neighborhoods of any
/// size compare exactly.
class Color {
public:
    Color() = default;
    static Color scalar(long long v);
    /// Exact product of positive integers.
    static Color product(std::span<const long long> factors);

    bool operator==(const Color& o) const;
    bool operator!=(const Color& o) const { return !(*this == o); }

    /// Decimal rendering (exact, arbitrary size for factored colors).
    std::string str() const;

private:
    long long scalar_ = 0;
    std::vector<std::pair<long long, int>> factors_; // sorted (prime, exponent)
    bool factored_ = false;
};

struct InducedColoring {
    std::vector<Color> colors; // per vertex
};

/// c(v) per rule. Gap rules: c=1 at degree 0, the unique incident label at
/// degree 1, max-min otherwise. Empty sums are 0, empty products 1, and an
/// isolated vertex under VertexMaximum gets 0.
InducedColoring induced_coloring(const Graph& g, Rule rule, const Labeling& f);

struct Violation {
    Edge edge;
    Color color; // the shared color c(u) == c(v)
};

/// nullopt means proper; otherwise the lexicographically smallest edge
/// whose endpoints share a color.
std::optional<Violation> verify_proper(const Graph& g, Rule rule, const Labeling& f);

bool is_proper(const Graph& g, Rule rule, const Labeling& f);

/// The k of N_k actually used. Throws on an empty labeling.
long long max_label_used(const Labeling& f);

/// JSON form: {"kind":"vertex"|"edge","labels":[{"v":i,"f":k}...]} or
/// [{"u":i,"v":j,"f":k}...], 1-based in files.
nlohmann::json labeling_to_json(const Graph& g, const Labeling& f);
Labeling labeling_from_json(const Graph& g, const nlohmann::json& j);

} // namespace proplabel
