#include "proplabel/labeling.hpp"

#include <algorithm>
#include <map>

namespace proplabel {

LabelKind labeled_elements(Rule rule) {
    switch (rule) {
    case Rule::EdgeSum:
    case Rule::EdgeProduct:
    case Rule::EdgeGap:
        return LabelKind::Edge;
    default:
        return LabelKind::Vertex;
    }
}

const char* rule_name(Rule rule) {
    switch (rule) {
    case Rule::EdgeSum: return "edge-sum";
    case Rule::VertexSum: return "vertex-sum";
    case Rule::EdgeProduct: return "edge-product";
    case Rule::VertexProduct: return "vertex-product";
    case Rule::EdgeGap: return "edge-gap";
    case Rule::VertexGap: return "vertex-gap";
    case Rule::VertexDegree: return "vertex-degree";
    case Rule::VertexMaximum: return "vertex-maximum";
    }
    return "?";
}

std::optional<Rule> rule_from_name(const std::string& name) {
    for (Rule r : {Rule::EdgeSum, Rule::VertexSum, Rule::EdgeProduct, Rule::VertexProduct,
                   Rule::EdgeGap, Rule::VertexGap, Rule::VertexDegree, Rule::VertexMaximum})
        if (name == rule_name(r)) return r;
    return std::nullopt;
}

namespace {

std::vector<std::pair<long long, int>> factorize(long long v) {
    std::vector<std::pair<long long, int>> out;
    for (long long p = 2; p * p <= v; ++p) {
        if (v % p) continue;
        int e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (v > 1) out.emplace_back(v, 1);
    return out;
}

} // namespace

Color Color::scalar(long long v) {
    Color c;
    c.scalar_ = v;
    return c;
}

Color Color::product(std::span<const long long> factors) {
    std::map<long long, int> exps;
    for (long long f : factors) {
        if (f < 1) throw std::invalid_argument("color: nonpositive factor");
        for (auto [p, e] : factorize(f)) exps[p] += e;
    }
    Color c;
    c.factored_ = true;
    c.factors_.assign(exps.begin(), exps.end());
    return c;
}

bool Color::operator==(const Color& o) const {
    if (factored_ == o.factored_)
        return factored_ ? factors_ == o.factors_ : scalar_ == o.scalar_;
    const Color& f = factored_ ? *this : o;
    const Color& s = factored_ ? o : *this;
    if (s.scalar_ < 1) return false;
    return f.factors_ == factorize(s.scalar_);
}

std::string Color::str() const {
    if (!factored_) return std::to_string(scalar_);
    // schoolbook decimal of prod p^e, base 1e9 limbs
    std::vector<uint64_t> limbs{1};
    auto mul = [&limbs](uint64_t m) {
        uint64_t carry = 0;
        for (auto& limb : limbs) {
            uint64_t x = limb * m + carry;
            limb = x % 1000000000ull;
            carry = x / 1000000000ull;
        }
        while (carry) {
            limbs.push_back(carry % 1000000000ull);
            carry /= 1000000000ull;
        }
    };
    for (auto [p, e] : factors_)
        for (int i = 0; i < e; ++i) mul(static_cast<uint64_t>(p));
    std::string s = std::to_string(limbs.back());
    for (auto it = limbs.rbegin() + 1; it != limbs.rend(); ++it) {
        std::string part = std::to_string(*it);
        s += std::string(9 - part.size(), '0') + part;
    }
    return s;
}

namespace {

void check_labeling(const Graph& g, Rule rule, const Labeling& f) {
    if (f.kind != labeled_elements(rule))
        throw std::invalid_argument("labeling: element kind does not match rule");
    size_t want = f.kind == LabelKind::Edge ? g.edges().size()
                                            : static_cast<size_t>(g.vertex_count());
    if (f.values.size() != want)
        throw std::invalid_argument("labeling: expected " + std::to_string(want) +
                                    " labels, got " + std::to_string(f.values.size()));
    for (long long v : f.values)
        if (v < 1) throw std::invalid_argument("labeling: labels must be positive");
}

} // namespace

InducedColoring induced_coloring(const Graph& g, Rule rule, const Labeling& f) {
    check_labeling(g, rule, f);
    const int n = g.vertex_count();
    InducedColoring out;
    out.colors.resize(n);

    // labels incident to v, in the order that rule reads them
    auto incident = [&](int v) {
        std::vector<long long> vals;
        if (labeled_elements(rule) == LabelKind::Edge) {
            for (int u : g.neighbors(v)) vals.push_back(f.values[g.edge_index(u, v)]);
        } else {
            for (int u : g.neighbors(v)) vals.push_back(f.values[u]);
        }
        return vals;
    };

    for (int v = 0; v < n; ++v) {
        std::vector<long long> vals = incident(v);
        switch (rule) {
        case Rule::EdgeSum:
        case Rule::VertexSum: {
            long long s = 0;
            for (long long x : vals) s += x;
            out.colors[v] = Color::scalar(s);
            break;
        }
        case Rule::EdgeProduct:
        case Rule::VertexProduct:
            out.colors[v] = Color::product(vals);
            break;
        case Rule::EdgeGap:
        case Rule::VertexGap: {
            if (vals.empty())
                out.colors[v] = Color::scalar(1);
            else if (vals.size() == 1)
                out.colors[v] = Color::scalar(vals[0]);
            else {
                auto [mn, mx] = std::minmax_element(vals.begin(), vals.end());
                out.colors[v] = Color::scalar(*mx - *mn);
            }
            break;
        }
        case Rule::VertexDegree:
            out.colors[v] = Color::scalar(f.values[v] * g.degree(v));
            break;
        case Rule::VertexMaximum:
            out.colors[v] = Color::scalar(vals.empty() ? 0
                                                       : *std::max_element(vals.begin(), vals.end()));
            break;
        }
    }
    return out;
}

std::optional<Violation> verify_proper(const Graph& g, Rule rule, const Labeling& f) {
    InducedColoring c = induced_coloring(g, rule, f);
    for (const auto& e : g.edges())
        if (c.colors[e.first] == c.colors[e.second]) return Violation{e, c.colors[e.first]};
    return std::nullopt;
}

bool is_proper(const Graph& g, Rule rule, const Labeling& f) {
    return !verify_proper(g, rule, f).has_value();
}

long long max_label_used(const Labeling& f) {
    if (f.values.empty()) throw std::invalid_argument("max_label_used: empty labeling");
    return *std::max_element(f.values.begin(), f.values.end());
}

nlohmann::json labeling_to_json(const Graph& g, const Labeling& f) {
    nlohmann::json j;
    j["kind"] = f.kind == LabelKind::Edge ? "edge" : "vertex";
    auto& labels = j["labels"] = nlohmann::json::array();
    if (f.kind == LabelKind::Edge) {
        for (size_t i = 0; i < f.values.size(); ++i) {
            const auto& [u, v] = g.edges()[i];
            labels.push_back({{"u", u + 1}, {"v", v + 1}, {"f", f.values[i]}});
        }
    } else {
        for (size_t i = 0; i < f.values.size(); ++i)
            labels.push_back({{"v", static_cast<int>(i) + 1}, {"f", f.values[i]}});
    }
    return j;
}

Labeling labeling_from_json(const Graph& g, const nlohmann::json& j) {
    Labeling f;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "edge")
        f.kind = LabelKind::Edge;
    else if (kind == "vertex")
        f.kind = LabelKind::Vertex;
    else
        throw std::invalid_argument("labeling json: kind must be 'vertex' or 'edge'");

    size_t count = f.kind == LabelKind::Edge ? g.edges().size()
                                             : static_cast<size_t>(g.vertex_count());
    f.values.assign(count, 0);
    std::vector<char> seen(count, 0);
    for (const auto& item : j.at("labels")) {
        long long val = item.at("f").get<long long>();
        if (val < 1) throw std::invalid_argument("labeling json: labels must be positive");
        int idx;
        if (f.kind == LabelKind::Edge) {
            int u = item.at("u").get<int>() - 1;
            int v = item.at("v").get<int>() - 1;
            idx = (u >= 0 && u < g.vertex_count() && v >= 0 && v < g.vertex_count())
                      ? g.edge_index(u, v)
                      : -1;
            if (idx < 0)
                throw std::invalid_argument("labeling json: no such edge {" +
                                            std::to_string(u + 1) + "," + std::to_string(v + 1) + "}");
        } else {
            idx = item.at("v").get<int>() - 1;
            if (idx < 0 || idx >= g.vertex_count())
                throw std::invalid_argument("labeling json: vertex out of range");
        }
        if (seen[idx]) throw std::invalid_argument("labeling json: duplicate element");
        seen[idx] = 1;
        f.values[idx] = val;
    }
    if (!std::all_of(seen.begin(), seen.end(), [](char c) { return c; }))
        throw std::invalid_argument("labeling json: missing element label");
    return f;
}

} // namespace proplabel
