#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "proplabel/labeling.hpp"

using namespace proplabel;
using namespace testhelp;

namespace {

Labeling edge_labels(std::vector<long long> vals) { return {LabelKind::Edge, std::move(vals)}; }
Labeling vertex_labels(std::vector<long long> vals) {
    return {LabelKind::Vertex, std::move(vals)};
}

// K3 edge-gap fixture: f(v1v2)=4, f(v1v3)=1, f(v2v3)=2
Labeling k3_gap_fixture() { return edge_labels({4, 1, 2}); }

} // namespace

TEST_CASE("K3 gap fixture induces (3,2,1) and verifies proper") {
    Graph k3 = complete(3);
    auto c = induced_coloring(k3, Rule::EdgeGap, k3_gap_fixture());
    CHECK(c.colors[0] == Color::scalar(3));
    CHECK(c.colors[1] == Color::scalar(2));
    CHECK(c.colors[2] == Color::scalar(1));
    CHECK(!verify_proper(k3, Rule::EdgeGap, k3_gap_fixture()));
    CHECK(max_label_used(k3_gap_fixture()) == 4);
}

TEST_CASE("all-ones edge gap collapses at degree >= 2") {
    Graph k4 = complete(4);
    auto c = induced_coloring(k4, Rule::EdgeGap, edge_labels({1, 1, 1, 1, 1, 1}));
    for (int v = 0; v < 4; ++v) CHECK(c.colors[v] == Color::scalar(0));
}

TEST_CASE("C4 vertex maximum alternates") {
    Graph c4 = cycle(4);
    auto c = induced_coloring(c4, Rule::VertexMaximum, vertex_labels({1, 2, 1, 2}));
    CHECK(c.colors[0] == Color::scalar(2));
    CHECK(c.colors[1] == Color::scalar(1));
    CHECK(c.colors[2] == Color::scalar(2));
    CHECK(c.colors[3] == Color::scalar(1));
    CHECK(!verify_proper(c4, Rule::VertexMaximum, vertex_labels({1, 2, 1, 2})));
}

TEST_CASE("vertex degree examples") {
    Graph p3 = path(3);
    auto c = induced_coloring(p3, Rule::VertexDegree, vertex_labels({2, 2, 2}));
    CHECK(c.colors[0] == Color::scalar(2));
    CHECK(c.colors[1] == Color::scalar(4));
    CHECK(c.colors[2] == Color::scalar(2));
    CHECK(!verify_proper(p3, Rule::VertexDegree, vertex_labels({2, 2, 2})));

    // symmetric endpoints always collide on K2
    Graph k2 = complete(2);
    auto bad = verify_proper(k2, Rule::VertexDegree, vertex_labels({1, 1}));
    REQUIRE(bad.has_value());
    CHECK(bad->edge == Edge{0, 1});
}

TEST_CASE("violation reporting picks the smallest edge") {
    Graph c4 = cycle(4);
    // all degrees and labels equal: every edge violates, {0,1} is reported
    auto bad = verify_proper(c4, Rule::VertexDegree, vertex_labels({1, 1, 1, 1}));
    REQUIRE(bad.has_value());
    CHECK(bad->edge == Edge{0, 1});

    // P4 under vertex-sum with all ones collides exactly at the middle edge
    auto mid = verify_proper(path(4), Rule::VertexSum, vertex_labels({1, 1, 1, 1}));
    REQUIRE(mid.has_value());
    CHECK(mid->edge == Edge{1, 2});
}

TEST_CASE("special cases at low degree") {
    Graph lone(1, {});
    CHECK(induced_coloring(lone, Rule::VertexGap, vertex_labels({5})).colors[0] ==
          Color::scalar(1));
    CHECK(induced_coloring(lone, Rule::VertexMaximum, vertex_labels({5})).colors[0] ==
          Color::scalar(0));
    CHECK(induced_coloring(lone, Rule::VertexSum, vertex_labels({5})).colors[0] ==
          Color::scalar(0));
    CHECK(induced_coloring(lone, Rule::VertexProduct, vertex_labels({5})).colors[0] ==
          Color::scalar(1));

    Graph k2 = complete(2);
    auto c = induced_coloring(k2, Rule::EdgeGap, edge_labels({7}));
    CHECK(c.colors[0] == Color::scalar(7)); // degree one: the incident label
    CHECK(c.colors[1] == Color::scalar(7));
}

TEST_CASE("product colors are exact beyond 64 bits") {
    // star with 80 leaves labeled 3: center color is 3^80
    Graph s = star(80);
    std::vector<long long> vals(81, 3);
    vals[0] = 2;
    auto c = induced_coloring(s, Rule::VertexProduct, vertex_labels(vals));
    CHECK(c.colors[0].str() == "147808829414345923316083210206383297601");
    CHECK(c.colors[1] == Color::scalar(2)); // mixed comparison: factored vs scalar
}

TEST_CASE("gap rules are translation invariant at degree >= 2") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(7, 0.5, rng);
        std::uniform_int_distribution<long long> lab(1, 5);
        std::vector<long long> vals(g.edge_count());
        for (auto& x : vals) x = lab(rng);
        auto base = induced_coloring(g, Rule::EdgeGap, edge_labels(vals));
        std::vector<long long> shifted = vals;
        for (auto& x : shifted) x += 3;
        auto moved = induced_coloring(g, Rule::EdgeGap, edge_labels(shifted));
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) >= 2) CHECK(base.colors[v] == moved.colors[v]);
    }
}

TEST_CASE("sum and product labelings agree on 3-regular graphs over {1,2}") {
    std::mt19937_64 rng(5);
    for (const Graph& g : {complete(4), complete_bipartite(3, 3), prism(), petersen()}) {
        std::uniform_int_distribution<int> coin(1, 2);
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<long long> edge_vals(g.edge_count());
            for (auto& x : edge_vals) x = coin(rng);
            // 2^(f-1) maps {1,2} to itself
            bool sum_ok = !verify_proper(g, Rule::EdgeSum, edge_labels(edge_vals));
            bool prod_ok = !verify_proper(g, Rule::EdgeProduct, edge_labels(edge_vals));
            CHECK(sum_ok == prod_ok);

            std::vector<long long> vert_vals(g.vertex_count());
            for (auto& x : vert_vals) x = coin(rng);
            bool vsum = !verify_proper(g, Rule::VertexSum, vertex_labels(vert_vals));
            bool vprod = !verify_proper(g, Rule::VertexProduct, vertex_labels(vert_vals));
            CHECK(vsum == vprod);
        }
    }
}

TEST_CASE("labeling json round trip") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(7, 0.5, rng);
        std::uniform_int_distribution<long long> lab(1, 9);
        Labeling edge_lab{LabelKind::Edge, {}};
        for (int i = 0; i < g.edge_count(); ++i) edge_lab.values.push_back(lab(rng));
        Labeling vert_lab{LabelKind::Vertex, {}};
        for (int i = 0; i < g.vertex_count(); ++i) vert_lab.values.push_back(lab(rng));
        CHECK(labeling_from_json(g, labeling_to_json(g, edge_lab)).values == edge_lab.values);
        CHECK(labeling_from_json(g, labeling_to_json(g, vert_lab)).values == vert_lab.values);
    }
}

TEST_CASE("labeling error paths") {
    Graph p3 = path(3);
    CHECK_THROWS_AS(induced_coloring(p3, Rule::EdgeSum, vertex_labels({1, 1, 1})),
                    std::invalid_argument); // wrong kind
    CHECK_THROWS_AS(induced_coloring(p3, Rule::VertexSum, vertex_labels({1, 1})),
                    std::invalid_argument); // missing label
    CHECK_THROWS_AS(induced_coloring(p3, Rule::VertexSum, vertex_labels({1, 0, 1})),
                    std::invalid_argument); // nonpositive
    CHECK_THROWS_AS(max_label_used(Labeling{LabelKind::Vertex, {}}), std::invalid_argument);

    nlohmann::json j = {{"kind", "vertex"},
                        {"labels", {{{"v", 1}, {"f", 1}}, {{"v", 1}, {"f", 2}}}}};
    CHECK_THROWS_AS(labeling_from_json(path(2), j), std::invalid_argument); // duplicate
}

TEST_CASE("induced coloring ignores edge input order") {
    Graph a(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    Graph b(4, {{0, 3}, {2, 3}, {0, 1}, {2, 1}});
    CHECK(a == b); // canonical form makes order irrelevant
    Labeling f{LabelKind::Edge, {1, 2, 3, 4}};
    auto ca = induced_coloring(a, Rule::EdgeSum, f);
    auto cb = induced_coloring(b, Rule::EdgeSum, f);
    for (int v = 0; v < 4; ++v) CHECK(ca.colors[v] == cb.colors[v]);
}
