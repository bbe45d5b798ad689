#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "proplabel/graph.hpp"

#include "json.hpp"

namespace proplabel {

/// G(n,p) with a documented deterministic protocol: mt19937_64 seeded as
/// given, vertex pairs visited in lexicographic order, each pair drawing
/// one 53-bit uniform in [0,1) which admits the edge when < p.
Graph gnp_graph(int n, double p, uint64_t seed);

inline constexpr const char* kGnpGeneratorId = "mt19937_64/lex-pairs/53-bit-uniform";

struct ExperimentReport {
    int n = 0;
    double p = 0;
    int trials = 0;
    int successes = 0;
    uint64_t seed = 0;
    /// First collisions observed, at most three: {trial, u, v} (0-based).
    std::vector<std::array<int, 3>> failure_examples;
    double wall_ms = 0;
};

/// Runs `trials` independent G(n,p) draws (trial t uses seed+t), applies
/// the five-block prime labeling and tallies proper outcomes.
ExperimentReport run_gnp_experiment(int n, double p, int trials, uint64_t seed);

nlohmann::json experiment_to_json(const ExperimentReport& report);

} // namespace proplabel
