#include "proplabel/random_graph.hpp"

#include <chrono>
#include <random>

#include "proplabel/constructions.hpp"

namespace proplabel {

Graph gnp_graph(int n, double p, uint64_t seed) {
    if (n < 0) throw std::invalid_argument("gnp_graph: negative n");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gnp_graph: p must be in [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (x < p) edges.emplace_back(u, v);
        }
    return Graph(n, std::move(edges));
}

ExperimentReport run_gnp_experiment(int n, double p, int trials, uint64_t seed) {
    if (trials < 0) throw std::invalid_argument("run_gnp_experiment: negative trials");
    ExperimentReport report;
    report.n = n;
    report.p = p;
    report.trials = trials;
    report.seed = seed;
    auto start = std::chrono::steady_clock::now();
    for (int t = 0; t < trials; ++t) {
        Graph g = gnp_graph(n, p, seed + static_cast<uint64_t>(t));
        auto res = gnp_prime_labeling(g);
        if (!res.violation) {
            ++report.successes;
        } else if (report.failure_examples.size() < 3) {
            report.failure_examples.push_back(
                {t, res.violation->edge.first, res.violation->edge.second});
        }
    }
    report.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return report;
}

nlohmann::json experiment_to_json(const ExperimentReport& report) {
    nlohmann::json j;
    j["n"] = report.n;
    j["p"] = report.p;
    j["trials"] = report.trials;
    j["successes"] = report.successes;
    j["rate"] = report.trials ? static_cast<double>(report.successes) / report.trials : 0.0;
    j["seed"] = report.seed;
    j["generator"] = kGnpGeneratorId;
    j["wall_ms"] = report.wall_ms;
    auto& fails = j["failure_examples"] = nlohmann::json::array();
    for (const auto& [trial, u, v] : report.failure_examples)
        fails.push_back({{"trial", trial}, {"u", u + 1}, {"v", v + 1}});
    return j;
}

} // namespace proplabel
