#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "graphrefute/verifier.hpp"

namespace graphrefute {

// [[u, v], ...] in canonical ascending order.
nlohmann::json edge_list_json(const Graph& g);

// [[u, v], ...] with v = -1 for "attach a new leaf to u".
nlohmann::json move_sequence_json(const std::vector<Move>& moves);

nlohmann::json certificate_json(const Certificate& c);

nlohmann::json breakdown_json(const ScoreBreakdown& b);

struct RunReport {
    int conjecture = 0;
    std::string algorithm;
    std::optional<int> level;
    std::uint64_t seed = 0;
    double elapsed_ms = 0.0;
    double best_score = 0.0;
    bool certified = false;
    double margin = 0.0;
    Graph graph;
    std::vector<Move> moves;
};

// Exactly the fields conjecture, algorithm, level, seed, elapsed_ms,
// best_score, certified, margin, edge_list, move_sequence.
nlohmann::json run_report_json(const RunReport& r);

}  // namespace graphrefute
