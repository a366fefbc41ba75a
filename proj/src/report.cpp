#include "graphrefute/report.hpp"

#include <cmath>

namespace graphrefute {

namespace {

// JSON has no infinities; scores of dead ends are reported as null.
nlohmann::json number_or_null(double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr); }

const char* matrix_name(MatrixKind k) {
    switch (k) {
        case MatrixKind::adjacency:
            return "adjacency";
        case MatrixKind::distance:
            return "distance";
        default:
            return "other";
    }
}

}  // namespace

nlohmann::json edge_list_json(const Graph& g) {
    auto out = nlohmann::json::array();
    for (const auto& e : g.sorted_edges()) {
        out.push_back({e.u, e.v});
    }
    return out;
}

nlohmann::json move_sequence_json(const std::vector<Move>& moves) {
    auto out = nlohmann::json::array();
    for (const auto& m : moves) {
        out.push_back({static_cast<std::int64_t>(m.u), m.adds_leaf() ? std::int64_t{-1} : std::int64_t{m.v}});
    }
    return out;
}

nlohmann::json breakdown_json(const ScoreBreakdown& b) {
    nlohmann::json ingredients = nlohmann::json::object();
    for (const auto& i : b.ingredients) {
        nlohmann::json item = {{"value", number_or_null(i.value)}};
        if (!i.exact.empty()) {
            item["exact"] = i.exact;
        }
        ingredients[i.name] = item;
    }
    return {{"conjecture", b.conjecture}, {"score", number_or_null(b.score)}, {"ingredients", ingredients}};
}

nlohmann::json certificate_json(const Certificate& c) {
    nlohmann::json eig = nlohmann::json::array();
    for (const auto& e : c.eigenvalues) {
        eig.push_back({{"name", e.name},
                       {"matrix", matrix_name(e.matrix)},
                       {"rank", e.certificate.rank},
                       {"value", e.certificate.value},
                       {"residual", e.certificate.residual},
                       {"bound", e.certificate.bound}});
    }
    ScoreBreakdown b{c.conjecture, c.raw_score, c.ingredients};
    return {{"conjecture", c.conjecture},
            {"n", c.graph.vertex_count()},
            {"edge_list", edge_list_json(c.graph)},
            {"raw_score", number_or_null(c.raw_score)},
            {"error_budget", c.error_budget},
            {"margin", number_or_null(c.margin())},
            {"certified", c.certified},
            {"ingredients", breakdown_json(b)["ingredients"]},
            {"eigenvalues", eig}};
}

nlohmann::json run_report_json(const RunReport& r) {
    return {{"conjecture", r.conjecture},
            {"algorithm", r.algorithm},
            {"level", r.level ? nlohmann::json(*r.level) : nlohmann::json(nullptr)},
            {"seed", r.seed},
            {"elapsed_ms", r.elapsed_ms},
            {"best_score", number_or_null(r.best_score)},
            {"certified", r.certified},
            {"margin", number_or_null(r.margin)},
            {"edge_list", edge_list_json(r.graph)},
            {"move_sequence", move_sequence_json(r.moves)}};
}

}  // namespace graphrefute
