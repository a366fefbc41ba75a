#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphrefute/graph.hpp"
#include "graphrefute/invariants.hpp"
#include "graphrefute/spectral.hpp"

namespace graphrefute {

// Every score is oriented so that a positive value means the graph violates
// the conjectured inequality.

// sqrt(n-1) + 1 - lambda1(A) - mu. Needs a connected graph with n >= 3.
double score_conj1(const Graph& g);

// -proximity - lambda_{floor(2D/3)}(distance matrix). Needs connected, n >= 4.
double score_conj2(const Graph& g);

// floor(2D/3), raised to 1 when D = 1.
std::size_t conj2_rank(std::size_t diameter);

// -proximity - lambda'_{2D}, with lambda' the 3x interpolated distance
// spectrum. Needs connected, n >= 4.
double eval_conj2(const Graph& g);

// Peak positions of the characteristic polynomial coefficients of a tree.
//
//   a_k     coefficients of det(A - xI); nonzero only for k = n - 2j.
//   delta_k coefficients of det(D - xI).
//   d_k     2^k |delta_k| / 2^(n-2) for k = 0..n-2.
//
// Conventions: p_d is the 0-based argmax of d_k; p_a is the degree k of the
// largest |a_k| among nonzero coefficients and p_a_rank its 0-based position
// in nonzero_positions (ascending degree). Ties go to the lowest index. The
// compared positions are p_a_rank / nonzero_count and 1 - p_d / (n - 2).
struct PeakReport {
    CharPoly adjacency;
    CharPoly distance;
    std::vector<Rational> normalized;
    std::size_t p_d = 0;
    std::vector<std::size_t> nonzero_positions;
    std::size_t p_a = 0;
    std::size_t p_a_rank = 0;
    std::size_t nonzero_count = 0;
    Rational adjacency_position;
    Rational distance_position;
    Rational gap;

    bool peaks_differ() const { return gap != 0; }
};

enum class PolyRoute { modular, faddeev_leverrier };

// Throws GraphError unless the input is a tree on at least 3 vertices.
PeakReport peak_report(const Graph& tree, PolyRoute route = PolyRoute::modular);

// |p_a_rank / nonzero_count - (1 - p_d / (n - 2))|; positive iff the peaks sit
// at different normalized positions.
double score_conj3(const Graph& tree);

// lambda2(A) - harmonic index. Needs connected, n >= 2.
double score_conj4(const Graph& g);

struct Ingredient {
    std::string name;
    double value = 0.0;
    std::string exact;  // exact integer or fraction when one exists
};

struct ScoreBreakdown {
    int conjecture = 0;
    double score = 0.0;
    std::vector<Ingredient> ingredients;
};

// Score plus every quantity entering it. Throws on precondition violations.
ScoreBreakdown explain_score(int conjecture, const Graph& g);

struct ProblemOverrides {
    std::optional<std::size_t> target;
    std::optional<TerminalKind> terminal_kind;
    std::optional<GraphClass> graph_class;
    std::optional<std::size_t> max_degree;
    std::optional<std::size_t> max_vertices;
};

// One conjecture as a search problem over edge-by-edge graph construction.
// Scores of states failing a conjecture's preconditions read as -infinity.
class ConjectureProblem {
public:
    using State = BuildState;
    using Move = graphrefute::Move;

    ConjectureProblem(int id, BuildModel model);

    int id() const { return id_; }
    const BuildModel& model() const { return model_; }
    std::string description() const;

    State root() const { return root_state(model_); }
    std::vector<Move> legal_moves(const State& s) const { return graphrefute::legal_moves(s); }
    State play(const State& s, const Move& m) const { return apply_move(s, m); }
    bool is_terminal(const State& s) const { return graphrefute::is_terminal(s); }
    double score(const State& s) const { return score_graph(s.graph); }
    double evaluate(const State& s) const { return evaluate_graph(s.graph); }
    std::uint64_t move_code(const Move& m) const { return m.code(); }
    std::uint64_t state_key(const State& s) const;

    double score_graph(const Graph& g) const;
    double evaluate_graph(const Graph& g) const;

private:
    int id_;
    BuildModel model_;
};

// Defaults: 1 trees on 19 vertices; 2 trees on 203 vertices, evaluated with
// eval_conj2; 3 trees on 31 vertices; 4 connected graphs with 8 edges on at
// most 7 vertices. Throws std::invalid_argument for an unknown id.
ConjectureProblem make_problem(int id, const ProblemOverrides& overrides = {});

}  // namespace graphrefute
