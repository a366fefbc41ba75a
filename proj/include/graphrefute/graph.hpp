#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace graphrefute {

using Vertex = std::uint32_t;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Undirected simple graph on vertices 0..n-1. Edges are stored once as (min, max)
// in insertion order; adjacency lists are kept in sync.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adjacency_(n) {}

    // Throws GraphError on self-loops, duplicates or out-of-range ids.
    static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex u) const { return adjacency_[u]; }
    std::size_t degree(Vertex u) const { return adjacency_[u].size(); }

    bool has_edge(Vertex u, Vertex v) const;
    bool is_connected() const;
    bool is_tree() const { return is_connected() && edge_count() + 1 == vertex_count(); }

    Vertex add_vertex();
    void add_edge(Vertex u, Vertex v);

    // Edges in ascending (u, v) order; two graphs are equal iff these match.
    std::vector<Edge> sorted_edges() const;

    // Relabels vertex i as perm[i].
    Graph relabeled(const std::vector<Vertex>& perm) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertex_count() == b.vertex_count() && a.sorted_edges() == b.sorted_edges();
    }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

// ---------------------------------------------------------------------------
// Construction state space

// A move links two existing vertices, or attaches a fresh leaf to `u` when `v`
// is kNewVertex.
struct Move {
    static constexpr Vertex kNewVertex = std::numeric_limits<Vertex>::max();

    Vertex u = 0;
    Vertex v = kNewVertex;

    static Move leaf(Vertex u) { return {u, kNewVertex}; }
    static Move link(Vertex a, Vertex b) { return a < b ? Move{a, b} : Move{b, a}; }

    bool adds_leaf() const { return v == kNewVertex; }

    // Stable across states, used as the policy key.
    std::uint64_t code() const { return (std::uint64_t{u} << 32) | std::uint64_t{v}; }

    friend bool operator==(const Move&, const Move&) = default;
};

std::string to_string(const Move& m);

enum class GraphClass { tree, connected_general };
enum class TerminalKind { vertex_count, edge_count };

struct BuildModel {
    GraphClass graph_class = GraphClass::tree;
    TerminalKind terminal_kind = TerminalKind::vertex_count;
    std::size_t target = 1;
    std::optional<std::size_t> max_degree;
    std::optional<std::size_t> max_vertices;
};

struct BuildState {
    Graph graph;
    BuildModel model;
    std::vector<Move> history;
};

BuildState root_state(const BuildModel& model);

// Ascending move-code order, so leaf moves of u precede links (u, w) only when
// their codes say so; the order is fixed for reproducible seeded runs.
std::vector<Move> legal_moves(const BuildState& state);

bool is_legal(const BuildState& state, const Move& move);

// Throws GraphError with a diagnostic when the move is not legal.
BuildState apply_move(const BuildState& state, const Move& move);
void apply_move_in_place(BuildState& state, const Move& move);

bool is_terminal(const BuildState& state);

BuildState replay(const BuildModel& model, const std::vector<Move>& moves);

}  // namespace graphrefute
