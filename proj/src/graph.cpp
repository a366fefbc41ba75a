#include "graphrefute/graph.hpp"

#include <algorithm>
#include <queue>

namespace graphrefute {

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (const auto& e : edges) {
        g.add_edge(e.u, e.v);
    }
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u >= vertex_count() || v >= vertex_count()) {
        return false;
    }
    const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
    const Vertex other = &a == &adjacency_[u] ? v : u;
    return std::find(a.begin(), a.end(), other) != a.end();
}

bool Graph::is_connected() const {
    const std::size_t n = vertex_count();
    if (n == 0) {
        return true;
    }
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : adjacency_[u]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

Vertex Graph::add_vertex() {
    adjacency_.emplace_back();
    return static_cast<Vertex>(adjacency_.size() - 1);
}

void Graph::add_edge(Vertex u, Vertex v) {
    if (u == v) {
        throw GraphError("self-loop on vertex " + std::to_string(u));
    }
    if (u >= vertex_count() || v >= vertex_count()) {
        throw GraphError("edge " + std::to_string(u) + "-" + std::to_string(v) + " references a missing vertex");
    }
    if (has_edge(u, v)) {
        throw GraphError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    edges_.push_back({std::min(u, v), std::max(u, v)});
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
}

std::vector<Edge> Graph::sorted_edges() const {
    auto out = edges_;
    std::sort(out.begin(), out.end());
    return out;
}

Graph Graph::relabeled(const std::vector<Vertex>& perm) const {
    if (perm.size() != vertex_count()) {
        throw GraphError("permutation size mismatch");
    }
    Graph g(vertex_count());
    for (const auto& e : edges_) {
        g.add_edge(perm[e.u], perm[e.v]);
    }
    return g;
}

std::string to_string(const Move& m) {
    return "(" + std::to_string(m.u) + "," + (m.adds_leaf() ? std::string("new") : std::to_string(m.v)) + ")";
}

BuildState root_state(const BuildModel& model) {
    if (model.target < 1) {
        throw GraphError("build target must be positive");
    }
    return BuildState{Graph(1), model, {}};
}

namespace {

bool below_degree_cap(const BuildState& s, Vertex u) {
    return !s.model.max_degree || s.graph.degree(u) < *s.model.max_degree;
}

bool may_add_vertex(const BuildState& s) {
    return !s.model.max_vertices || s.graph.vertex_count() < *s.model.max_vertices;
}

}  // namespace

std::vector<Move> legal_moves(const BuildState& state) {
    std::vector<Move> moves;
    if (is_terminal(state)) {
        return moves;
    }
    const auto& g = state.graph;
    const auto n = static_cast<Vertex>(g.vertex_count());
    const bool leaves = may_add_vertex(state);
    const bool links = state.model.graph_class == GraphClass::connected_general;
    std::vector<char> adjacent(n, 0);
    for (Vertex u = 0; u < n; ++u) {
        if (!below_degree_cap(state, u)) {
            continue;
        }
        if (links) {
            for (Vertex w : g.neighbors(u)) {
                adjacent[w] = 1;
            }
            for (Vertex v = u + 1; v < n; ++v) {
                if (!adjacent[v] && below_degree_cap(state, v)) {
                    moves.push_back({u, v});
                }
            }
            for (Vertex w : g.neighbors(u)) {
                adjacent[w] = 0;
            }
        }
        if (leaves) {
            moves.push_back(Move::leaf(u));
        }
    }
    return moves;
}

bool is_legal(const BuildState& state, const Move& move) {
    if (is_terminal(state)) {
        return false;
    }
    const auto& g = state.graph;
    if (move.u >= g.vertex_count() || !below_degree_cap(state, move.u)) {
        return false;
    }
    if (move.adds_leaf()) {
        return may_add_vertex(state);
    }
    return state.model.graph_class == GraphClass::connected_general && move.u < move.v &&
           move.v < g.vertex_count() && below_degree_cap(state, move.v) && !g.has_edge(move.u, move.v);
}

void apply_move_in_place(BuildState& state, const Move& move) {
    if (!is_legal(state, move)) {
        throw GraphError("illegal move " + to_string(move) + " at n=" + std::to_string(state.graph.vertex_count()) +
                         ", m=" + std::to_string(state.graph.edge_count()));
    }
    if (move.adds_leaf()) {
        const Vertex fresh = state.graph.add_vertex();
        state.graph.add_edge(move.u, fresh);
    } else {
        state.graph.add_edge(move.u, move.v);
    }
    state.history.push_back(move);
}

BuildState apply_move(const BuildState& state, const Move& move) {
    BuildState next = state;
    apply_move_in_place(next, move);
    return next;
}

bool is_terminal(const BuildState& state) {
    const std::size_t measure = state.model.terminal_kind == TerminalKind::vertex_count ? state.graph.vertex_count()
                                                                                        : state.graph.edge_count();
    return measure >= state.model.target;
}

BuildState replay(const BuildModel& model, const std::vector<Move>& moves) {
    BuildState s = root_state(model);
    for (const auto& m : moves) {
        apply_move_in_place(s, m);
    }
    return s;
}

}  // namespace graphrefute
