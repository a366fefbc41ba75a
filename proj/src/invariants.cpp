#include "graphrefute/invariants.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace graphrefute {

IntMatrix adjacency_matrix(const Graph& g) {
    IntMatrix a(g.vertex_count());
    for (const auto& e : g.edges()) {
        a(e.u, e.v) = 1;
        a(e.v, e.u) = 1;
    }
    return a;
}

IntMatrix distance_matrix(const Graph& g) {
    const std::size_t n = g.vertex_count();
    IntMatrix d(n);
    std::vector<std::int64_t> dist(n);
    std::vector<Vertex> queue(n);
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::size_t head = 0;
        std::size_t tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            const Vertex u = queue[head++];
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    queue[tail++] = w;
                }
            }
        }
        if (tail != n) {
            throw GraphError("distance matrix of a disconnected graph");
        }
        for (std::size_t t = 0; t < n; ++t) {
            d(s, t) = dist[t];
        }
    }
    return d;
}

std::size_t diameter(const IntMatrix& distances) { return static_cast<std::size_t>(distances.max_entry()); }

std::size_t diameter(const Graph& g) { return diameter(distance_matrix(g)); }

Rational proximity(const IntMatrix& distances) {
    const std::size_t n = distances.size();
    if (n < 2) {
        throw GraphError("proximity needs at least two vertices");
    }
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::size_t u = 0; u < n; ++u) {
        std::int64_t total = 0;
        for (std::size_t v = 0; v < n; ++v) {
            total += distances(u, v);
        }
        best = std::min(best, total);
    }
    return Rational(best, static_cast<std::int64_t>(n - 1));
}

Rational proximity(const Graph& g) { return proximity(distance_matrix(g)); }

Rational harmonic_index(const Graph& g) {
    Rational h = 0;
    for (const auto& e : g.edges()) {
        h += Rational(1, static_cast<std::int64_t>(g.degree(e.u) + g.degree(e.v)));
    }
    return h;
}

namespace {

// Edmonds' blossom algorithm, O(V^3): grow alternating trees by BFS from each
// free vertex, contracting odd cycles through `base`.
class BlossomMatcher {
public:
    explicit BlossomMatcher(const Graph& g)
        : g_(g), n_(g.vertex_count()), match_(n_, kNone), parent_(n_), base_(n_), used_(n_), blossom_(n_) {}

    std::size_t run() {
        // Greedy warm start.
        for (Vertex u = 0; u < n_; ++u) {
            if (match_[u] != kNone) {
                continue;
            }
            for (Vertex w : g_.neighbors(u)) {
                if (match_[w] == kNone) {
                    match_[u] = w;
                    match_[w] = u;
                    break;
                }
            }
        }
        for (Vertex root = 0; root < n_; ++root) {
            if (match_[root] != kNone) {
                continue;
            }
            const Vertex end = find_path(root);
            Vertex v = end;
            while (v != kNone) {
                const Vertex pv = parent_[v];
                const Vertex ppv = match_[pv];
                match_[v] = pv;
                match_[pv] = v;
                v = ppv;
            }
        }
        std::size_t size = 0;
        for (Vertex u = 0; u < n_; ++u) {
            size += match_[u] != kNone && u < match_[u];
        }
        return size;
    }

private:
    static constexpr Vertex kNone = std::numeric_limits<Vertex>::max();

    Vertex lca(Vertex a, Vertex b) {
        std::vector<char> seen(n_, 0);
        while (true) {
            a = base_[a];
            seen[a] = 1;
            if (match_[a] == kNone) {
                break;
            }
            a = parent_[match_[a]];
        }
        while (true) {
            b = base_[b];
            if (seen[b]) {
                return b;
            }
            b = parent_[match_[b]];
        }
    }

    void mark_path(Vertex v, Vertex b, Vertex child) {
        while (base_[v] != b) {
            blossom_[base_[v]] = 1;
            blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    Vertex find_path(Vertex root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), kNone);
        for (Vertex i = 0; i < n_; ++i) {
            base_[i] = i;
        }
        used_[root] = 1;
        std::deque<Vertex> q{root};
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop_front();
            for (Vertex to : g_.neighbors(v)) {
                if (base_[v] == base_[to] || match_[v] == to) {
                    continue;
                }
                if (to == root || (match_[to] != kNone && parent_[match_[to]] != kNone)) {
                    const Vertex cur = lca(v, to);
                    std::fill(blossom_.begin(), blossom_.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (Vertex i = 0; i < n_; ++i) {
                        if (blossom_[base_[i]]) {
                            base_[i] = cur;
                            if (!used_[i]) {
                                used_[i] = 1;
                                q.push_back(i);
                            }
                        }
                    }
                } else if (parent_[to] == kNone) {
                    parent_[to] = v;
                    if (match_[to] == kNone) {
                        return to;
                    }
                    used_[match_[to]] = 1;
                    q.push_back(match_[to]);
                }
            }
        }
        return kNone;
    }

    const Graph& g_;
    Vertex n_;
    std::vector<Vertex> match_;
    std::vector<Vertex> parent_;
    std::vector<Vertex> base_;
    std::vector<char> used_;
    std::vector<char> blossom_;
};

}  // namespace

std::size_t matching_number(const Graph& g) { return BlossomMatcher(g).run(); }

std::size_t forest_matching_number(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> deg(n);
    std::vector<char> removed(n, 0);
    std::vector<Vertex> leaves;
    for (Vertex u = 0; u < n; ++u) {
        deg[u] = g.degree(u);
        if (deg[u] == 1) {
            leaves.push_back(u);
        }
    }
    std::size_t size = 0;
    auto remove = [&](Vertex x) {
        removed[x] = 1;
        for (Vertex w : g.neighbors(x)) {
            if (!removed[w] && --deg[w] == 1) {
                leaves.push_back(w);
            }
        }
    };
    while (!leaves.empty()) {
        const Vertex leaf = leaves.back();
        leaves.pop_back();
        if (removed[leaf] || deg[leaf] != 1) {
            continue;
        }
        Vertex mate = leaf;
        for (Vertex w : g.neighbors(leaf)) {
            if (!removed[w]) {
                mate = w;
            }
        }
        ++size;
        removed[leaf] = 1;
        remove(mate);
    }
    for (Vertex u = 0; u < n; ++u) {
        if (!removed[u] && deg[u] >= 2) {
            throw GraphError("forest matching oracle called on a graph with a cycle");
        }
    }
    return size;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace graphrefute
