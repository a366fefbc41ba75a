#pragma once

// Test-side oracles. Nothing here calls into the library's algorithms, so
// agreement between the two is evidence rather than tautology.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "graphrefute/graph.hpp"

namespace testing {

using graphrefute::Edge;
using graphrefute::Graph;
using graphrefute::Vertex;

inline std::string fixture_path(const std::string& name) {
    return std::string(GRAPHREFUTE_FIXTURE_DIR) + "/" + name;
}

inline std::string read_text(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Graph path_graph(std::size_t n) {
    Graph g(n);
    for (Vertex i = 0; i + 1 < n; ++i) {
        g.add_edge(i, i + 1);
    }
    return g;
}

inline Graph star_graph(std::size_t n) {
    Graph g(n);
    for (Vertex i = 1; i < n; ++i) {
        g.add_edge(0, i);
    }
    return g;
}

inline Graph complete_graph(std::size_t n) {
    Graph g(n);
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            g.add_edge(i, j);
        }
    }
    return g;
}

inline Graph cycle_graph(std::size_t n) {
    Graph g = path_graph(n);
    g.add_edge(0, static_cast<Vertex>(n - 1));
    return g;
}

// Uniform random labelled tree via a Pruefer sequence.
inline Graph random_tree(std::size_t n, std::mt19937_64& rng) {
    Graph g(n);
    if (n < 2) {
        return g;
    }
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    std::vector<Vertex> code(n - 2);
    for (auto& c : code) {
        c = pick(rng);
    }
    std::vector<int> deg(n, 1);
    for (auto c : code) {
        ++deg[c];
    }
    for (auto c : code) {
        for (Vertex leaf = 0; leaf < n; ++leaf) {
            if (deg[leaf] == 1) {
                g.add_edge(leaf, c);
                --deg[leaf];
                --deg[c];
                break;
            }
        }
    }
    Vertex a = 0;
    while (deg[a] != 1) {
        ++a;
    }
    Vertex b = a + 1;
    while (deg[b] != 1) {
        ++b;
    }
    g.add_edge(a, b);
    return g;
}

// A random tree plus each remaining pair with probability p.
inline Graph random_connected(std::size_t n, double p, std::mt19937_64& rng) {
    Graph g = random_tree(n, rng);
    std::bernoulli_distribution coin(p);
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if (!g.has_edge(i, j) && coin(rng)) {
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

inline std::vector<std::vector<int>> adjacency_table(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (const auto& e : g.edges()) {
        a[e.u][e.v] = a[e.v][e.u] = 1;
    }
    return a;
}

// Maximum matching by exhaustive search: the lowest free vertex is either left
// unmatched or matched to each free neighbour in turn.
inline int brute_matching(const std::vector<std::vector<int>>& a, std::uint32_t used, std::size_t from) {
    const std::size_t n = a.size();
    while (from < n && (used >> from & 1U)) {
        ++from;
    }
    if (from >= n) {
        return 0;
    }
    int best = brute_matching(a, used | (1U << from), from + 1);
    for (std::size_t j = from + 1; j < n; ++j) {
        if (a[from][j] && !(used >> j & 1U)) {
            best = std::max(best, 1 + brute_matching(a, used | (1U << from) | (1U << j), from + 1));
        }
    }
    return best;
}

inline int brute_matching(const Graph& g) { return brute_matching(adjacency_table(g), 0, 0); }

inline std::vector<std::vector<long>> floyd_warshall(const Graph& g) {
    const std::size_t n = g.vertex_count();
    const long inf = 1L << 40;
    std::vector<std::vector<long>> d(n, std::vector<long>(n, inf));
    for (std::size_t i = 0; i < n; ++i) {
        d[i][i] = 0;
    }
    for (const auto& e : g.edges()) {
        d[e.u][e.v] = d[e.v][e.u] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
            }
        }
    }
    return d;
}

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, descending.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                off += a[i][j] * a[i][j];
            }
        }
        if (off < 1e-30) {
            break;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) {
                    continue;
                }
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p];
                    const double akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k];
                    const double aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = a[i][i];
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

// Scores of the first, second and fourth conjectures from the oracles above
// alone: brute-force matching, Floyd-Warshall distances, Jacobi eigenvalues.
inline double oracle_score(int conjecture, const Graph& g) {
    const std::size_t n = g.vertex_count();
    const auto adj = adjacency_table(g);
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = adj[i][j];
        }
    }
    if (conjecture == 1) {
        return std::sqrt(static_cast<double>(n - 1)) + 1.0 - jacobi_eigenvalues(a)[0] - brute_matching(g);
    }
    if (conjecture == 4) {
        double hc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (adj[i][j]) {
                    double deg = 0.0;
                    for (std::size_t k = 0; k < n; ++k) {
                        deg += adj[i][k] + adj[j][k];
                    }
                    hc += 1.0 / deg;
                }
            }
        }
        return jacobi_eigenvalues(a)[1] - hc;
    }
    const auto d = floyd_warshall(g);
    std::vector<std::vector<double>> dm(n, std::vector<double>(n));
    long diam = 0;
    long best_row = -1;
    for (std::size_t i = 0; i < n; ++i) {
        long row = 0;
        for (std::size_t j = 0; j < n; ++j) {
            dm[i][j] = static_cast<double>(d[i][j]);
            diam = std::max(diam, d[i][j]);
            row += d[i][j];
        }
        best_row = best_row < 0 ? row : std::min(best_row, row);
    }
    const std::size_t rank = std::max<std::size_t>(1, static_cast<std::size_t>(2 * diam / 3));
    return -static_cast<double>(best_row) / static_cast<double>(n - 1) - jacobi_eigenvalues(dm)[rank - 1];
}

// Polynomials in x as ascending coefficient vectors.
using Poly = std::vector<long long>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

inline void poly_add(Poly& acc, const Poly& p, long long sign) {
    if (acc.size() < p.size()) {
        acc.resize(p.size(), 0);
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc[i] += sign * p[i];
    }
}

// det(M - xI) by cofactor expansion along the first row.
inline Poly cofactor_char_poly(const std::vector<std::vector<Poly>>& m) {
    const std::size_t n = m.size();
    if (n == 1) {
        return m[0][0];
    }
    Poly det{0};
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Poly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Poly> row;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != c) {
                    row.push_back(m[r][k]);
                }
            }
            minor.push_back(std::move(row));
        }
        poly_add(det, poly_mul(m[0][c], cofactor_char_poly(minor)), c % 2 == 0 ? 1 : -1);
    }
    return det;
}

inline Poly cofactor_char_poly(const std::vector<std::vector<long>>& entries) {
    const std::size_t n = entries.size();
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = i == j ? Poly{entries[i][j], -1} : Poly{entries[i][j]};
        }
    }
    Poly p = cofactor_char_poly(m);
    p.resize(n + 1, 0);
    return p;
}

// Reads back the DOT subset the exporter writes: node statements "i;" and
// edge statements "u -- v;" inside one "graph G { ... }" block.
struct DotGraph {
    std::size_t nodes = 0;
    std::vector<Edge> edges;
    bool ok = false;
};

inline DotGraph parse_dot(const std::string& text) {
    DotGraph out;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "graph G {") {
        return out;
    }
    while (std::getline(in, line)) {
        if (line == "}") {
            out.ok = true;
            std::sort(out.edges.begin(), out.edges.end());
            return out;
        }
        std::istringstream ls(line);
        long a = -1;
        std::string tok;
        ls >> a >> tok;
        if (tok == ";") {
            ++out.nodes;
        } else if (tok == "--") {
            long b = -1;
            ls >> b;
            out.edges.push_back(Edge{static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b))});
        } else {
            return out;
        }
    }
    return out;
}

}  // namespace testing
