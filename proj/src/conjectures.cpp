#include "graphrefute/conjectures.hpp"

#include <boost/multiprecision/number.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace graphrefute {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_connected(const Graph& g, std::size_t min_n, const char* what) {
    if (g.vertex_count() < min_n) {
        throw GraphError(std::string(what) + " needs at least " + std::to_string(min_n) + " vertices");
    }
    if (!g.is_connected()) {
        throw GraphError(std::string(what) + " needs a connected graph");
    }
}

std::string exact_text(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1 ? boost::multiprecision::numerator(q).str() : q.str();
}

}  // namespace

// Complete graphs have D = 1, where floor(2D/3) = 0 is no rank at all.
std::size_t conj2_rank(std::size_t diameter) { return std::max<std::size_t>(1, (2 * diameter) / 3); }

double score_conj1(const Graph& g) {
    require_connected(g, 3, "conjecture 1");
    const double lambda1 = symmetric_spectrum(adjacency_matrix(g), MatrixKind::adjacency).at(1);
    const auto mu = static_cast<double>(matching_number(g));
    return std::sqrt(static_cast<double>(g.vertex_count() - 1)) + 1.0 - lambda1 - mu;
}

double score_conj2(const Graph& g) {
    require_connected(g, 4, "conjecture 2");
    const IntMatrix d = distance_matrix(g);
    const Spectrum s = symmetric_spectrum(d, MatrixKind::distance);
    return -to_double(proximity(d)) - s.at(conj2_rank(diameter(d)));
}

double eval_conj2(const Graph& g) {
    require_connected(g, 4, "conjecture 2 evaluation");
    const IntMatrix d = distance_matrix(g);
    const Spectrum s = symmetric_spectrum(d, MatrixKind::distance);
    return -to_double(proximity(d)) - interpolated_eigenvalue(s, 2 * diameter(d));
}

PeakReport peak_report(const Graph& tree, PolyRoute route) {
    if (tree.vertex_count() < 3 || !tree.is_tree()) {
        throw GraphError("peak report needs a tree on at least 3 vertices");
    }
    const std::size_t n = tree.vertex_count();
    const auto poly = route == PolyRoute::modular ? char_poly_modular : char_poly;
    PeakReport r;
    r.adjacency = poly(adjacency_matrix(tree));
    r.distance = poly(distance_matrix(tree));

    // Scaled by 2^(n-2): compare 2^k |delta_k| as integers.
    BigInt best = -1;
    for (std::size_t k = 0; k + 2 <= n; ++k) {
        const BigInt scaled = (BigInt(1) << k) * boost::multiprecision::abs(r.distance.coeffs[k]);
        r.normalized.emplace_back(scaled, BigInt(1) << (n - 2));
        if (scaled > best) {
            best = scaled;
            r.p_d = k;
        }
    }

    BigInt peak = -1;
    for (std::size_t k = 0; k <= n; ++k) {
        const auto& a = r.adjacency.coeffs[k];
        if (a == 0) {
            continue;
        }
        const BigInt magnitude = boost::multiprecision::abs(a);
        if (magnitude > peak) {
            peak = magnitude;
            r.p_a = k;
            r.p_a_rank = r.nonzero_positions.size();
        }
        r.nonzero_positions.push_back(k);
    }
    r.nonzero_count = r.nonzero_positions.size();
    r.adjacency_position = Rational(static_cast<long long>(r.p_a_rank), static_cast<long long>(r.nonzero_count));
    r.distance_position = 1 - Rational(static_cast<long long>(r.p_d), static_cast<long long>(n - 2));
    r.gap = boost::multiprecision::abs(r.adjacency_position - r.distance_position);
    return r;
}

double score_conj3(const Graph& tree) { return to_double(peak_report(tree).gap); }

double score_conj4(const Graph& g) {
    require_connected(g, 2, "conjecture 4");
    const double lambda2 = symmetric_spectrum(adjacency_matrix(g), MatrixKind::adjacency).at(2);
    return lambda2 - to_double(harmonic_index(g));
}

ScoreBreakdown explain_score(int conjecture, const Graph& g) {
    ScoreBreakdown b;
    b.conjecture = conjecture;
    auto add = [&](std::string name, double value, std::string exact = {}) {
        b.ingredients.push_back({std::move(name), value, std::move(exact)});
    };
    switch (conjecture) {
        case 1: {
            require_connected(g, 3, "conjecture 1");
            const double lambda1 = symmetric_spectrum(adjacency_matrix(g), MatrixKind::adjacency).at(1);
            const std::size_t mu = matching_number(g);
            const double bound = std::sqrt(static_cast<double>(g.vertex_count() - 1)) + 1.0;
            add("n", static_cast<double>(g.vertex_count()), std::to_string(g.vertex_count()));
            add("lambda1_adjacency", lambda1);
            add("matching_number", static_cast<double>(mu), std::to_string(mu));
            add("lambda1_plus_mu", lambda1 + static_cast<double>(mu));
            add("sqrt_n_minus_1_plus_1", bound);
            b.score = bound - lambda1 - static_cast<double>(mu);
            break;
        }
        case 2: {
            require_connected(g, 4, "conjecture 2");
            const IntMatrix d = distance_matrix(g);
            const Spectrum s = symmetric_spectrum(d, MatrixKind::distance);
            const std::size_t diam = diameter(d);
            const Rational pi = proximity(d);
            const std::size_t rank = conj2_rank(diam);
            add("n", static_cast<double>(g.vertex_count()), std::to_string(g.vertex_count()));
            add("diameter", static_cast<double>(diam), std::to_string(diam));
            add("proximity", to_double(pi), exact_text(pi));
            add("distance_rank", static_cast<double>(rank), std::to_string(rank));
            add("lambda_rank_distance", s.at(rank));
            add("lambda_prime_2D", interpolated_eigenvalue(s, 2 * diam));
            add("evaluation", -to_double(pi) - interpolated_eigenvalue(s, 2 * diam));
            b.score = -to_double(pi) - s.at(rank);
            break;
        }
        case 3: {
            const PeakReport r = peak_report(g);
            add("n", static_cast<double>(g.vertex_count()), std::to_string(g.vertex_count()));
            add("p_a", static_cast<double>(r.p_a), std::to_string(r.p_a));
            add("p_a_rank", static_cast<double>(r.p_a_rank), std::to_string(r.p_a_rank));
            add("nonzero_count", static_cast<double>(r.nonzero_count), std::to_string(r.nonzero_count));
            add("p_d", static_cast<double>(r.p_d), std::to_string(r.p_d));
            add("adjacency_position", to_double(r.adjacency_position), exact_text(r.adjacency_position));
            add("distance_position", to_double(r.distance_position), exact_text(r.distance_position));
            b.score = to_double(r.gap);
            break;
        }
        case 4: {
            require_connected(g, 2, "conjecture 4");
            const double lambda2 = symmetric_spectrum(adjacency_matrix(g), MatrixKind::adjacency).at(2);
            const Rational hc = harmonic_index(g);
            add("n", static_cast<double>(g.vertex_count()), std::to_string(g.vertex_count()));
            add("lambda2_adjacency", lambda2);
            add("harmonic_index", to_double(hc), exact_text(hc));
            b.score = lambda2 - to_double(hc);
            break;
        }
        default:
            throw std::invalid_argument("unknown conjecture " + std::to_string(conjecture));
    }
    return b;
}

// ---------------------------------------------------------------------------

ConjectureProblem::ConjectureProblem(int id, BuildModel model) : id_(id), model_(model) {
    if (id < 1 || id > 4) {
        throw std::invalid_argument("unknown conjecture " + std::to_string(id));
    }
}

std::string ConjectureProblem::description() const {
    switch (id_) {
        case 1:
            return "connected G, n >= 3: lambda1(A) + matching number >= sqrt(n-1) + 1";
        case 2:
            return "connected G, n >= 4: proximity + lambda_floor(2D/3)(distance matrix) >= 0";
        case 3:
            return "tree T: peaks of the adjacency and normalized distance characteristic coefficients coincide";
        default:
            return "any graph G: lambda2(A) < harmonic index";
    }
}

std::uint64_t ConjectureProblem::state_key(const State& s) const {
    // FNV-1a over the sorted edge list.
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xFF;
            h *= 1099511628211ULL;
        }
    };
    mix(s.graph.vertex_count());
    for (const auto& e : s.graph.sorted_edges()) {
        mix((std::uint64_t{e.u} << 32) | e.v);
    }
    return h;
}

double ConjectureProblem::score_graph(const Graph& g) const {
    const std::size_t n = g.vertex_count();
    switch (id_) {
        case 1:
            return n >= 3 ? score_conj1(g) : kNegInf;
        case 2:
            return n >= 4 ? score_conj2(g) : kNegInf;
        case 3:
            return n >= 3 && g.is_tree() ? score_conj3(g) : kNegInf;
        default:
            return n >= 2 ? score_conj4(g) : kNegInf;
    }
}

double ConjectureProblem::evaluate_graph(const Graph& g) const {
    if (id_ == 2) {
        return g.vertex_count() >= 4 ? eval_conj2(g) : kNegInf;
    }
    return score_graph(g);
}

ConjectureProblem make_problem(int id, const ProblemOverrides& overrides) {
    BuildModel m;
    switch (id) {
        case 1:
            m.target = 19;
            break;
        case 2:
            m.target = 203;
            break;
        case 3:
            m.target = 31;
            break;
        case 4:
            m.graph_class = GraphClass::connected_general;
            m.terminal_kind = TerminalKind::edge_count;
            m.target = 8;
            m.max_vertices = 7;
            break;
        default:
            throw std::invalid_argument("unknown conjecture " + std::to_string(id));
    }
    if (overrides.target) {
        m.target = *overrides.target;
    }
    if (overrides.terminal_kind) {
        m.terminal_kind = *overrides.terminal_kind;
    }
    if (overrides.graph_class) {
        m.graph_class = *overrides.graph_class;
    }
    if (overrides.max_degree) {
        m.max_degree = *overrides.max_degree;
    }
    if (overrides.max_vertices) {
        m.max_vertices = *overrides.max_vertices;
    }
    if (m.target < 1) {
        throw std::invalid_argument("build target must be positive");
    }
    return ConjectureProblem(id, m);
}

}  // namespace graphrefute
