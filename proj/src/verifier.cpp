#include "graphrefute/verifier.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace graphrefute {

namespace {

// Rounding of summing a handful of doubles of the given magnitudes.
double combination_rounding(std::initializer_list<double> terms) {
    double total = 0.0;
    for (double t : terms) {
        total += std::abs(t);
    }
    return 8.0 * std::numeric_limits<double>::epsilon() * total;
}

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw GraphError(what);
    }
}

}  // namespace

Certificate verify(int conjecture, const Graph& g) {
    if (conjecture < 1 || conjecture > 4) {
        throw std::invalid_argument("unknown conjecture " + std::to_string(conjecture));
    }
    Certificate c;
    c.conjecture = conjecture;
    c.graph = g;
    const ScoreBreakdown breakdown = explain_score(conjecture, g);
    c.ingredients = breakdown.ingredients;

    switch (conjecture) {
        case 1: {
            const auto cert = certify_eigenvalue(adjacency_matrix(g), 1);
            const double mu = static_cast<double>(matching_number(g));
            const double root = std::sqrt(static_cast<double>(g.vertex_count() - 1));
            c.eigenvalues.push_back({"lambda1", MatrixKind::adjacency, cert});
            c.raw_score = root + 1.0 - cert.value - mu;
            c.error_budget = cert.bound + combination_rounding({root, 1.0, cert.value, mu});
            break;
        }
        case 2: {
            require(g.vertex_count() >= 4 && g.is_connected(), "conjecture 2 needs a connected graph on >= 4 vertices");
            const IntMatrix d = distance_matrix(g);
            const std::size_t rank = conj2_rank(diameter(d));
            const auto cert = certify_eigenvalue(d, rank);
            const double pi = to_double(proximity(d));
            c.eigenvalues.push_back({"lambda_" + std::to_string(rank), MatrixKind::distance, cert});
            c.raw_score = -pi - cert.value;
            c.error_budget = cert.bound + combination_rounding({pi, cert.value});
            break;
        }
        case 3: {
            // Both exact routes must agree before the sign is trusted.
            const PeakReport fast = peak_report(g, PolyRoute::modular);
            const PeakReport reference = peak_report(g, PolyRoute::faddeev_leverrier);
            if (fast.adjacency != reference.adjacency || fast.distance != reference.distance) {
                throw std::runtime_error("characteristic polynomial routes disagree");
            }
            c.raw_score = to_double(reference.gap);
            c.error_budget = 0.0;
            c.certified = reference.peaks_differ();
            return c;
        }
        case 4: {
            const auto cert = certify_eigenvalue(adjacency_matrix(g), 2);
            const double hc = to_double(harmonic_index(g));
            c.eigenvalues.push_back({"lambda2", MatrixKind::adjacency, cert});
            c.raw_score = cert.value - hc;
            c.error_budget = cert.bound + combination_rounding({cert.value, hc});
            break;
        }
    }
    c.certified = c.raw_score - c.error_budget > 0.0;
    return c;
}

}  // namespace graphrefute
