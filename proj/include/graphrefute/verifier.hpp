#pragma once

#include <string>
#include <vector>

#include "graphrefute/conjectures.hpp"

namespace graphrefute {

struct CertifiedEigenvalue {
    std::string name;
    MatrixKind matrix = MatrixKind::adjacency;
    EigenCertificate certificate;
};

// A counter-example claim. `certified` holds iff raw_score - error_budget > 0,
// where error_budget sums the rank-preserving bounds of every eigenvalue in the
// score plus the rounding of the final floating-point combination. Exact
// ingredients (matching number, diameter, proximity, harmonic index,
// characteristic coefficients) contribute nothing.
struct Certificate {
    int conjecture = 0;
    Graph graph;
    double raw_score = 0.0;
    double error_budget = 0.0;
    bool certified = false;
    std::vector<Ingredient> ingredients;
    std::vector<CertifiedEigenvalue> eigenvalues;

    double margin() const { return raw_score - error_budget; }
};

// Throws GraphError when the graph does not meet the conjecture's
// preconditions, std::invalid_argument for an unknown id.
Certificate verify(int conjecture, const Graph& g);

}  // namespace graphrefute
