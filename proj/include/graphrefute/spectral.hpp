#pragma once

#include <cstddef>
#include <vector>

#include "graphrefute/invariants.hpp"
#include "graphrefute/matrix.hpp"

namespace graphrefute {

enum class MatrixKind { adjacency, distance, other };

// Eigenvalues in descending order. Ranks are 1-based: at(1) is the index.
struct Spectrum {
    std::vector<double> values;
    MatrixKind source = MatrixKind::other;

    std::size_t size() const { return values.size(); }
    double at(std::size_t rank) const { return values.at(rank - 1); }
};

struct EigenSystem {
    Spectrum spectrum;
    // vectors[k] is the unit eigenvector paired with spectrum.values[k].
    std::vector<std::vector<double>> vectors;
};

// Throws std::invalid_argument on non-symmetric or empty input.
Spectrum symmetric_spectrum(const IntMatrix& m, MatrixKind kind = MatrixKind::other);
EigenSystem symmetric_eigensystem(const IntMatrix& m, MatrixKind kind = MatrixKind::other);

// Coefficients of det(M - xI) = sum_k coeffs[k] x^k, so coeffs[n] = (-1)^n.
struct CharPoly {
    std::vector<BigInt> coeffs;

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

// Faddeev-LeVerrier over arbitrary-precision integers; every division by k is
// exact for integer input. O(n^4) big-integer work.
CharPoly char_poly(const IntMatrix& m);

// Same polynomial via Hessenberg reduction modulo 62-bit primes and Chinese
// remaindering, with enough primes to cover the Hadamard coefficient bound.
// O(n^3) per prime.
CharPoly char_poly_modular(const IntMatrix& m);

// lambda'_j for j = 1..3n: linear interpolation of the spectrum at fractional
// rank j/3, ranks clamped to [1, n]. Anchors: lambda'_{3k} = lambda_k.
double interpolated_eigenvalue(const Spectrum& s, std::size_t j);
std::vector<double> interpolate_spectrum(const Spectrum& s);

// Certificate for the rank-th largest eigenvalue of a symmetric matrix.
//   residual: ||M v - value v|| for the computed unit eigenvector v, so some
//             eigenvalue lies within `residual` of `value`.
//   bound:    rank-preserving enclosure |lambda_rank(M) - value| <= bound, from
//             Weyl's inequality on M - V diag(values) V^T, a correction for
//             the non-orthogonality of V, and a floating-point allowance.
struct EigenCertificate {
    std::size_t rank = 0;
    double value = 0.0;
    double residual = 0.0;
    double bound = 0.0;
};

EigenCertificate certify_eigenvalue(const IntMatrix& m, std::size_t rank);
std::vector<EigenCertificate> certify_spectrum(const IntMatrix& m);

}  // namespace graphrefute
