#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "graphrefute/graph.hpp"
#include "graphrefute/matrix.hpp"

namespace graphrefute {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

IntMatrix adjacency_matrix(const Graph& g);

// All-pairs shortest path lengths by one BFS per vertex. Throws GraphError on
// disconnected input.
IntMatrix distance_matrix(const Graph& g);

std::size_t diameter(const Graph& g);
std::size_t diameter(const IntMatrix& distances);

// min_u sum_v d(u, v) / (n - 1); needs n >= 2.
Rational proximity(const Graph& g);
Rational proximity(const IntMatrix& distances);

// Sum over edges uv of 1 / (deg u + deg v), exact.
Rational harmonic_index(const Graph& g);

// Maximum matching size via Edmonds' blossom algorithm.
std::size_t matching_number(const Graph& g);

// Forest-only leaf-pairing oracle: repeatedly match a leaf with its neighbour.
// Independent of the blossom code, used to cross-check it on trees.
std::size_t forest_matching_number(const Graph& g);

double to_double(const Rational& q);

}  // namespace graphrefute
