#pragma once

#include "gg/stats.hpp"
#include "gg/trigraph.hpp"

namespace gg {

// floor((2n+1)/5), with one extra guard for the quadrilateral.
inline int edge_bound_quadratic(int n) { return n == 4 ? 2 : (2 * n + 1) / 5; }
// floor(3n/7), with one extra guard for the quadrilateral.
inline int edge_bound_linear(int n) { return n == 4 ? 2 : (3 * n) / 7; }

// Base constructions for 3 <= n <= 9. Throws GraphError(OutOfRange) otherwise.
DominatingSet small_edge_set(const TriangulationGraph& t);

// Contraction-based algorithm (sides with 5..8 boundary edges), quadratic time.
DominatingSet edge_2dominate_quadratic(const TriangulationGraph& t, AlgoStats* stats = nullptr);

// Queue-driven linear algorithm (sides with 6..10 boundary edges).
DominatingSet edge_2dominate_linear(const TriangulationGraph& t, AlgoStats* stats = nullptr);

}  // namespace gg
