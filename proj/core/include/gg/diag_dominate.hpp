#pragma once

#include "gg/stats.hpp"
#include "gg/trigraph.hpp"

namespace gg {

inline int diag_bound(int n) { return (n + 1) / 3; }

// Base constructions for 3 <= n <= 7. Throws GraphError(OutOfRange) otherwise.
DominatingSet small_diag_set(const TriangulationGraph& t);

// Queue-driven linear algorithm (separating sides with 4..6 boundary edges).
DominatingSet diag_2dominate_linear(const TriangulationGraph& t, AlgoStats* stats = nullptr);

// Contraction-based variant (sides with 3..4 boundary edges), quadratic time.
DominatingSet diag_2dominate_contraction(const TriangulationGraph& t, AlgoStats* stats = nullptr);

}  // namespace gg
