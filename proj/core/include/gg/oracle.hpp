#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gg/trigraph.hpp"

namespace gg {

struct OracleResult {
    int size = 0;
    DominatingSet witness;
};

// Minimum 2-dominating set by exhaustive search. n <= 14.
OracleResult min_2dominating_set(const TriangulationGraph& t, DomMode mode);

struct Violation {
    std::vector<Edge> diagonals;
    std::string reason;
};

struct ExhaustiveReport {
    int n = 0;
    std::uint64_t instances = 0;
    std::vector<Violation> violations;
};

using DomAlgorithm = std::function<DominatingSet(const TriangulationGraph&)>;
using BoundFn = std::function<int(int)>;

// Runs algo on every triangulation of the convex n-gon and checks validity,
// the size bound and (if check_optimum) that the oracle optimum is not larger. n <= 12.
ExhaustiveReport check_bound_exhaustive(int n, DomMode mode, const DomAlgorithm& algo, const BoundFn& bound,
                                        bool check_optimum = true);

}  // namespace gg
