#pragma once

#include <cstdint>

namespace gg {

// Instrumentation counters filled by the reduction-based algorithms.
struct AlgoStats {
    std::uint64_t pops = 0;        // queue elements popped
    std::uint64_t pushes = 0;      // queue elements pushed
    std::uint64_t reductions = 0;  // case applications
    std::uint64_t rescans = 0;     // full rescans after an empty queue (expected 0)
    std::uint64_t work = 0;        // elementary steps (triangles or vertices touched)
    int base_n = 0;                // size of the graph handed to the base case
};

}  // namespace gg
