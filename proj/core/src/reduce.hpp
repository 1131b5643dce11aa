#pragma once

// Shared machinery for the inductive 2-domination algorithms: a guard bag
// with per-vertex coverage counts, the contraction lift, and two engines
// that repeatedly split off a small side, recurse on the rest, and replay
// the recorded rewrites in reverse order.

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "gg/stats.hpp"
#include "gg/trigraph.hpp"

namespace gg::detail {

class GuardBag {
public:
    explicit GuardBag(int n) : partners_(n) {}

    bool has(int a, int b) const;
    bool covered(int v) const { return !partners_[v].empty(); }
    void add(int a, int b);
    // Removes the member if present; returns whether it was present.
    bool remove(int a, int b);
    const std::vector<int>& partners(int v) const { return partners_[v]; }
    std::vector<Edge> members() const;
    int vertex_count() const { return static_cast<int>(partners_.size()); }

private:
    std::vector<std::vector<int>> partners_;
};

// Contraction of the boundary edge (u, v) of the graph left after removing a
// side; x keeps u's label. w is the apex of the triangle on (u, v).
struct Contraction {
    int u = -1;
    int v = -1;
    int w = -1;
    bool v_after_u = true;   // v is the ccw successor of u
    bool vw_boundary = true;
    int n_labels = 0;        // size of the label circle
};

// Lifts the bag from the contracted graph back to the graph before
// contraction. Returns the endpoint of (u, v) that still needs a vertex
// guard: u unless x was covered only through u-side guards, in which case v.
int lift_contraction(GuardBag& bag, const Contraction& c, DomMode mode);

// Split-off side v0..vk (global labels) with its inner diagonals.
struct Side {
    std::array<int, 12> L{};
    int k = 0;
    std::vector<Edge> inner;  // global labels
    int shape = -1;

    int v(int i) const { return L[i]; }
    bool has(int i, int j) const;
    int apex(int i, int j) const;  // vertex index m in (i, j) with has(i,m) and has(m,j)
    void reflect();
};

struct Reduction {
    std::vector<int> removed;  // global labels of removed side vertices
    std::optional<std::pair<int, int>> contract;  // (u, v), global labels
    // need is the vertex reported by lift_contraction, or -1 without contraction.
    std::function<void(GuardBag&, int need)> rewrite;
};

using CaseFn = std::function<Reduction(Side&)>;
using BaseFn = std::function<DominatingSet(const TriangulationGraph&)>;

// Global-minimum separating diagonal each round, graph rebuilt explicitly.
DominatingSet run_explicit(const TriangulationGraph& t, DomMode mode, int lambda, int cutoff, const CaseFn& cases,
                           const BaseFn& base, AlgoStats* stats);

// Queue of locally minimal configurations over the dual tree, triangles
// switched off in place.
DominatingSet run_queue(const TriangulationGraph& t, DomMode mode, int lambda, int cutoff, const CaseFn& cases,
                        const BaseFn& base, AlgoStats* stats);

// Helpers for rewrite closures.
inline void add_e(GuardBag& b, const Side& s, int i) { b.add(s.v(i), s.v(i + 1)); }
inline void add_d(GuardBag& b, const Side& s, int i, int j) { b.add(s.v(i), s.v(j)); }
inline bool has_d(const GuardBag& b, const Side& s, int i, int j) { return b.has(s.v(i), s.v(j)); }
inline bool rm_d(GuardBag& b, const Side& s, int i, int j) { return b.remove(s.v(i), s.v(j)); }
inline bool cov(const GuardBag& b, const Side& s, int i) { return b.covered(s.v(i)); }

}  // namespace gg::detail
