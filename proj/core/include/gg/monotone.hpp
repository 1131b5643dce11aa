#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "gg/geometry.hpp"

namespace gg {

class NotMonotoneError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// x-sorted view of a monotone polygon. Index j runs over u_0..u_{n+1};
// u_0 and u_{n+1} are the extreme points, u_1..u_n the corners sorted by
// (x, y). Edge k runs from the k-th corner to the next one; when every
// vertex is a corner, edges and arcs coincide.
struct MonotoneDecomposition {
    int n = 0;
    std::vector<PointD> u;
    std::vector<int> vertex;  // polygon vertex at u_j, -1 if u_j is interior to an edge
    std::vector<int> sigma;   // +1 upper chain only, -1 lower only, 0 both
    // Incident edges per chain, [0] lower and [1] upper. For sigma = +-1 both
    // entries hold the edge on the vertex's own chain.
    std::vector<std::array<int, 2>> e_left;
    std::vector<std::array<int, 2>> e_right;
    std::vector<int> e_opp;   // edge met by the vertical line on the other chain
    std::vector<std::vector<int>> edge_arcs;  // arcs of each edge, in boundary order
};

// Every vertical line meets P in at most one interval: the x-direction of
// the boundary, with arcs split at their x-extrema, changes sign exactly twice.
bool is_x_monotone(const PiecewiseConvexPolygon& P);

MonotoneDecomposition decompose(const PiecewiseConvexPolygon& P);

// Locally convex polygon given as P plus its corners (sorted vertex indices,
// at least two). The remaining vertices are joints where the boundary turns
// left, so every edge between consecutive corners is locally convex.
// Throws std::invalid_argument on a bad corner list or a reflex joint.
MonotoneDecomposition decompose(const PiecewiseConvexPolygon& P, const std::vector<int>& corners);

// Slab kappa_j containing x: u_j.x <= x.x < u_{j+1}.x, clamped to 0..n.
int slab_index(const MonotoneDecomposition& d, PointD x);

// Edge guards chosen per group of four consecutive slabs; at most
// ceil((n+1)/4) arcs.
GuardSet monotone_edge_guards(const PiecewiseConvexPolygon& P);

// Same selection on a locally convex polygon; returns edge indices of
// decompose(P, corners), sorted and unique.
std::vector<int> monotone_edge_guards(const PiecewiseConvexPolygon& P, const std::vector<int>& corners);

}  // namespace gg
