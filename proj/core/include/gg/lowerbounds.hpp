#pragma once

#include <stdexcept>
#include <string>

#include "gg/geometry.hpp"
#include "gg/trigraph.hpp"

namespace gg {

enum class LbErrc { MTooSmall, KTooSmall, NTooSmall, BadVariant };

class LowerBoundError : public std::invalid_argument {
public:
    LowerBoundError(LbErrc code, const std::string& what) : std::invalid_argument(what), code_(code) {}
    LbErrc code() const { return code_; }

private:
    LbErrc code_;
};

// T_variant on 3m + variant - 1 vertices: quadrilaterals v_{3j}..v_{3j+3}
// around a central polygon fanned from v0, closed by a quadrilateral,
// pentagon or hexagon. Needs floor((n+1)/3) diagonal guards. m >= 2.
TriangulationGraph gen_diag_lb(int m, int variant);

// m light hexagons v_{5j}..v_{5j+5} followed by a closing hexagon,
// heptagon, enneagon or decagon (residue 0, 1, 3, 4), so
// n = 5(m+1) + residue. Needs floor((2n+1)/5) edge guards. m >= 1.
TriangulationGraph gen_edge_lb(int m, int residue);

// Gamma_{5m+2}: Gamma_7 glued m-1 times onto itself along e0 / e6. m >= 1.
TriangulationGraph gen_edge_lb_glued(int m);

// The single copy used by the gluing.
TriangulationGraph gamma7();

// Glues Gamma_7 onto g: edge e0 of g meets edge e6 of Gamma_7, v0 is shared,
// g's v1 becomes v6 and the rest is renumbered ccw.
TriangulationGraph glue_gamma7(const TriangulationGraph& g);

// Regular k-gon B_0..B_{k-1} of radius 10 with a spike on every side, n = 3k.
// Spike i is B_i, T_i1, T_i2 (vertices 3i, 3i+1, 3i+2): segments up to a
// cap of width 2 at depth 20 beyond side i, closed by a circular arc
// T_i1 -> T_i2 (arc 3i+1). k >= 3.
PiecewiseConvexPolygon gen_spike_polygon(int k);

// Regular n-gon of radius 10 whose sides are nearly half-circular arcs.
// n >= 3.
PiecewiseConvexPolygon gen_fan_polygon(int n);

// Zipper polygon: alternating floor and ceiling teeth at x = 1..n, joined
// along each chain by nearly half-circular arcs, closed by an arc at each
// end. variant 1 gives n = 2m+5, variant 2 gives n = 2m+4. m >= 0.
PiecewiseConvexPolygon gen_monotone_lb(int variant, int m);

}  // namespace gg
