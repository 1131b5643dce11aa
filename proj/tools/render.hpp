#pragma once

#include <string>

#include "gg/geometry.hpp"
#include "gg/trigraph.hpp"

namespace gg::cli {

// Graph drawn on a regular n-gon. Boundary solid, diagonals dashed, members
// of d (if given) thick.
std::string render_graph(const TriangulationGraph& t, const DominatingSet* d);

// Polygon with its constrained triangulation (dashed) and guards (thick).
std::string render_polygon(const PiecewiseConvexPolygon& P, const GuardSet* g);

}  // namespace gg::cli
