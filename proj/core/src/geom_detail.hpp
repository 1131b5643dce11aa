#pragma once

// Floating-point helpers shared by polygon validation and visibility.
// Circle predicates run in doubles with absolute tolerance kEps.

#include <cmath>
#include <vector>

#include "gg/geometry.hpp"

namespace gg::detail {

inline constexpr double kEps = 1e-9;

struct DArc {
    bool circular = false;
    PointD p, q, c;
    double r = 0;
};

DArc to_darc(const ConvexArc& a);

inline double cross(PointD o, PointD a, PointD b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }
inline double dist(PointD a, PointD b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Circle point x belongs to the (minor, outward) arc: not strictly left of the chord.
bool on_arc_side(const DArc& a, PointD x);

// Parameters t in [0, 1] where the segment s0 + t (s1 - s0) meets the arc.
// Collinear overlaps contribute the overlap ends.
void segment_hits(const DArc& a, PointD s0, PointD s1, std::vector<double>& out);

// Points where two arcs meet (overlaps contribute their ends).
std::vector<PointD> arc_intersections(const DArc& a, const DArc& b);

double dist_to_arc(const DArc& a, PointD x);

struct Box {
    double x0, y0, x1, y1;
};

// Bounding box of the arc (its chord for a segment).
Box arc_box(const DArc& a);

}  // namespace gg::detail
