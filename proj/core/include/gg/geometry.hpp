#pragma once

#include <cstdint>

#include <boost/multiprecision/gmp.hpp>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gg/stats.hpp"
#include "gg/trigraph.hpp"

namespace gg {

using Rational = boost::multiprecision::mpq_rational;

struct Point {
    Rational x;
    Rational y;
    bool operator==(const Point&) const = default;
};

struct PointD {
    double x = 0;
    double y = 0;
};

inline PointD to_double(const Point& p) { return {p.x.convert_to<double>(), p.y.convert_to<double>()}; }

// Sign of the cross product (b - a) x (c - a): +1 left turn, -1 right turn.
int orient(const Point& a, const Point& b, const Point& c);

enum class GeomErrc { InvalidPolygon, DegenerateInput, NonSimple, NotDominating, NonEdgeMember, PointOutside };

const char* to_string(GeomErrc c);

class GeometryError : public std::runtime_error {
public:
    GeometryError(GeomErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    GeomErrc code() const { return code_; }

private:
    GeomErrc code_;
};

enum class ArcKind { Segment, Circular };
enum class ArcOrientation { CCW, CW };

// Boundary piece joining p to q. A circular arc runs around its center in
// the given orientation.
struct ConvexArc {
    ArcKind kind = ArcKind::Segment;
    Point p;
    Point q;
    Point center;
    ArcOrientation orientation = ArcOrientation::CCW;

    Rational radius2() const;
    double radius() const;
    // Point at parameter u in [0, 1] (by angle for circular arcs).
    PointD at(double u) const;
    bool operator==(const ConvexArc&) const = default;
};

// Arc data without endpoints, as stored in the polygon.
struct ArcShape {
    ArcKind kind = ArcKind::Segment;
    Point center;
    ArcOrientation orientation = ArcOrientation::CCW;
    bool operator==(const ArcShape&) const = default;
};

// Closed curvilinear polygon, ccw. Arc i joins vertex i to vertex i+1 (mod n).
// The only circular arcs accepted are ccw minor arcs bulging outwards
// (center strictly left of the directed chord).
class PiecewiseConvexPolygon {
public:
    PiecewiseConvexPolygon() = default;
    // Throws GeometryError(InvalidPolygon) on any violated invariant.
    PiecewiseConvexPolygon(std::vector<Point> vertices, std::vector<ArcShape> arcs);

    int n() const { return static_cast<int>(vertices_.size()); }
    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<ArcShape>& shapes() const { return shapes_; }
    const Point& vertex(int i) const { return vertices_[i]; }
    ConvexArc arc(int i) const;

    // Bounding box of the region, arcs included.
    void bbox(double& x0, double& y0, double& x1, double& y1) const;
    double area() const;

    bool operator==(const PiecewiseConvexPolygon& o) const {
        return vertices_ == o.vertices_ && shapes_ == o.shapes_;
    }

private:
    std::vector<Point> vertices_;
    std::vector<ArcShape> shapes_;
};

enum class RoomStatus { Degenerate, Empty, NonEmpty };

struct Room {
    int index = 0;
    RoomStatus status = RoomStatus::Degenerate;
    std::vector<int> X;  // vertices interior to the chord, ordered from v_i
    std::vector<int> R;  // vertices inside the room or in X
    std::vector<int> C;  // hull chain from v_i to v_{i+1}
    std::vector<int> c_star() const;
};

// Room of arc i contains w: strictly beyond the chord and strictly inside
// the circle. Exact.
bool in_room(const PiecewiseConvexPolygon& P, int i, const Point& w);

std::vector<Room> classify_rooms(const PiecewiseConvexPolygon& P);

enum class DiagKind { BoundaryArc, ChainDiagonal, WeakDiagonal, StarDiagonal };
enum class TriangleClass { StarTriangle, CrescentTriangle, WeakTriangle };

struct EdgeInfo {
    DiagKind kind = DiagKind::StarDiagonal;
    int room = -1;
};

struct ConstrainedTriangulation {
    TriangulationGraph graph;
    std::map<Edge, EdgeInfo> edges;          // every edge and diagonal of graph
    std::vector<TriangleClass> classes;      // parallel to graph.triangles()
    std::vector<int> triangle_room;          // room of crescent triangles, else -1
    std::vector<Room> rooms;

    const EdgeInfo& info(Edge e) const { return edges.at(e); }
};

ConstrainedTriangulation build_constrained_triangulation(const PiecewiseConvexPolygon& P);

enum class GuardMode { EdgeGuards, MobileGuards };

struct Guard {
    enum class Kind { Arc, Diagonal };
    Kind kind = Kind::Arc;
    int arc = -1;   // Kind::Arc
    Edge diagonal;  // Kind::Diagonal, straight segment
    auto operator<=>(const Guard&) const = default;
};

struct GuardSet {
    GuardMode mode = GuardMode::EdgeGuards;
    std::vector<Guard> guards;  // sorted, unique

    std::size_t size() const { return guards.size(); }
    void normalize();
    bool operator==(const GuardSet&) const = default;
};

// Arc index of the boundary edge (a, b) of an n-gon.
int boundary_arc_index(int n, Edge e);

GuardSet mobile_guards_from_diag_set(const ConstrainedTriangulation& ct, const DominatingSet& d);
GuardSet edge_guards_from_edge_set(const ConstrainedTriangulation& ct, const DominatingSet& d);

// Closure membership with absolute tolerance 1e-9 on the boundary.
bool contains_point(const PiecewiseConvexPolygon& P, PointD p);
bool on_boundary(const PiecewiseConvexPolygon& P, PointD p, double tol = 1e-9);

// Segment pq lies in the closure of P. Throws PointOutside if p or q does not.
bool is_visible(const PiecewiseConvexPolygon& P, PointD p, PointD q);

struct CoverageReport {
    bool covered = true;
    std::size_t interior_samples = 0;
    std::size_t guard_samples = 0;
    std::vector<PointD> witnesses;  // unguarded samples
    std::string caveat;
};

// Sampled check: grid of density x density over the bounding box plus a
// stratified grid in every non-degenerate room, each sample tested against
// at least 64 points per guard.
CoverageReport verify_guard_set(const PiecewiseConvexPolygon& P, const GuardSet& g, int density = 50);

// Per interior sample, bit k set iff guard k sees it (at most 64 guards).
// Lets callers test every subset of a guard set from one pass.
struct VisibilityProfile {
    std::vector<PointD> samples;
    std::vector<std::uint64_t> seen_by;
};

VisibilityProfile guard_visibility(const PiecewiseConvexPolygon& P, const GuardSet& g, int density = 50);

// Points sampled from one guard (endpoints included).
std::vector<PointD> guard_points(const PiecewiseConvexPolygon& P, const Guard& g, int count = 64);

// Interior samples used by verify_guard_set.
std::vector<PointD> interior_samples(const PiecewiseConvexPolygon& P, int density);

enum class GuardStrategy { MobileN3, EdgeQ, EdgeLinear };

int guard_bound(GuardStrategy s, int n);

GuardSet guard_piecewise_convex(const PiecewiseConvexPolygon& P, GuardStrategy s, AlgoStats* stats = nullptr);

// Polygon of straight segments through the given points.
PiecewiseConvexPolygon segment_polygon(const std::vector<Point>& pts);

}  // namespace gg
