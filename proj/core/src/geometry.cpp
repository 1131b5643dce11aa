#include "gg/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "geom_detail.hpp"
#include "gg/diag_dominate.hpp"
#include "gg/edge_dominate.hpp"

namespace gg {

using detail::DArc;
using detail::kEps;

const char* to_string(GeomErrc c) {
    switch (c) {
        case GeomErrc::InvalidPolygon: return "InvalidPolygon";
        case GeomErrc::DegenerateInput: return "DegenerateInput";
        case GeomErrc::NonSimple: return "NonSimple";
        case GeomErrc::NotDominating: return "NotDominating";
        case GeomErrc::NonEdgeMember: return "NonEdgeMember";
        case GeomErrc::PointOutside: return "PointOutside";
    }
    return "?";
}

int orient(const Point& a, const Point& b, const Point& c) {
    Rational v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

namespace {

Rational dist2(const Point& a, const Point& b) {
    Rational dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

[[noreturn]] void invalid(const std::string& msg) { throw GeometryError(GeomErrc::InvalidPolygon, msg); }

}  // namespace

Rational ConvexArc::radius2() const { return dist2(center, p); }

double ConvexArc::radius() const { return std::sqrt(radius2().convert_to<double>()); }

PointD ConvexArc::at(double u) const {
    if (u <= 0) return to_double(p);
    if (u >= 1) return to_double(q);
    PointD a = to_double(p), b = to_double(q);
    if (kind == ArcKind::Segment) return {a.x + u * (b.x - a.x), a.y + u * (b.y - a.y)};
    PointD c = to_double(center);
    double a0 = std::atan2(a.y - c.y, a.x - c.x);
    double a1 = std::atan2(b.y - c.y, b.x - c.x);
    double sweep = a1 - a0;
    if (orientation == ArcOrientation::CCW) {
        while (sweep <= 0) sweep += 2 * std::numbers::pi;
    } else {
        while (sweep >= 0) sweep -= 2 * std::numbers::pi;
    }
    double r = radius();
    double t = a0 + u * sweep;
    return {c.x + r * std::cos(t), c.y + r * std::sin(t)};
}

PiecewiseConvexPolygon::PiecewiseConvexPolygon(std::vector<Point> vertices, std::vector<ArcShape> arcs)
    : vertices_(std::move(vertices)), shapes_(std::move(arcs)) {
    const int n = this->n();
    if (n < 2) invalid("a polygon needs at least 2 vertices");
    if (static_cast<int>(shapes_.size()) != n) invalid("arc count must equal vertex count");
    {
        std::vector<std::pair<Rational, Rational>> pts;
        for (const auto& v : vertices_) pts.emplace_back(v.x, v.y);
        std::sort(pts.begin(), pts.end());
        if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) invalid("repeated vertex");
    }
    for (int i = 0; i < n; ++i) {
        const ArcShape& s = shapes_[i];
        if (s.kind == ArcKind::Segment) {
            if (n == 2) invalid("a 2-gon needs circular arcs");
            continue;
        }
        const Point& p = vertices_[i];
        const Point& q = vertices_[(i + 1) % n];
        if (dist2(s.center, p) != dist2(s.center, q))
            invalid("arc " + std::to_string(i) + ": center is not equidistant from its endpoints");
        if (s.orientation == ArcOrientation::CW)
            invalid("arc " + std::to_string(i) + ": clockwise arcs are not locally convex");
        if (orient(p, q, s.center) <= 0)
            invalid("arc " + std::to_string(i) + ": arc is not shorter than a half-circle");
    }
    // Pairs whose padded boxes overlap, found by a sweep in x.
    std::vector<DArc> d(n);
    std::vector<detail::Box> box(n);
    std::vector<int> order(n);
    double scale = 1;
    for (int i = 0; i < n; ++i) {
        d[i] = detail::to_darc(arc(i));
        box[i] = detail::arc_box(d[i]);
        order[i] = i;
        scale = std::max({scale, std::abs(box[i].x0), std::abs(box[i].x1), std::abs(box[i].y0), std::abs(box[i].y1)});
    }
    const double pad = 1e-7 * scale;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return box[a].x0 < box[b].x0; });
    for (int oi = 0; oi < n; ++oi)
        for (int oj = oi + 1; oj < n && box[order[oj]].x0 <= box[order[oi]].x1 + pad; ++oj) {
            int i = std::min(order[oi], order[oj]), j = std::max(order[oi], order[oj]);
            if (box[i].y1 + pad < box[j].y0 || box[j].y1 + pad < box[i].y0) continue;
            std::vector<PointD> shared;
            if (j == i + 1) shared.push_back(to_double(vertices_[j]));
            if ((j + 1) % n == i) shared.push_back(to_double(vertices_[i]));
            for (PointD x : detail::arc_intersections(d[i], d[j])) {
                bool ok = false;
                for (PointD s : shared) ok = ok || detail::dist(x, s) < 1e-7;
                if (!ok) invalid("arcs " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
            }
        }
    // Overlap of adjacent collinear segments shows up only at the shared vertex.
    for (int i = 0; i < n && n >= 3; ++i) {
        int j = (i + 1) % n;
        if (shapes_[i].kind != ArcKind::Segment || shapes_[j].kind != ArcKind::Segment) continue;
        const Point& a = vertices_[i];
        const Point& b = vertices_[j];
        const Point& c = vertices_[(j + 1) % n];
        if (orient(a, b, c) == 0 && (c.x - b.x) * (a.x - b.x) + (c.y - b.y) * (a.y - b.y) > 0)
            invalid("segments " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
    }
    if (area() <= 0) invalid("polygon must be counterclockwise");
}

ConvexArc PiecewiseConvexPolygon::arc(int i) const {
    const ArcShape& s = shapes_[i];
    return ConvexArc{s.kind, vertices_[i], vertices_[(i + 1) % n()], s.center, s.orientation};
}

double PiecewiseConvexPolygon::area() const {
    Rational twice = 0;
    for (int i = 0; i < n(); ++i) {
        const Point& a = vertices_[i];
        const Point& b = vertices_[(i + 1) % n()];
        twice += a.x * b.y - a.y * b.x;
    }
    double total = twice.convert_to<double>() / 2;
    for (int i = 0; i < n(); ++i) {
        if (shapes_[i].kind != ArcKind::Circular) continue;
        ConvexArc a = arc(i);
        double r = a.radius();
        double chord = std::sqrt(dist2(a.p, a.q).convert_to<double>());
        double theta = 2 * std::asin(std::min(1.0, chord / (2 * r)));
        total += r * r / 2 * (theta - std::sin(theta));
    }
    return total;
}

void PiecewiseConvexPolygon::bbox(double& x0, double& y0, double& x1, double& y1) const {
    x0 = y0 = std::numeric_limits<double>::infinity();
    x1 = y1 = -x0;
    auto take = [&](PointD p) {
        x0 = std::min(x0, p.x);
        y0 = std::min(y0, p.y);
        x1 = std::max(x1, p.x);
        y1 = std::max(y1, p.y);
    };
    for (int i = 0; i < n(); ++i) {
        detail::Box b = detail::arc_box(detail::to_darc(arc(i)));
        take({b.x0, b.y0});
        take({b.x1, b.y1});
    }
}

PiecewiseConvexPolygon segment_polygon(const std::vector<Point>& pts) {
    return PiecewiseConvexPolygon(pts, std::vector<ArcShape>(pts.size()));
}

// ---- rooms ----

std::vector<int> Room::c_star() const {
    if (C.size() <= 2) return {};
    return {C.begin() + 1, C.end() - 1};
}

bool in_room(const PiecewiseConvexPolygon& P, int i, const Point& w) {
    ConvexArc a = P.arc(i);
    if (a.kind != ArcKind::Circular) return false;
    return orient(a.p, a.q, w) < 0 && dist2(a.center, w) < a.radius2();
}

std::vector<Room> classify_rooms(const PiecewiseConvexPolygon& P) {
    const int n = P.n();
    std::vector<Room> rooms(n);
    // Vertices by x; a room lies in the bounding box of its arc, so only
    // vertices in that box (padded for rounding) go to the exact tests.
    std::vector<PointD> vd(n);
    std::vector<std::pair<double, int>> by_x(n);
    double scale = 1;
    for (int w = 0; w < n; ++w) {
        vd[w] = to_double(P.vertex(w));
        by_x[w] = {vd[w].x, w};
        scale = std::max({scale, std::abs(vd[w].x), std::abs(vd[w].y)});
    }
    std::sort(by_x.begin(), by_x.end());
    const double pad = 1e-9 * scale;
    for (int i = 0; i < n; ++i) {
        Room& room = rooms[i];
        room.index = i;
        const int j = (i + 1) % n;
        if (P.shapes()[i].kind == ArcKind::Segment) {
            room.status = RoomStatus::Degenerate;
            room.C = {i, j};
            continue;
        }
        const Point& p = P.vertex(i);
        const Point& q = P.vertex(j);
        Point d{q.x - p.x, q.y - p.y};
        Rational len2 = d.x * d.x + d.y * d.y;
        // Chord frame: s along the chord, h towards the room.
        struct Loc {
            Rational s, h;
            int v;
        };
        std::vector<Loc> xs, inner;
        detail::Box box = detail::arc_box(detail::to_darc(P.arc(i)));
        auto lo = std::lower_bound(by_x.begin(), by_x.end(), std::pair{box.x0 - pad, -1});
        for (auto it = lo; it != by_x.end() && it->first <= box.x1 + pad; ++it) {
            int w = it->second;
            if (w == i || w == j || vd[w].y < box.y0 - pad || vd[w].y > box.y1 + pad) continue;
            const Point& x = P.vertex(w);
            Rational s = (x.x - p.x) * d.x + (x.y - p.y) * d.y;
            Rational h = (x.x - p.x) * d.y - (x.y - p.y) * d.x;
            int o = orient(p, q, x);
            if (o == 0 && s > 0 && s < len2) {
                xs.push_back({s, 0, w});
            } else if (in_room(P, i, x)) {
                inner.push_back({s, h, w});
            }
        }
        auto by_s = [](const Loc& a, const Loc& b) { return a.s < b.s || (a.s == b.s && a.h < b.h); };
        std::sort(xs.begin(), xs.end(), by_s);
        std::sort(inner.begin(), inner.end(), by_s);
        for (const auto& l : xs) room.X.push_back(l.v);
        for (const auto& l : inner) room.R.push_back(l.v);
        room.R.insert(room.R.end(), room.X.begin(), room.X.end());
        if (room.R.empty()) {
            room.status = RoomStatus::Empty;
            room.C = {i, j};
            continue;
        }
        room.status = RoomStatus::NonEmpty;
        if (inner.empty()) {
            room.C.push_back(i);
            room.C.insert(room.C.end(), room.X.begin(), room.X.end());
            room.C.push_back(j);
            continue;
        }
        // Upper hull of the chord endpoints and inner vertices in the chord
        // frame, keeping collinear points on hull edges.
        std::vector<Loc> pts;
        pts.push_back({0, 0, i});
        pts.insert(pts.end(), inner.begin(), inner.end());
        pts.push_back({len2, 0, j});
        std::vector<Loc> hull;
        for (const auto& l : pts) {
            while (hull.size() >= 2) {
                const Loc& o = hull[hull.size() - 2];
                const Loc& a = hull.back();
                Rational cr = (a.s - o.s) * (l.h - o.h) - (a.h - o.h) * (l.s - o.s);
                if (cr > 0) {
                    hull.pop_back();
                } else {
                    break;
                }
            }
            hull.push_back(l);
        }
        for (const auto& l : hull) room.C.push_back(l.v);
    }
    return rooms;
}

// ---- constrained triangulation ----

namespace {

bool is_boundary_pair(int n, int a, int b) {
    int d = (b - a + n) % n;
    return d == 1 || d == n - 1;
}

// Faces of the outerplanar graph given by boundary and chords, as ccw label cycles.
std::vector<std::vector<int>> trace_faces(int n, const std::vector<Edge>& chords) {
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v) {
        adj[v].push_back((v + 1) % n);
        adj[v].push_back((v + n - 1) % n);
    }
    for (Edge e : chords) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    for (int v = 0; v < n; ++v)
        std::sort(adj[v].begin(), adj[v].end(), [&](int a, int b) { return (a - v + n) % n < (b - v + n) % n; });
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> starts;
    for (int v = 0; v < n; ++v) starts.emplace_back(v, (v + 1) % n);
    for (Edge e : chords) {
        starts.emplace_back(e.a, e.b);
        starts.emplace_back(e.b, e.a);
    }
    std::vector<std::vector<int>> faces;
    for (auto [u0, v0] : starts) {
        if (seen.count({u0, v0})) continue;
        std::vector<int> face;
        int u = u0, v = v0;
        while (!seen.count({u, v})) {
            seen.insert({u, v});
            face.push_back(u);
            const auto& nb = adj[v];
            auto it = std::find(nb.begin(), nb.end(), u);
            int w = it == nb.begin() ? nb.back() : *(it - 1);
            u = v;
            v = w;
            if (face.size() > static_cast<std::size_t>(n)) break;
        }
        if (u != u0 || v != v0) throw GeometryError(GeomErrc::NonSimple, "face tracing failed");
        faces.push_back(face);
    }
    return faces;
}

bool in_closed_triangle(const Point& a, const Point& b, const Point& c, const Point& x) {
    return orient(a, b, x) >= 0 && orient(b, c, x) >= 0 && orient(c, a, x) >= 0;
}

// Ear clipping with exact predicates on a linked list. In a simple polygon
// an ear triangle that contains a vertex also contains a reflex or flat
// one, so only those are tested. Straight-angle ears are used only when no
// proper ear is left.
void clip_ears(const PiecewiseConvexPolygon& P, const std::vector<int>& poly, std::vector<Edge>& out) {
    const int m = static_cast<int>(poly.size());
    std::vector<int> prv(m), nxt(m);
    for (int k = 0; k < m; ++k) {
        prv[k] = (k + m - 1) % m;
        nxt[k] = (k + 1) % m;
    }
    auto V = [&](int k) -> const Point& { return P.vertex(poly[k]); };
    auto turn = [&](int k) { return orient(V(prv[k]), V(k), V(nxt[k])); };
    std::set<int> nonconvex;
    for (int k = 0; k < m; ++k)
        if (turn(k) <= 0) nonconvex.insert(k);
    auto proper_ear = [&](int k) {
        if (turn(k) <= 0) return false;
        for (int r : nonconvex) {
            if (r == k || r == prv[k] || r == nxt[k]) continue;
            if (in_closed_triangle(V(prv[k]), V(k), V(nxt[k]), V(r))) return false;
        }
        return true;
    };
    auto straight_ear = [&](int k) {
        if (turn(k) != 0) return false;
        const Point& A = V(prv[k]);
        const Point& B = V(k);
        const Point& C = V(nxt[k]);
        return (A.x - B.x) * (C.x - B.x) + (A.y - B.y) * (C.y - B.y) < 0;
    };
    auto clip = [&](int k) {
        int a = prv[k], c = nxt[k];
        out.push_back(make_edge(poly[a], poly[c]));
        nxt[a] = c;
        prv[c] = a;
        nonconvex.erase(k);
        for (int x : {a, c}) {
            if (turn(x) <= 0) nonconvex.insert(x);
            else nonconvex.erase(x);
        }
        return a;
    };
    int left = m, k = 0, misses = 0;
    while (left > 3) {
        if (proper_ear(k)) {
            k = clip(k);
            --left;
            misses = 0;
            continue;
        }
        k = nxt[k];
        if (++misses < left) continue;
        // A full round without a proper ear.
        bool cut = false;
        for (int t = 0; t < left && !cut; ++t, k = nxt[k])
            if (straight_ear(k)) {
                k = clip(k);
                --left;
                cut = true;
            }
        if (!cut) throw GeometryError(GeomErrc::NonSimple, "star face has no ear");
        misses = 0;
    }
}

}  // namespace

ConstrainedTriangulation build_constrained_triangulation(const PiecewiseConvexPolygon& P) {
    const int n = P.n();
    if (n < 3) throw GeometryError(GeomErrc::DegenerateInput, "constrained triangulation needs n >= 3");
    ConstrainedTriangulation ct;
    ct.rooms = classify_rooms(P);
    for (int i = 0; i < n; ++i) ct.edges[make_edge(i, (i + 1) % n)] = {DiagKind::BoundaryArc, i};
    std::vector<Edge> chords;
    auto add_chord = [&](int a, int b, DiagKind kind, int room) {
        if (is_boundary_pair(n, a, b)) return;
        Edge e = make_edge(a, b);
        if (ct.edges.count(e)) return;
        ct.edges[e] = {kind, room};
        chords.push_back(e);
    };
    std::set<std::array<int, 3>> crescent;
    std::map<std::array<int, 3>, int> crescent_room;
    for (const Room& r : ct.rooms) {
        if (r.status != RoomStatus::NonEmpty) continue;
        const auto& C = r.C;
        for (std::size_t j = 0; j + 1 < C.size(); ++j) add_chord(C[j], C[j + 1], DiagKind::ChainDiagonal, r.index);
        for (std::size_t j = 2; j + 1 < C.size(); ++j) add_chord(C[0], C[j], DiagKind::WeakDiagonal, r.index);
        for (std::size_t j = 1; j + 1 < C.size(); ++j) {
            std::array<int, 3> tri{C[0], C[j], C[j + 1]};
            std::sort(tri.begin(), tri.end());
            crescent_room[tri] = r.index;
        }
    }
    {
        // Chords of a convex n-gon must nest as intervals.
        std::vector<Edge> sorted = chords;
        std::sort(sorted.begin(), sorted.end(), [](Edge x, Edge y) { return x.a < y.a || (x.a == y.a && x.b > y.b); });
        std::vector<Edge> stack;
        for (Edge e : sorted) {
            while (!stack.empty() && stack.back().b <= e.a) stack.pop_back();
            if (!stack.empty() && e.b > stack.back().b)
                throw GeometryError(GeomErrc::NonSimple, "hull chains of two rooms cross");
            stack.push_back(e);
        }
    }
    std::vector<Edge> stars;
    for (auto& face : trace_faces(n, chords)) {
        if (face.size() == 3) continue;
        clip_ears(P, face, stars);
    }
    for (Edge e : stars) {
        if (ct.edges.count(e)) continue;
        ct.edges[e] = {DiagKind::StarDiagonal, -1};
        chords.push_back(e);
    }
    try {
        ct.graph = TriangulationGraph::build(n, chords);
    } catch (const GraphError& e) {
        throw GeometryError(GeomErrc::NonSimple, std::string("triangulation is inconsistent: ") + e.what());
    }
    for (const auto& tri : ct.graph.triangles()) {
        auto it = crescent_room.find(tri);
        if (it == crescent_room.end()) {
            ct.classes.push_back(TriangleClass::StarTriangle);
            ct.triangle_room.push_back(-1);
            continue;
        }
        bool weak = false;
        for (auto [u, v] : {std::pair{tri[0], tri[1]}, {tri[1], tri[2]}, {tri[0], tri[2]}})
            weak = weak || ct.edges.at(make_edge(u, v)).kind == DiagKind::WeakDiagonal;
        ct.classes.push_back(weak ? TriangleClass::WeakTriangle : TriangleClass::CrescentTriangle);
        ct.triangle_room.push_back(it->second);
    }
    return ct;
}

// ---- guard sets ----

void GuardSet::normalize() {
    std::sort(guards.begin(), guards.end());
    guards.erase(std::unique(guards.begin(), guards.end()), guards.end());
}

int boundary_arc_index(int n, Edge e) {
    if (e.b == e.a + 1) return e.a;
    if (e.a == 0 && e.b == n - 1) return n - 1;
    throw GraphError(GraphErrc::NotBoundary, "not a boundary edge");
}

GuardSet mobile_guards_from_diag_set(const ConstrainedTriangulation& ct, const DominatingSet& d) {
    if (!is_2_dominated(ct.graph, d)) throw GeometryError(GeomErrc::NotDominating, "set does not 2-dominate");
    const int n = ct.graph.n();
    GuardSet g{GuardMode::MobileGuards, {}};
    for (Edge e : d.members) {
        const EdgeInfo& info = ct.info(e);
        if (info.kind == DiagKind::BoundaryArc) {
            g.guards.push_back({Guard::Kind::Arc, boundary_arc_index(n, e), {}});
        } else if (info.kind == DiagKind::WeakDiagonal) {
            g.guards.push_back({Guard::Kind::Arc, info.room, {}});
        } else {
            g.guards.push_back({Guard::Kind::Diagonal, -1, e});
        }
    }
    g.normalize();
    return g;
}

GuardSet edge_guards_from_edge_set(const ConstrainedTriangulation& ct, const DominatingSet& d) {
    const int n = ct.graph.n();
    GuardSet g{GuardMode::EdgeGuards, {}};
    for (Edge e : d.members) {
        if (!ct.graph.is_boundary(e.a, e.b))
            throw GeometryError(GeomErrc::NonEdgeMember, "member is not a boundary edge");
        g.guards.push_back({Guard::Kind::Arc, boundary_arc_index(n, e), {}});
    }
    if (!is_2_dominated(ct.graph, d)) throw GeometryError(GeomErrc::NotDominating, "set does not 2-dominate");
    g.normalize();
    return g;
}

int guard_bound(GuardStrategy s, int n) {
    switch (s) {
        case GuardStrategy::MobileN3: return (n + 1) / 3;
        case GuardStrategy::EdgeQ: return n == 4 ? 2 : (2 * n + 1) / 5;
        case GuardStrategy::EdgeLinear: return (n == 2 || n == 4) ? (3 * n) / 7 + 1 : (3 * n) / 7;
    }
    return n;
}

GuardSet guard_piecewise_convex(const PiecewiseConvexPolygon& P, GuardStrategy s, AlgoStats* stats) {
    GuardMode mode = s == GuardStrategy::MobileN3 ? GuardMode::MobileGuards : GuardMode::EdgeGuards;
    if (P.n() == 2) return GuardSet{mode, {{Guard::Kind::Arc, 0, {}}}};
    auto ct = build_constrained_triangulation(P);
    switch (s) {
        case GuardStrategy::MobileN3: return mobile_guards_from_diag_set(ct, diag_2dominate_linear(ct.graph, stats));
        case GuardStrategy::EdgeQ: return edge_guards_from_edge_set(ct, edge_2dominate_quadratic(ct.graph, stats));
        case GuardStrategy::EdgeLinear: return edge_guards_from_edge_set(ct, edge_2dominate_linear(ct.graph, stats));
    }
    return {};
}

}  // namespace gg
