#include "render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <sstream>

namespace gg::cli {

namespace {

constexpr double kThin = 1.0, kThick = 4.0;

// Fixed-precision output keeps the bytes stable across runs.
std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v == 0 ? 0.0 : v);
    return buf;
}

// y-up: every emitted y is negated, the viewBox covers the flipped box.
class Svg {
public:
    Svg(double x0, double y0, double x1, double y1) {
        double m = 0.05 * std::max({x1 - x0, y1 - y0, 1e-9});
        x0 -= m, y0 -= m, x1 += m, y1 += m;
        scale_ = std::max(x1 - x0, y1 - y0) / 100.0;
        out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(x0) << ' ' << num(-y1) << ' '
             << num(x1 - x0) << ' ' << num(y1 - y0) << "\">\n";
    }

    std::string pt(PointD p) const { return num(p.x) + ' ' + num(-p.y); }

    void path(const std::string& d, double width, bool dashed, const char* color) {
        out_ << "<path d=\"" << d << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
             << num(width * scale_) << '"';
        if (dashed) out_ << " stroke-dasharray=\"" << num(3 * scale_) << ' ' << num(2 * scale_) << '"';
        out_ << "/>\n";
    }

    void dot(PointD p, const std::string& label) {
        out_ << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(-p.y) << "\" r=\"" << num(1.2 * scale_)
             << "\" fill=\"black\"/>\n";
        out_ << "<text x=\"" << num(p.x + 1.5 * scale_) << "\" y=\"" << num(-p.y - 1.5 * scale_) << "\" font-size=\""
             << num(3.5 * scale_) << "\">" << label << "</text>\n";
    }

    void fill(const std::string& d) { out_ << "<path d=\"" << d << "\" fill=\"#eef2f7\" stroke=\"none\"/>\n"; }

    std::string finish() {
        out_ << "</svg>\n";
        return out_.str();
    }

private:
    std::ostringstream out_;
    double scale_ = 1;
};

std::string line(const Svg& s, PointD a, PointD b) { return "M " + s.pt(a) + " L " + s.pt(b); }

// SVG arc command from a.p to a.q. The flip to y-down mirrors the sweep.
std::string arc_cmd(const Svg& s, const ConvexArc& a) {
    PointD q = to_double(a.q);
    if (a.kind == ArcKind::Segment) return "L " + s.pt(q);
    int side = orient(a.p, a.q, a.center);
    bool ccw = a.orientation == ArcOrientation::CCW;
    bool large = ccw ? side < 0 : side > 0;
    std::string r = num(a.radius());
    return "A " + r + ' ' + r + " 0 " + (large ? "1" : "0") + ' ' + (ccw ? "0" : "1") + ' ' + s.pt(q);
}

}  // namespace

std::string render_graph(const TriangulationGraph& t, const DominatingSet* d) {
    int n = t.n();
    std::vector<PointD> pos(n);
    for (int i = 0; i < n; ++i) {
        double a = std::numbers::pi / 2 + 2 * std::numbers::pi * i / n;
        pos[i] = {std::cos(a), std::sin(a)};
    }
    Svg s(-1, -1, 1, 1);
    for (Edge e : t.all_edges()) {
        bool member = d && d->contains(e);
        bool diag = t.is_diagonal(e.a, e.b);
        s.path(line(s, pos[e.a], pos[e.b]), member ? kThick : kThin, diag, member ? "#c0392b" : "black");
    }
    for (int i = 0; i < n; ++i) s.dot(pos[i], std::to_string(i));
    return s.finish();
}

std::string render_polygon(const PiecewiseConvexPolygon& P, const GuardSet* g) {
    double x0, y0, x1, y1;
    P.bbox(x0, y0, x1, y1);
    Svg s(x0, y0, x1, y1);
    int n = P.n();
    std::string outline = "M " + s.pt(to_double(P.vertex(0)));
    for (int i = 0; i < n; ++i) outline += ' ' + arc_cmd(s, P.arc(i));
    s.fill(outline + " Z");

    std::set<int> guard_arcs;
    std::set<Edge> guard_diags;
    if (g)
        for (const Guard& x : g->guards) {
            if (x.kind == Guard::Kind::Arc) guard_arcs.insert(x.arc);
            else guard_diags.insert(x.diagonal);
        }
    try {
        auto ct = build_constrained_triangulation(P);
        for (Edge e : ct.graph.diagonals())
            if (!guard_diags.count(e)) s.path(line(s, to_double(P.vertex(e.a)), to_double(P.vertex(e.b))), kThin, true, "gray");
    } catch (const GeometryError&) {
        // Degenerate input: outline only.
    }
    for (int i = 0; i < n; ++i) {
        bool member = guard_arcs.count(i) > 0;
        s.path("M " + s.pt(to_double(P.vertex(i))) + ' ' + arc_cmd(s, P.arc(i)), member ? kThick : kThin, false,
               member ? "#c0392b" : "black");
    }
    for (Edge e : guard_diags)
        s.path(line(s, to_double(P.vertex(e.a)), to_double(P.vertex(e.b))), kThick, true, "#c0392b");
    for (int i = 0; i < n; ++i) s.dot(to_double(P.vertex(i)), std::to_string(i));
    return s.finish();
}

}  // namespace gg::cli
