#include "geom_detail.hpp"

#include <algorithm>

namespace gg::detail {

DArc to_darc(const ConvexArc& a) {
    DArc d;
    d.p = to_double(a.p);
    d.q = to_double(a.q);
    if (a.kind == ArcKind::Circular) {
        d.circular = true;
        d.c = to_double(a.center);
        d.r = a.radius();
    }
    return d;
}

bool on_arc_side(const DArc& a, PointD x) {
    double len = dist(a.p, a.q);
    return cross(a.p, a.q, x) <= kEps * len;
}

namespace {

void push_clamped(std::vector<double>& out, double t) {
    if (t < -kEps || t > 1 + kEps) return;
    out.push_back(std::clamp(t, 0.0, 1.0));
}

}  // namespace

void segment_hits(const DArc& a, PointD s0, PointD s1, std::vector<double>& out) {
    PointD d{s1.x - s0.x, s1.y - s0.y};
    double dd = d.x * d.x + d.y * d.y;
    if (dd == 0) return;
    double dl = std::sqrt(dd);
    if (!a.circular) {
        PointD e{a.q.x - a.p.x, a.q.y - a.p.y};
        double el = std::hypot(e.x, e.y);
        double denom = d.x * e.y - d.y * e.x;
        PointD f{a.p.x - s0.x, a.p.y - s0.y};
        if (std::abs(denom) <= 1e-12 * dl * el) {
            if (std::abs(d.x * f.y - d.y * f.x) / dl > kEps) return;
            auto proj = [&](PointD x) { return ((x.x - s0.x) * d.x + (x.y - s0.y) * d.y) / dd; };
            double ta = proj(a.p), tb = proj(a.q);
            double lo = std::max(0.0, std::min(ta, tb)), hi = std::min(1.0, std::max(ta, tb));
            if (lo <= hi + kEps / dl) {
                out.push_back(std::clamp(lo, 0.0, 1.0));
                out.push_back(std::clamp(hi, 0.0, 1.0));
            }
            return;
        }
        double t = (f.x * e.y - f.y * e.x) / denom;
        double u = (f.x * d.y - f.y * d.x) / denom;
        if (u < -kEps / el || u > 1 + kEps / el) return;
        push_clamped(out, t);
        return;
    }
    PointD f{s0.x - a.c.x, s0.y - a.c.y};
    double t0 = -(f.x * d.x + f.y * d.y) / dd;
    PointD m{f.x + t0 * d.x, f.y + t0 * d.y};
    double h2 = a.r * a.r - (m.x * m.x + m.y * m.y);
    if (h2 < -2 * kEps * a.r) return;
    double dt = std::sqrt(std::max(0.0, h2)) / dl;
    for (double t : {t0 - dt, t0 + dt}) {
        if (t < -kEps / dl || t > 1 + kEps / dl) continue;
        PointD x{s0.x + t * d.x, s0.y + t * d.y};
        if (on_arc_side(a, x)) out.push_back(std::clamp(t, 0.0, 1.0));
    }
}

std::vector<PointD> arc_intersections(const DArc& a, const DArc& b) {
    std::vector<PointD> pts;
    if (!a.circular || !b.circular) {
        const DArc& s = a.circular ? b : a;
        const DArc& o = a.circular ? a : b;
        std::vector<double> ts;
        segment_hits(o, s.p, s.q, ts);
        for (double t : ts) pts.push_back({s.p.x + t * (s.q.x - s.p.x), s.p.y + t * (s.q.y - s.p.y)});
        return pts;
    }
    double d = dist(a.c, b.c);
    if (d < kEps) {
        if (std::abs(a.r - b.r) > kEps) return pts;
        for (PointD x : {a.p, a.q})
            if (on_arc_side(b, x)) pts.push_back(x);
        for (PointD x : {b.p, b.q})
            if (on_arc_side(a, x)) pts.push_back(x);
        return pts;
    }
    if (d > a.r + b.r + kEps || d < std::abs(a.r - b.r) - kEps) return pts;
    double l = (a.r * a.r - b.r * b.r + d * d) / (2 * d);
    double h = std::sqrt(std::max(0.0, a.r * a.r - l * l));
    PointD u{(b.c.x - a.c.x) / d, (b.c.y - a.c.y) / d};
    PointD m{a.c.x + l * u.x, a.c.y + l * u.y};
    for (double sg : {-1.0, 1.0}) {
        PointD x{m.x - sg * h * u.y, m.y + sg * h * u.x};
        if (on_arc_side(a, x) && on_arc_side(b, x)) pts.push_back(x);
        if (h == 0) break;
    }
    return pts;
}

double dist_to_arc(const DArc& a, PointD x) {
    if (!a.circular) {
        PointD e{a.q.x - a.p.x, a.q.y - a.p.y};
        double ee = e.x * e.x + e.y * e.y;
        double t = ee == 0 ? 0 : std::clamp(((x.x - a.p.x) * e.x + (x.y - a.p.y) * e.y) / ee, 0.0, 1.0);
        return dist(x, {a.p.x + t * e.x, a.p.y + t * e.y});
    }
    PointD v{x.x - a.c.x, x.y - a.c.y};
    double len = std::hypot(v.x, v.y);
    double ends = std::min(dist(x, a.p), dist(x, a.q));
    if (len == 0) return ends;
    PointD y{a.c.x + a.r * v.x / len, a.c.y + a.r * v.y / len};
    if (on_arc_side(a, y)) return std::min(ends, std::abs(len - a.r));
    return ends;
}

Box arc_box(const DArc& a) {
    Box b{std::min(a.p.x, a.q.x), std::min(a.p.y, a.q.y), std::max(a.p.x, a.q.x), std::max(a.p.y, a.q.y)};
    if (!a.circular) return b;
    for (PointD e : {PointD{1, 0}, PointD{-1, 0}, PointD{0, 1}, PointD{0, -1}}) {
        PointD x{a.c.x + a.r * e.x, a.c.y + a.r * e.y};
        if (!on_arc_side(a, x)) continue;
        b.x0 = std::min(b.x0, x.x), b.x1 = std::max(b.x1, x.x);
        b.y0 = std::min(b.y0, x.y), b.y1 = std::max(b.y1, x.y);
    }
    return b;
}

}  // namespace gg::detail
