#include <cmath>
#include <numbers>

#include "gg/lowerbounds.hpp"

namespace gg {

namespace {

Rational micro(double v) { return Rational(static_cast<long long>(std::llround(v * 1e6)), 1000000LL); }

Point rounded(double x, double y) { return {micro(x), micro(y)}; }

// Circular arc p -> q whose center sits beta * |pq| to the left of the chord
// midpoint. Exact, so the center is equidistant from p and q.
ArcShape arc_through(const Point& p, const Point& q, const Rational& beta) {
    Rational mx = (p.x + q.x) / 2, my = (p.y + q.y) / 2;
    Rational dx = q.x - p.x, dy = q.y - p.y;
    return {ArcKind::Circular, {mx - beta * dy, my + beta * dx}, ArcOrientation::CCW};
}

const Rational kHalfDisk(3, 20);

int zipper_n(int variant, int m) {
    if (variant != 1 && variant != 2) throw LowerBoundError(LbErrc::BadVariant, "variant must be 1 or 2");
    if (m < 0) throw LowerBoundError(LbErrc::MTooSmall, "m must be >= 0");
    return variant == 1 ? 2 * m + 5 : 2 * m + 4;
}

bool is_floor(int j) { return j % 2 == 1; }

// Tooth j in 1..n. Floor teeth point up, ceiling teeth hang down past them;
// the two end teeth are pulled outwards so the end arcs close vertically.
Point zipper_tip(int j, int n) {
    Rational y = is_floor(j) ? Rational(1, 2) : Rational(0);
    if (j == 1 || j == n) y = is_floor(j) ? Rational(-1) : Rational(3, 2);
    return {Rational(j), y};
}

}  // namespace

PiecewiseConvexPolygon gen_spike_polygon(int k) {
    if (k < 3) throw LowerBoundError(LbErrc::KTooSmall, "k must be >= 3");
    const double pi = std::numbers::pi;
    const double depth = 20.0, cap = 2.0;
    std::vector<PointD> base;
    for (int i = 0; i < k; ++i) base.push_back(to_double(rounded(10 * std::cos(2 * pi * i / k), 10 * std::sin(2 * pi * i / k))));
    std::vector<Point> v;
    std::vector<ArcShape> arcs;
    for (int i = 0; i < k; ++i) {
        PointD b0 = base[i], b1 = base[(i + 1) % k];
        double vx = b1.x - b0.x, vy = b1.y - b0.y, l = std::hypot(vx, vy);
        vx /= l;
        vy /= l;
        // Outward normal is (vy, -vx) on a ccw polygon.
        double mx = (b0.x + b1.x) / 2 + depth * vy, my = (b0.y + b1.y) / 2 - depth * vx;
        Point t1 = rounded(mx - cap / 2 * vx, my - cap / 2 * vy);
        Point t2 = rounded(mx + cap / 2 * vx, my + cap / 2 * vy);
        v.push_back(rounded(b0.x, b0.y));
        v.push_back(t1);
        v.push_back(t2);
        arcs.push_back({});
        arcs.push_back(arc_through(t1, t2, Rational(1, 4)));
        arcs.push_back({});
    }
    return PiecewiseConvexPolygon(std::move(v), std::move(arcs));
}

PiecewiseConvexPolygon gen_fan_polygon(int n) {
    if (n < 3) throw LowerBoundError(LbErrc::NTooSmall, "n must be >= 3");
    const double pi = std::numbers::pi;
    std::vector<Point> v;
    for (int i = 0; i < n; ++i) v.push_back(rounded(10 * std::cos(2 * pi * i / n), 10 * std::sin(2 * pi * i / n)));
    std::vector<ArcShape> arcs;
    for (int i = 0; i < n; ++i) arcs.push_back(arc_through(v[i], v[(i + 1) % n], kHalfDisk));
    return PiecewiseConvexPolygon(std::move(v), std::move(arcs));
}

PiecewiseConvexPolygon gen_monotone_lb(int variant, int m) {
    const int n = zipper_n(variant, m);
    // ccw: floor teeth left to right, then ceiling teeth right to left.
    std::vector<int> order;
    for (int j = 1; j <= n; ++j)
        if (is_floor(j)) order.push_back(j);
    for (int j = n; j >= 1; --j)
        if (!is_floor(j)) order.push_back(j);
    std::vector<Point> v;
    for (int j : order) v.push_back(zipper_tip(j, n));
    std::vector<ArcShape> arcs;
    for (int i = 0; i < n; ++i) {
        int a = order[i], b = order[(i + 1) % n];
        // The closing arcs carry the x-extrema; the chain arcs at the
        // pulled-out end teeth are flatter so they do not curl past them.
        Rational beta = kHalfDisk;
        if (std::abs(a - b) == 1) beta = Rational(3, 10);
        else if (a == 1 || a == n || b == 1 || b == n) beta = Rational(1, 2);
        arcs.push_back(arc_through(v[i], v[(i + 1) % n], beta));
    }
    return PiecewiseConvexPolygon(std::move(v), std::move(arcs));
}

}  // namespace gg
