#include "gg/monotone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gg {

namespace {

// Boundary piece with monotone x, arcs split at their x-extrema.
struct Piece {
    int arc = 0;
    PointD a, b;
    int va = -1;  // vertex at a, -1 for an arc extremum
    int sign = 0;
};

int sgn(double v, double eps) { return v > eps ? 1 : (v < -eps ? -1 : 0); }

std::vector<Piece> pieces(const PiecewiseConvexPolygon& P) {
    const int n = P.n();
    std::vector<Piece> out;
    for (int i = 0; i < n; ++i) {
        ConvexArc arc = P.arc(i);
        PointD p = to_double(arc.p), q = to_double(arc.q);
        std::vector<std::pair<double, PointD>> cuts;  // (parameter, point)
        if (arc.kind == ArcKind::Circular) {
            PointD c = to_double(arc.center);
            double r = arc.radius();
            double a0 = std::atan2(p.y - c.y, p.x - c.x);
            double a1 = std::atan2(q.y - c.y, q.x - c.x);
            double sweep = a1 - a0;
            while (sweep <= 0) sweep += 2 * std::numbers::pi;
            for (double ang : {0.0, std::numbers::pi}) {
                double t = ang - a0;
                while (t < 0) t += 2 * std::numbers::pi;
                while (t >= 2 * std::numbers::pi) t -= 2 * std::numbers::pi;
                if (t > 1e-12 && t < sweep - 1e-12) cuts.push_back({t, {c.x + r * std::cos(ang), c.y + r * std::sin(ang)}});
            }
            std::sort(cuts.begin(), cuts.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        }
        PointD cur = p;
        int cur_v = i;
        double scale = std::max({1.0, std::abs(p.x), std::abs(q.x)});
        auto emit = [&](PointD nxt) {
            Piece pc{i, cur, nxt, cur_v, 0};
            pc.sign = sgn(nxt.x - cur.x, 1e-12 * scale);
            if (arc.kind == ArcKind::Segment) pc.sign = arc.q.x > arc.p.x ? 1 : (arc.q.x < arc.p.x ? -1 : 0);
            out.push_back(pc);
        };
        for (const auto& [t, pt] : cuts) {
            emit(pt);
            cur = pt;
            cur_v = -1;
        }
        emit(q);
    }
    return out;
}

bool lex_less(PointD a, PointD b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

}  // namespace

bool is_x_monotone(const PiecewiseConvexPolygon& P) {
    std::vector<int> signs;
    for (const auto& pc : pieces(P))
        if (pc.sign != 0) signs.push_back(pc.sign);
    int changes = 0;
    for (std::size_t k = 0; k < signs.size(); ++k) changes += signs[k] != signs[(k + 1) % signs.size()];
    return changes == 2;
}

MonotoneDecomposition decompose(const PiecewiseConvexPolygon& P) {
    std::vector<int> all(P.n());
    for (int i = 0; i < P.n(); ++i) all[i] = i;
    return decompose(P, all);
}

MonotoneDecomposition decompose(const PiecewiseConvexPolygon& P, const std::vector<int>& corners) {
    const int nv = P.n();
    const int n = static_cast<int>(corners.size());
    if (n < 2) throw std::invalid_argument("need at least two corners");
    for (int k = 0; k < n; ++k)
        if (corners[k] < 0 || corners[k] >= nv || (k > 0 && corners[k] <= corners[k - 1]))
            throw std::invalid_argument("corners must be sorted, unique vertex indices");
    // rank[v] = corner rank, -1 for joints; edge_of[i] = edge holding arc i.
    std::vector<int> rank(nv, -1), edge_of(nv);
    for (int k = 0; k < n; ++k) rank[corners[k]] = k;
    for (int i = 0, e = n - 1; i < nv; ++i) {
        if (rank[i] >= 0) e = rank[i];
        edge_of[i] = e;
    }
    for (int v = 0; v < nv; ++v) {
        if (rank[v] >= 0) continue;
        ConvexArc in = P.arc((v + nv - 1) % nv), out = P.arc(v);
        PointD x = to_double(P.vertex(v));
        auto tangent = [&](const ConvexArc& a) {
            if (a.kind == ArcKind::Segment) return PointD{to_double(a.q).x - to_double(a.p).x, to_double(a.q).y - to_double(a.p).y};
            PointD c = to_double(a.center);
            return PointD{-(x.y - c.y), x.x - c.x};
        };
        PointD ti = tangent(in), to = tangent(out);
        double scale = std::hypot(ti.x, ti.y) * std::hypot(to.x, to.y);
        if (ti.x * to.y - ti.y * to.x < -1e-9 * scale) throw std::invalid_argument("joint " + std::to_string(v) + " is reflex");
    }
    if (!is_x_monotone(P)) throw NotMonotoneError("polygon is not x-monotone");
    auto pcs = pieces(P);
    const int m = static_cast<int>(pcs.size());
    for (auto& pc : pcs)
        if (pc.va >= 0 && rank[pc.va] < 0) pc.va = -1;
    int L = 0, R = 0;
    for (int k = 1; k < m; ++k) {
        if (lex_less(pcs[k].a, pcs[L].a)) L = k;
        if (lex_less(pcs[R].a, pcs[k].a)) R = k;
    }
    // chain[k]: 0 lower (L -> R ccw), 1 upper (R -> L).
    std::vector<int> chain(m);
    for (int k = L, c = 0; ; k = (k + 1) % m) {
        if (k == R) c = 1;
        chain[k] = c;
        if ((k + 1) % m == L) break;
    }
    MonotoneDecomposition d;
    d.n = n;
    d.edge_arcs.assign(n, {});
    for (int i = 0; i < nv; ++i) d.edge_arcs[edge_of[i]].push_back(i);
    std::vector<int> order = corners;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Point& A = P.vertex(a);
        const Point& B = P.vertex(b);
        return A.x < B.x || (A.x == B.x && A.y < B.y);
    });
    std::vector<int> piece_of_vertex(nv, -1);
    for (int k = 0; k < m; ++k)
        if (pcs[k].va >= 0) piece_of_vertex[pcs[k].va] = k;

    auto own = [&](int v) { return rank[v]; };
    auto prev = [&](int v) { return (rank[v] + n - 1) % n; };
    d.u.push_back(pcs[L].a);
    d.vertex.push_back(pcs[L].va);
    for (int v : order) {
        d.u.push_back(to_double(P.vertex(v)));
        d.vertex.push_back(v);
    }
    d.u.push_back(pcs[R].a);
    d.vertex.push_back(pcs[R].va);
    const int N = n + 2;
    d.sigma.assign(N, 0);
    d.e_left.assign(N, {-1, -1});
    d.e_right.assign(N, {-1, -1});
    d.e_opp.assign(N, -1);
    for (int j = 0; j < N; ++j) {
        int v = d.vertex[j];
        bool at_l = (j == 0) || (v >= 0 && v == pcs[L].va);
        bool at_r = (j == N - 1) || (v >= 0 && v == pcs[R].va);
        if (at_l || at_r) {
            d.sigma[j] = 0;
            if (v < 0) {
                int e = edge_of[pcs[at_l ? L : R].arc];
                d.e_left[j] = d.e_right[j] = {e, e};
            } else if (at_l) {
                d.e_left[j] = d.e_right[j] = {own(v), prev(v)};
            } else {
                d.e_left[j] = d.e_right[j] = {prev(v), own(v)};
            }
            continue;
        }
        int k = piece_of_vertex[v];
        if (chain[k] == 0) {
            d.sigma[j] = -1;
            d.e_left[j] = {prev(v), prev(v)};
            d.e_right[j] = {own(v), own(v)};
        } else {
            d.sigma[j] = 1;
            d.e_left[j] = {own(v), own(v)};
            d.e_right[j] = {prev(v), prev(v)};
        }
    }
    for (int j = 1; j + 1 < N; ++j) {
        int want = d.sigma[j] == 1 ? 0 : 1;
        double x = d.u[j].x;
        int best = -1;
        double gap = std::numeric_limits<double>::infinity();
        for (int k = 0; k < m; ++k) {
            if (chain[k] != want) continue;
            double lo = std::min(pcs[k].a.x, pcs[k].b.x), hi = std::max(pcs[k].a.x, pcs[k].b.x);
            if (lo <= x && x < hi) {
                best = k;
                break;
            }
            double g = x < lo ? lo - x : x - hi;
            if (g < gap) {
                gap = g;
                best = k;
            }
        }
        d.e_opp[j] = edge_of[pcs[best].arc];
    }
    return d;
}

int slab_index(const MonotoneDecomposition& d, PointD x) {
    int j = 0;
    while (j + 1 < d.n + 1 && d.u[j + 1].x <= x.x) ++j;
    return j;
}

namespace {

std::vector<int> select_edges(const MonotoneDecomposition& d) {
    const int n = d.n;
    if (n == 2) return {0};
    const auto& s = d.sigma;
    // Edge on u_j's chain, or for an extreme vertex on the chain away from u_ref.
    auto pick = [&](const std::vector<std::array<int, 2>>& e, int j, int ref) {
        if (s[j] != 0) return e[j][s[j] == 1 ? 1 : 0];
        return e[j][s[ref] == 1 ? 0 : 1];
    };
    std::vector<int> out;
    const int groups = (n + 1 + 3) / 4;
    for (int gi = 0; gi < groups; ++gi) {
        // The last group is shifted left so that u_b..u_{b+4} exist.
        int b = std::min(4 * gi, n - 3);
        if (s[b + 1] != s[b + 2]) {
            out.push_back(pick(d.e_right, b + 1, b + 2));
        } else if (s[b + 2] != s[b + 3]) {
            out.push_back(pick(d.e_left, b + 3, b + 2));
        } else if (s[b] != s[b + 1]) {
            out.push_back(pick(d.e_right, b, b + 1));
        } else if (s[b + 3] != s[b + 4]) {
            out.push_back(pick(d.e_left, b + 4, b + 3));
        } else {
            out.push_back(d.e_opp[b + 2]);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

GuardSet monotone_edge_guards(const PiecewiseConvexPolygon& P) {
    GuardSet g{GuardMode::EdgeGuards, {}};
    for (int e : select_edges(decompose(P))) g.guards.push_back({Guard::Kind::Arc, e, {}});
    g.normalize();
    return g;
}

std::vector<int> monotone_edge_guards(const PiecewiseConvexPolygon& P, const std::vector<int>& corners) {
    return select_edges(decompose(P, corners));
}

}  // namespace gg
