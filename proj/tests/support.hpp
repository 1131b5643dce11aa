#pragma once

// Helpers shared by the unit tests and the acceptance binary.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "gg/geometry.hpp"
#include "gg/io.hpp"
#include "gg/trigraph.hpp"

namespace gg::testing {

// Circular arc p -> q with center beta * |pq| left of the chord midpoint.
inline ArcShape bulge(const Point& p, const Point& q, const Rational& beta) {
    Rational mx = (p.x + q.x) / 2, my = (p.y + q.y) / 2;
    return {ArcKind::Circular, {mx - beta * (q.y - p.y), my + beta * (q.x - p.x)}, ArcOrientation::CCW};
}

// Random monotone polygon: corners at distinct integer x, upper ones in
// y in [1, 3], lower ones in [-3, -1], shared extreme vertices at y = 0.
// Chain edges are segments or shallow outward arcs.
inline PiecewiseConvexPolygon random_monotone(int n, std::mt19937_64& rng) {
    std::vector<int> up, lo;
    for (int x = 1; x <= n - 2; ++x) (rng() % 2 ? up : lo).push_back(x);
    auto y = [&](bool upper) {
        long long t = 10 + static_cast<long long>(rng() % 21);
        return Rational(upper ? t : -t, 10);
    };
    std::vector<Point> v{{Rational(0), Rational(0)}};
    for (int x : lo) v.push_back({Rational(x), y(false)});
    v.push_back({Rational(n - 1), Rational(0)});
    for (auto it = up.rbegin(); it != up.rend(); ++it) v.push_back({Rational(*it), y(true)});
    std::vector<ArcShape> a;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (rng() % 2) a.push_back({});
        else a.push_back(bulge(v[i], v[(i + 1) % v.size()], Rational(2)));
    }
    return PiecewiseConvexPolygon(v, a);
}

struct PropertyReport {
    int instances = 0;
    std::map<std::string, int> failures;  // property -> failing instances
    std::vector<std::string> messages;    // first few failures

    bool ok() const {
        for (const auto& [k, v] : failures)
            if (v) return false;
        return true;
    }
};

// Type-invariant checks on `instances` random graphs and polygons.
inline PropertyReport run_property_suite(int instances, std::uint64_t seed) {
    PropertyReport rep;
    rep.instances = instances;
    for (const char* k : {"graph counts", "contraction", "split/glue", "visibility symmetry", "json round trip"})
        rep.failures[k] = 0;
    std::mt19937_64 rng(seed);
    auto fail = [&](const std::string& prop, int i, const std::string& why) {
        ++rep.failures[prop];
        if (rep.messages.size() < 10) rep.messages.push_back(prop + " #" + std::to_string(i) + ": " + why);
    };
    for (int i = 0; i < instances; ++i) {
        int n = 3 + static_cast<int>(rng() % 48);
        auto t = random_triangulation(n, rng());
        try {
            check_invariants(t);
            if (static_cast<int>(t.all_edges().size()) != 2 * n - 3 || static_cast<int>(t.triangles().size()) != n - 2 ||
                static_cast<int>(t.diagonals().size()) != n - 3)
                fail("graph counts", i, "n=" + std::to_string(n));
        } catch (const std::exception& e) {
            fail("graph counts", i, e.what());
        }

        if (n >= 4) {
            auto be = t.boundary_edges();
            Edge e = be[rng() % be.size()];
            try {
                auto c = contract_edge(t, e);
                check_invariants(c.graph);
                bool good = c.graph.n() == n - 1;
                for (Edge f : t.all_edges())
                    if (f != e) good = good && c.graph.has_edge(c.map.old_to_new[f.a], c.map.old_to_new[f.b]);
                if (!good) fail("contraction", i, "edge lost");
            } catch (const std::exception& ex) {
                fail("contraction", i, ex.what());
            }
            Edge d = t.diagonals()[rng() % t.diagonals().size()];
            try {
                auto s = split_along(t, d);
                if (s.t1.n() + s.t2.n() != n + 2 || !(glue(s, n) == t)) fail("split/glue", i, "mismatch");
            } catch (const std::exception& ex) {
                fail("split/glue", i, ex.what());
            }
        }

        auto poly = random_monotone(4 + static_cast<int>(rng() % 17), rng);
        auto pts = interior_samples(poly, 8);
        PointD p = pts[rng() % pts.size()], q = pts[rng() % pts.size()];
        if (is_visible(poly, p, q) != is_visible(poly, q, p)) fail("visibility symmetry", i, "asymmetric pair");

        DominatingSet ds{rng() % 2 ? DomMode::EdgeOnly : DomMode::DiagonalAllowed, {}};
        for (Edge e : t.all_edges())
            if (rng() % 3 == 0) ds.members.push_back(e);
        ds.normalize();
        GuardSet gs{rng() % 2 ? GuardMode::EdgeGuards : GuardMode::MobileGuards, {}};
        for (int a = 0; a < poly.n(); ++a)
            if (rng() % 3 == 0) gs.guards.push_back({Guard::Kind::Arc, a, {}});
        if (gs.mode == GuardMode::MobileGuards && poly.n() >= 4) gs.guards.push_back({Guard::Kind::Diagonal, -1, {0, 2}});
        gs.normalize();
        try {
            std::string jg = graph_to_json(t), jd = dominating_set_to_json(ds), jp = polygon_to_json(poly),
                        js = guard_set_to_json(gs);
            bool good = graph_from_json(jg) == t && dominating_set_from_json(jd) == ds && polygon_from_json(jp) == poly &&
                        guard_set_from_json(js) == gs;
            good = good && graph_to_json(graph_from_json(jg)) == jg && polygon_to_json(polygon_from_json(jp)) == jp;
            if (!good) fail("json round trip", i, "value changed");
        } catch (const std::exception& ex) {
            fail("json round trip", i, ex.what());
        }
    }
    return rep;
}

}  // namespace gg::testing
