#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "geom_detail.hpp"
#include "gg/geometry.hpp"

namespace gg {

using detail::DArc;
using detail::kEps;

namespace {

struct Scene {
    std::vector<DArc> arcs;
    std::vector<PointD> verts;
    double reach = 1;

    explicit Scene(const PiecewiseConvexPolygon& P) {
        for (int i = 0; i < P.n(); ++i) {
            arcs.push_back(detail::to_darc(P.arc(i)));
            verts.push_back(to_double(P.vertex(i)));
        }
        double x0, y0, x1, y1;
        P.bbox(x0, y0, x1, y1);
        reach = 4 * (std::hypot(x1 - x0, y1 - y0) + 1);
    }

    bool on_boundary(PointD x, double tol) const {
        for (const auto& a : arcs)
            if (detail::dist_to_arc(a, x) < tol) return true;
        return false;
    }

    // Parity of crossings along a ray; rays through a vertex are retried.
    bool inside_strict(PointD x) const {
        static constexpr double kAngles[] = {0.7231, 1.9117, 2.8543, 4.1017, 5.3311, 0.2113};
        int parity = 0;
        for (double ang : kAngles) {
            PointD far{x.x + reach * std::cos(ang), x.y + reach * std::sin(ang)};
            std::vector<double> ts;
            bool bad = false;
            for (const auto& a : arcs) {
                std::size_t before = ts.size();
                detail::segment_hits(a, x, far, ts);
                for (std::size_t k = before; k < ts.size() && !bad; ++k) {
                    PointD h{x.x + ts[k] * (far.x - x.x), x.y + ts[k] * (far.y - x.y)};
                    for (PointD v : verts) bad = bad || detail::dist(h, v) < 1e-7;
                }
                if (bad) break;
            }
            parity = static_cast<int>(ts.size() % 2);
            if (!bad) break;
        }
        return parity == 1;
    }

    bool contains(PointD x) const { return on_boundary(x, kEps) || inside_strict(x); }

    bool segment_inside(PointD p, PointD q) const {
        if (p.x == q.x && p.y == q.y) return true;
        std::vector<double> ts{0.0, 1.0};
        for (const auto& a : arcs) detail::segment_hits(a, p, q, ts);
        std::sort(ts.begin(), ts.end());
        double len = detail::dist(p, q);
        for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
            if ((ts[k + 1] - ts[k]) * len < 1e-10) continue;
            double t = (ts[k] + ts[k + 1]) / 2;
            if (!contains({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)})) return false;
        }
        return true;
    }
};

}  // namespace

bool on_boundary(const PiecewiseConvexPolygon& P, PointD p, double tol) { return Scene(P).on_boundary(p, tol); }

bool contains_point(const PiecewiseConvexPolygon& P, PointD p) { return Scene(P).contains(p); }

bool is_visible(const PiecewiseConvexPolygon& P, PointD p, PointD q) {
    Scene s(P);
    if (!s.contains(p) || !s.contains(q)) throw GeometryError(GeomErrc::PointOutside, "point outside the polygon");
    return s.segment_inside(p, q);
}

std::vector<PointD> guard_points(const PiecewiseConvexPolygon& P, const Guard& g, int count) {
    count = std::max(count, 2);
    std::vector<PointD> pts;
    if (g.kind == Guard::Kind::Arc) {
        ConvexArc a = P.arc(g.arc);
        for (int k = 0; k < count; ++k) pts.push_back(a.at(static_cast<double>(k) / (count - 1)));
    } else {
        PointD a = to_double(P.vertex(g.diagonal.a)), b = to_double(P.vertex(g.diagonal.b));
        for (int k = 0; k < count; ++k) {
            double t = static_cast<double>(k) / (count - 1);
            pts.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
        }
    }
    return pts;
}

std::vector<PointD> interior_samples(const PiecewiseConvexPolygon& P, int density) {
    density = std::max(density, 1);
    Scene s(P);
    double x0, y0, x1, y1;
    P.bbox(x0, y0, x1, y1);
    std::vector<PointD> out;
    auto keep = [&](PointD x) {
        if (!s.on_boundary(x, 1e-7) && s.inside_strict(x)) out.push_back(x);
    };
    for (int i = 0; i < density; ++i)
        for (int j = 0; j < density; ++j)
            keep({x0 + (i + 0.5) / density * (x1 - x0), y0 + (j + 0.5) / density * (y1 - y0)});
    int du = density, df = std::max(3, density / 10);
    for (int r = 0; r < P.n(); ++r) {
        ConvexArc a = P.arc(r);
        if (a.kind != ArcKind::Circular) continue;
        PointD p = to_double(a.p), q = to_double(a.q);
        for (int i = 0; i < du; ++i) {
            double u = (i + 0.5) / du;
            PointD on = a.at(u);
            PointD ch{p.x + u * (q.x - p.x), p.y + u * (q.y - p.y)};
            for (int j = 0; j < df; ++j) {
                double f = (j + 0.5) / df;
                keep({ch.x + f * (on.x - ch.x), ch.y + f * (on.y - ch.y)});
            }
        }
    }
    return out;
}

VisibilityProfile guard_visibility(const PiecewiseConvexPolygon& P, const GuardSet& g, int density) {
    if (g.guards.size() > 64) throw std::invalid_argument("guard_visibility supports at most 64 guards");
    Scene s(P);
    VisibilityProfile prof;
    prof.samples = interior_samples(P, density);
    std::vector<std::vector<PointD>> gp;
    for (const Guard& gd : g.guards) gp.push_back(guard_points(P, gd, 64));
    prof.seen_by.assign(prof.samples.size(), 0);
    unsigned threads = std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            // Neighbouring samples tend to be seen from the same guard point.
            std::vector<std::size_t> hint(gp.size(), 0);
            for (std::size_t k = t; k < prof.samples.size(); k += threads)
                for (std::size_t j = 0; j < gp.size(); ++j)
                    for (std::size_t i = 0; i < gp[j].size(); ++i) {
                        std::size_t at = (hint[j] + i) % gp[j].size();
                        if (s.segment_inside(gp[j][at], prof.samples[k])) {
                            prof.seen_by[k] |= std::uint64_t{1} << j;
                            hint[j] = at;
                            break;
                        }
                    }
        });
    for (auto& th : pool) th.join();
    return prof;
}

CoverageReport verify_guard_set(const PiecewiseConvexPolygon& P, const GuardSet& g, int density) {
    Scene s(P);
    CoverageReport rep;
    rep.caveat = "sampled check: a witness refutes coverage, covered=true is not a proof";
    auto samples = interior_samples(P, density);
    std::vector<PointD> gp;
    for (const Guard& gd : g.guards) {
        auto pts = guard_points(P, gd, 64);
        gp.insert(gp.end(), pts.begin(), pts.end());
    }
    rep.interior_samples = samples.size();
    rep.guard_samples = gp.size();
    std::vector<char> seen(samples.size(), 0);
    unsigned threads = std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            std::size_t hint = 0;
            for (std::size_t k = t; k < samples.size(); k += threads)
                for (std::size_t i = 0; i < gp.size(); ++i) {
                    std::size_t at = (hint + i) % gp.size();
                    if (s.segment_inside(gp[at], samples[k])) {
                        seen[k] = 1;
                        hint = at;
                        break;
                    }
                }
        });
    for (auto& th : pool) th.join();
    for (std::size_t k = 0; k < samples.size(); ++k)
        if (!seen[k]) rep.witnesses.push_back(samples[k]);
    rep.covered = rep.witnesses.empty();
    return rep;
}

}  // namespace gg
