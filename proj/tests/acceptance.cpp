// Acceptance run: one PASS/FAIL line per criterion, details indented below.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gg/diag_dominate.hpp"
#include "gg/edge_dominate.hpp"
#include "gg/geometry.hpp"
#include "gg/lowerbounds.hpp"
#include "gg/monotone.hpp"
#include "gg/oracle.hpp"
#include "support.hpp"

using namespace gg;

namespace {

using Clock = std::chrono::steady_clock;
using DomFn = DominatingSet (*)(const TriangulationGraph&, AlgoStats*);

// ---- independent reference code ----

std::uint64_t catalan_ref(int m) {
    // C_m = binom(2m, m) / (m + 1), exact in 64 bits for m <= 30.
    std::uint64_t c = 1;
    for (int i = 0; i < m; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

// Diagonal sets of every triangulation of the convex n-gon, built by
// choosing the apex over each side.
std::vector<std::vector<Edge>> triangulations_ref(int i, int j) {
    if (j - i < 2) return {{}};
    std::vector<std::vector<Edge>> out;
    for (int k = i + 1; k < j; ++k) {
        auto left = triangulations_ref(i, k), right = triangulations_ref(k, j);
        for (const auto& l : left)
            for (const auto& r : right) {
                std::vector<Edge> d = l;
                d.insert(d.end(), r.begin(), r.end());
                if (k - i >= 2) d.push_back({i, k});
                if (j - k >= 2) d.push_back({k, j});
                out.push_back(std::move(d));
            }
    }
    return out;
}

struct RefGraph {
    int n;
    std::vector<std::vector<char>> adj;
    std::vector<std::array<int, 3>> tris;

    RefGraph(int n_, const std::vector<Edge>& diags) : n(n_), adj(n_, std::vector<char>(n_, 0)) {
        for (int v = 0; v < n; ++v) adj[v][(v + 1) % n] = adj[(v + 1) % n][v] = 1;
        for (Edge e : diags) adj[e.a][e.b] = adj[e.b][e.a] = 1;
        // In a maximal outerplanar graph every 3-cycle bounds a face.
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    if (adj[a][b] && adj[b][c] && adj[a][c]) tris.push_back({a, b, c});
    }
    bool boundary(Edge e) const { return (e.b - e.a + n) % n == 1 || (e.a - e.b + n) % n == 1; }
};

// Empty string when members 2-dominate g in the given mode.
std::string check_ref(const RefGraph& g, const std::vector<Edge>& members, bool edge_only) {
    std::vector<char> cov(g.n, 0);
    for (Edge e : members) {
        if (e.a < 0 || e.b >= g.n || !g.adj[e.a][e.b]) return "member is not an edge";
        if (edge_only && !g.boundary(e)) return "diagonal in an edge-only set";
        cov[e.a] = cov[e.b] = 1;
    }
    for (const auto& t : g.tris)
        if (cov[t[0]] + cov[t[1]] + cov[t[2]] < 2) return "under-dominated triangle";
    return "";
}

int diag_bound_ref(int n) { return (n + 1) / 3; }
int edge_quad_ref(int n) { return n == 4 ? 2 : (2 * n + 1) / 5; }
// A quadrilateral needs two edges, one more than 3n/7 allows.
int edge_lin_ref(int n) { return n == 4 ? 2 : 3 * n / 7; }

// Smallest 2-dominating set by trying subsets of increasing size.
int min_ref(const RefGraph& g, bool edge_only) {
    std::vector<Edge> cand;
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            if (g.adj[a][b] && (!edge_only || g.boundary({a, b}))) cand.push_back({a, b});
    const int m = static_cast<int>(cand.size());
    for (int k = 0; k <= m; ++k) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            std::vector<Edge> pick;
            for (int i : idx) pick.push_back(cand[i]);
            if (check_ref(g, pick, edge_only).empty()) return k;
            int i = k - 1;
            while (i >= 0 && idx[i] == m - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return -1;
}

// ---- reporting ----

struct Line {
    bool pass = true;
    std::string summary;
    std::vector<std::string> detail;
    void fail(const std::string& why) {
        pass = false;
        if (detail.size() < 12) detail.push_back("violation: " + why);
    }
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

int failures = 0;

void report(int id, const std::function<Line()>& body) {
    auto t0 = Clock::now();
    Line l;
    try {
        l = body();
    } catch (const std::exception& e) {
        l.pass = false;
        l.summary = std::string("exception: ") + e.what();
    }
    double s = std::chrono::duration<double>(Clock::now() - t0).count();
    if (!l.pass) ++failures;
    std::printf("%s [%d] %s (%.1fs)\n", l.pass ? "PASS" : "FAIL", id, l.summary.c_str(), s);
    for (const auto& d : l.detail) std::printf("       %s\n", d.c_str());
    std::fflush(stdout);
}

// ---- criteria ----

Line exhaustive(bool edge_only, const std::vector<std::pair<std::string, DomFn>>& algos,
                const std::vector<std::function<int(int)>>& bounds) {
    Line l;
    DomMode mode = edge_only ? DomMode::EdgeOnly : DomMode::DiagonalAllowed;
    std::uint64_t total = 0;
    for (int n = 3; n <= 12; ++n) {
        auto sets = triangulations_ref(0, n - 1);
        if (sets.size() != catalan_ref(n - 2)) l.fail(fmt("n=%d: %zu reference triangulations", n, sets.size()));
        total += sets.size();
        for (std::size_t a = 0; a < algos.size(); ++a) {
            DomFn fn = algos[a].second;
            // Library route: enumeration, validity, bound and oracle cross-check.
            auto rep = check_bound_exhaustive(
                n, mode, [fn](const TriangulationGraph& t) { return fn(t, nullptr); }, bounds[a], true);
            if (rep.instances != catalan_ref(n - 2)) l.fail(fmt("n=%d %s: %llu instances", n, algos[a].first.c_str(),
                                                                 static_cast<unsigned long long>(rep.instances)));
            for (const auto& v : rep.violations) l.fail(fmt("n=%d %s: %s", n, algos[a].first.c_str(), v.reason.c_str()));
            // Reference route: own enumeration, own validity and size check.
            for (const auto& diags : sets) {
                RefGraph g(n, diags);
                auto d = fn(TriangulationGraph::build(n, diags), nullptr);
                std::string why = check_ref(g, d.members, edge_only);
                if (d.mode != mode) why = "wrong mode";
                if (why.empty() && static_cast<int>(d.size()) > bounds[a](n))
                    why = fmt("size %zu > %d", d.size(), bounds[a](n));
                if (!why.empty()) l.fail(fmt("n=%d %s: %s", n, algos[a].first.c_str(), why.c_str()));
            }
        }
    }
    std::string names;
    for (const auto& a : algos) names += (names.empty() ? "" : ", ") + a.first;
    l.summary = fmt("%s: %llu triangulations (n=3..12), both routes, 0 violations allowed", names.c_str(),
                    static_cast<unsigned long long>(total));
    return l;
}

Line tightness() {
    Line l;
    auto check = [&](const std::string& name, const TriangulationGraph& t, bool edge_only, int expect) {
        std::vector<Edge> diags = t.diagonals();
        int lib = min_2dominating_set(t, edge_only ? DomMode::EdgeOnly : DomMode::DiagonalAllowed).size;
        int ref = min_ref(RefGraph(t.n(), diags), edge_only);
        l.detail.push_back(fmt("%s n=%d %s optimum: oracle %d, subset search %d, expected %d", name.c_str(), t.n(),
                               edge_only ? "edge" : "diagonal", lib, ref, expect));
        if (lib != expect || ref != expect) l.fail(name);
    };
    check("gamma7", gamma7(), true, 3);
    check("gamma12", gen_edge_lb_glued(2), true, 5);
    for (int n : {8, 9, 10}) check("diag-lb", gen_diag_lb(n / 3, n - 3 * (n / 3) + 1), false, diag_bound_ref(n));
    l.summary = "oracle tightness: gamma7 = 3, gamma12 = 5, diag lower bounds n=8,9,10 (exact equality)";
    return l;
}

Line separating() {
    Line l;
    std::uint64_t calls = 0;
    for (int n = 4; n <= 12; ++n)
        for (const auto& diags : triangulations_ref(0, n - 1)) {
            auto t = TriangulationGraph::build(n, diags);
            for (int lambda = 2; 2 * lambda <= n; ++lambda) {
                ++calls;
                auto s = find_separating_diagonal(t, lambda);
                // Smallest side of at least lambda edges over all diagonals.
                int best = n;
                for (Edge d : diags)
                    for (int k : {d.b - d.a, n - (d.b - d.a)})
                        if (k >= lambda) best = std::min(best, k);
                Edge ends = make_edge(s.v0, (s.v0 + s.k) % n);
                std::string why;
                if (s.k < lambda || s.k > 2 * (lambda - 1)) why = fmt("k=%d outside [%d, %d]", s.k, lambda, 2 * (lambda - 1));
                else if (!(ends == make_edge(s.diagonal.a, s.diagonal.b)) || !t.is_diagonal(s.diagonal.a, s.diagonal.b))
                    why = "side does not match the diagonal";
                else if (best > 2 * (lambda - 1)) why = "reference search finds no diagonal in range";
                if (!why.empty()) l.fail(fmt("n=%d lambda=%d: %s", n, lambda, why.c_str()));
            }
        }
    l.summary = fmt("separating diagonal: lambda <= k <= 2(lambda-1) on %llu (triangulation, lambda) pairs, n <= 12",
                    static_cast<unsigned long long>(calls));
    return l;
}

Line pipelines() {
    Line l;
    const int density = 50;
    auto run = [&](const std::string& name, const PiecewiseConvexPolygon& P, GuardStrategy s, int lo, int hi) {
        auto g = guard_piecewise_convex(P, s);
        auto rep = verify_guard_set(P, g, density);
        auto prof = guard_visibility(P, g, density);
        std::size_t dark = 0;
        for (auto m : prof.seen_by) dark += m == 0;
        l.detail.push_back(fmt("%s n=%d: %zu guards (allowed %d..%d), verifier witnesses %zu, profile unseen %zu / %zu",
                               name.c_str(), P.n(), g.size(), lo, hi, rep.witnesses.size(), dark, prof.samples.size()));
        if (static_cast<int>(g.size()) < lo || static_cast<int>(g.size()) > hi) l.fail(name + ": guard count");
        if (!rep.covered || !rep.witnesses.empty() || dark) l.fail(name + ": uncovered samples");
    };
    run("spike, mobile", gen_spike_polygon(5), GuardStrategy::MobileN3, 16 / 3, 16 / 3);
    run("fan, edge", gen_fan_polygon(9), GuardStrategy::EdgeQ, 0, 3);
    l.summary = "geometric pipelines: spike k=5 exactly 5 mobile guards, fan n=9 at most 3 edge guards, density 50, 0 witnesses";
    return l;
}

Line monotone_tight() {
    Line l;
    const int density = 100;
    for (int variant : {1, 2}) {
        auto P = gen_monotone_lb(variant, 4);
        auto g = monotone_edge_guards(P);
        auto d = decompose(P);
        int expect = (P.n() + 1 + 3) / 4;
        std::string name = fmt("M%d n=%d", variant, P.n());
        auto prof = guard_visibility(P, g, density);
        std::size_t dark = 0;
        for (auto m : prof.seen_by) dark += m == 0;
        bool covered = verify_guard_set(P, g, density).covered && dark == 0;
        std::string arcs;
        for (const Guard& x : g.guards) arcs += (arcs.empty() ? "" : " ") + std::to_string(x.arc);
        l.detail.push_back(fmt("%s: guards on arcs %s (%zu, expected %d), covered %s", name.c_str(), arcs.c_str(),
                               g.size(), expect, covered ? "yes" : "no"));
        if (static_cast<int>(g.size()) != expect) l.fail(name + ": guard count");
        if (!covered) l.fail(name + ": not covered");
        const std::uint64_t all = (std::uint64_t{1} << g.size()) - 1;
        for (std::size_t k = 0; k < g.size(); ++k) {
            std::uint64_t rest = all & ~(std::uint64_t{1} << k);
            std::size_t count = 0, first = 0;
            for (std::size_t s = 0; s < prof.samples.size(); ++s)
                if ((prof.seen_by[s] & rest) == 0 && count++ == 0) first = s;
            GuardSet reduced = g;
            reduced.guards.erase(reduced.guards.begin() + static_cast<std::ptrdiff_t>(k));
            bool verifier_open = !verify_guard_set(P, reduced, density).covered;
            if (count) {
                PointD w = prof.samples[first];
                l.detail.push_back(fmt("%s without arc %d: %zu witnesses, first (%.3f, %.3f) in slab %d; verifier %s",
                                       name.c_str(), g.guards[k].arc, count, w.x, w.y, slab_index(d, w),
                                       verifier_open ? "agrees" : "disagrees"));
            } else {
                l.detail.push_back(fmt("%s without arc %d: no witness; verifier %s", name.c_str(), g.guards[k].arc,
                                       verifier_open ? "finds one" : "agrees"));
            }
            if (!count || !verifier_open) l.fail(fmt("%s: guard on arc %d is redundant", name.c_str(), g.guards[k].arc));
        }
    }
    l.summary = "monotone tightness: M1, M2 get ceil((n+1)/4) = 4 covering guards, each removal leaves a witness at density 100";
    return l;
}

Line scaling() {
    Line l;
    struct Algo {
        const char* name;
        DomFn fn;
        double growth;  // expected work ratio per factor 10 in n
        int (*bound)(int);
    };
    const Algo algos[] = {{"diag-linear", diag_2dominate_linear, 10, diag_bound_ref},
                          {"edge-linear", edge_2dominate_linear, 10, edge_lin_ref},
                          {"diag-contract", diag_2dominate_contraction, 100, diag_bound_ref},
                          {"edge-quadratic", edge_2dominate_quadratic, 100, edge_quad_ref}};
    const int sizes[] = {100, 1000, 10000};
    const double factor = 2.0;
    for (int kind = 0; kind < 2; ++kind) {
        std::vector<TriangulationGraph> ts;
        for (int n : sizes) ts.push_back(kind ? random_triangulation(n, 1) : fan_triangulation(n));
        for (const Algo& a : algos) {
            std::vector<double> work;
            for (const auto& t : ts) {
                AlgoStats st;
                auto d = a.fn(t, &st);
                work.push_back(static_cast<double>(st.work));
                if (!is_2_dominated(t, d) || static_cast<int>(d.size()) > a.bound(t.n()))
                    l.fail(fmt("%s n=%d: invalid or oversized result", a.name, t.n()));
                if (st.rescans) l.fail(fmt("%s n=%d: %llu rescans", a.name, t.n(), static_cast<unsigned long long>(st.rescans)));
            }
            double worst = 1;
            std::string ratios;
            for (std::size_t i = 1; i < work.size(); ++i) {
                double r = work[i] / work[i - 1] / a.growth;
                worst = std::max({worst, r, 1 / r});
                ratios += fmt(" %.2f", r);
            }
            l.detail.push_back(fmt("%s on %s: work %.0f / %.0f / %.0f, normalized ratios%s", a.name,
                                   kind ? "random" : "fans", work[0], work[1], work[2], ratios.c_str()));
            if (worst > factor) l.fail(fmt("%s on %s: ratio off by %.2f", a.name, kind ? "random" : "fans", worst));
        }
    }
    l.summary = "operation counters at n=100, 1000, 10000: linear and quadratic growth within a factor of 2";
    return l;
}

Line properties() {
    Line l;
    auto rep = testing::run_property_suite(1000, 0);
    for (const auto& [prop, count] : rep.failures) {
        l.detail.push_back(fmt("%s: %d failing instances", prop.c_str(), count));
        if (count) l.pass = false;
    }
    for (const auto& m : rep.messages) l.detail.push_back(m);
    l.summary = fmt("property suites on %d random instances, seed 0, 0 failures allowed", rep.instances);
    return l;
}

}  // namespace

int main() {
    report(1, [] {
        return exhaustive(false, {{"diag-linear", diag_2dominate_linear}, {"diag-contract", diag_2dominate_contraction}},
                          {diag_bound_ref, diag_bound_ref});
    });
    report(2, [] {
        return exhaustive(true, {{"edge-quadratic", edge_2dominate_quadratic}, {"edge-linear", edge_2dominate_linear}},
                          {edge_quad_ref, edge_lin_ref});
    });
    report(3, tightness);
    report(4, separating);
    report(5, pipelines);
    report(6, monotone_tight);
    report(7, scaling);
    report(8, properties);
    std::printf("%d of 8 criteria failed\n", failures);
    return failures ? 1 : 0;
}
