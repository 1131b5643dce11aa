#include "gg/diag_dominate.hpp"

#include <stdexcept>

#include "reduce.hpp"

namespace gg {

using detail::add_d;
using detail::add_e;
using detail::cov;
using detail::GuardBag;
using detail::has_d;
using detail::Reduction;
using detail::rm_d;
using detail::Side;

namespace {

std::vector<int> ear_tips(const TriangulationGraph& t) {
    std::vector<int> tips;
    for (int v = 0; v < t.n(); ++v)
        if (t.degree(v) == 2) tips.push_back(v);
    return tips;
}

DominatingSet checked(const TriangulationGraph& t, std::vector<Edge> members) {
    DominatingSet d{DomMode::DiagonalAllowed, std::move(members)};
    d.normalize();
    if (!is_2_dominated(t, d)) throw std::logic_error("small diagonal construction failed");
    return d;
}

DominatingSet seven(const TriangulationGraph& t) {
    const int n = 7;
    auto tips = ear_tips(t);
    for (std::size_t i = 0; i < tips.size(); ++i)
        for (std::size_t j = 0; j < tips.size(); ++j) {
            if (i == j) continue;
            int b1 = tips[i], b2 = tips[j];
            int a1 = (b1 + n - 1) % n, c1 = (b1 + 1) % n;
            int a2 = (b2 + n - 1) % n, c2 = (b2 + 1) % n;
            Edge d1 = make_edge(a1, c1), d2 = make_edge(a2, c2);
            std::vector<Edge> members;
            bool share = a1 == a2 || a1 == c2 || c1 == a2 || c1 == c2;
            if (share) {
                std::vector<Edge> ear_edges{make_edge(a1, b1), make_edge(b1, c1), make_edge(a2, b2), make_edge(b2, c2)};
                std::vector<Edge> cands{make_edge((a1 + n - 1) % n, a1), make_edge(c1, (c1 + 1) % n)};
                for (Edge e : cands)
                    if (std::find(ear_edges.begin(), ear_edges.end(), e) == ear_edges.end()) members = {e, d2};
            } else {
                members = {d1, d2};
            }
            DominatingSet d{DomMode::DiagonalAllowed, members};
            d.normalize();
            if (!members.empty() && is_2_dominated(t, d)) return d;
        }
    throw std::logic_error("no ear pair yields a 2-dominating set");
}

// Case analysis for sides with 4, 5 or 6 boundary edges.
Reduction linear_case(Side& s) {
    Reduction r;
    if (s.k == 4) {
        r.removed = {s.v(1), s.v(2), s.v(3)};
        r.rewrite = [s](GuardBag& b, int) mutable {
            if (!cov(b, s, 0)) s.reflect();
            if (s.has(1, 3)) {
                add_d(b, s, 1, 3);
            } else if (s.has(2, 4)) {
                add_d(b, s, 2, 4);
            } else {
                add_e(b, s, 2);
            }
        };
        return r;
    }
    if (s.k == 5) {
        if (s.apex(0, 5) == 3) s.reflect();
        r.removed = {s.v(1), s.v(3), s.v(4)};
        r.rewrite = [s](GuardBag& b, int) {
            if (has_d(b, s, 0, 2)) {
                add_e(b, s, 3);
            } else if (rm_d(b, s, 2, 5)) {
                add_d(b, s, 0, 2);
                add_e(b, s, 4);
            } else {
                add_e(b, s, 2);
            }
        };
        return r;
    }
    if (s.k != 6) throw std::logic_error("unexpected side size");
    int vp = s.apex(0, 3);
    int vpp = s.apex(3, 6);
    if (vp == 2) {
        int q = s.has(3, 5) ? 5 : 4;  // the quad v3v4v5v6 has diagonal (3,5) or (4,6)
        int qa = q == 5 ? 3 : 4, qb = q == 5 ? 5 : 6;
        r.removed = {s.v(1), s.v(4), s.v(5)};
        r.rewrite = [s, qa, qb](GuardBag& b, int) {
            if (has_d(b, s, 0, 2)) {
                add_d(b, s, qa, qb);
            } else if (has_d(b, s, 3, 6)) {
                bool v0 = cov(b, s, 0);
                rm_d(b, s, 3, 6);
                add_e(b, s, v0 ? 2 : 0);
                add_e(b, s, 5);
            } else {
                if (!rm_d(b, s, 0, 3)) rm_d(b, s, 2, 3);
                add_d(b, s, 0, 2);
                add_d(b, s, qa, qb);
            }
        };
    } else if (vpp == 4) {
        r.removed = {s.v(1), s.v(2), s.v(5)};
        r.rewrite = [s](GuardBag& b, int) {
            if (has_d(b, s, 4, 6)) {
                add_d(b, s, 1, 3);
            } else if (has_d(b, s, 0, 3)) {
                bool v6 = cov(b, s, 6);
                rm_d(b, s, 0, 3);
                add_e(b, s, 0);
                add_e(b, s, v6 ? 3 : 5);
            } else {
                if (!rm_d(b, s, 3, 6)) rm_d(b, s, 3, 4);
                add_d(b, s, 1, 3);
                add_d(b, s, 4, 6);
            }
        };
    } else {
        r.removed = {s.v(2), s.v(4), s.v(5)};
        r.rewrite = [s](GuardBag& b, int) {
            if (has_d(b, s, 1, 3)) {
                add_e(b, s, 5);
            } else if (rm_d(b, s, 0, 3)) {
                add_e(b, s, 0);
                add_d(b, s, 3, 5);
            } else if (has_d(b, s, 0, 1)) {
                add_d(b, s, 3, 5);
            } else {
                rm_d(b, s, 3, 6);
                add_d(b, s, 1, 3);
                add_e(b, s, 5);
            }
        };
    }
    return r;
}

// Sides with 3 or 4 boundary edges; k = 3 contracts the separating diagonal.
Reduction contraction_case(Side& s) {
    Reduction r;
    if (s.k == 3) {
        if (s.has(1, 3)) s.reflect();
        r.removed = {s.v(1), s.v(2)};
        r.contract = std::pair{s.v(0), s.v(3)};
        r.rewrite = [s](GuardBag& b, int need) {
            if (need == s.v(0)) {
                add_d(b, s, 0, 2);
            } else {
                add_e(b, s, 2);
            }
        };
        return r;
    }
    if (s.k != 4) throw std::logic_error("unexpected side size");
    r.removed = {s.v(1), s.v(2), s.v(3)};
    r.rewrite = [s](GuardBag& b, int) mutable {
        if (!cov(b, s, 0)) s.reflect();
        add_d(b, s, 2, 4);
    };
    return r;
}

}  // namespace

DominatingSet small_diag_set(const TriangulationGraph& t) {
    const int n = t.n();
    switch (n) {
        case 3: return checked(t, {{0, 1}});
        case 4:
        case 5: return checked(t, t.diagonals());
        case 6: {
            int b = ear_tips(t).front();
            int a = (b + n - 1) % n, c = (b + 1) % n;
            return checked(t, {make_edge((a + n - 1) % n, a), make_edge(c, (c + 1) % n)});
        }
        case 7: return seven(t);
        default: throw GraphError(GraphErrc::OutOfRange, "small_diag_set needs 3 <= n <= 7");
    }
}

DominatingSet diag_2dominate_contraction(const TriangulationGraph& t, AlgoStats* stats) {
    return detail::run_explicit(t, DomMode::DiagonalAllowed, 3, 8, contraction_case, small_diag_set, stats);
}

DominatingSet diag_2dominate_linear(const TriangulationGraph& t, AlgoStats* stats) {
    auto base = [](const TriangulationGraph& g) {
        return g.n() <= 7 ? small_diag_set(g) : diag_2dominate_contraction(g);
    };
    return detail::run_queue(t, DomMode::DiagonalAllowed, 4, 13, linear_case, base, stats);
}

}  // namespace gg
