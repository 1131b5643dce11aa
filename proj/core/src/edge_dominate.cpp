#include "gg/edge_dominate.hpp"

#include <initializer_list>
#include <stdexcept>

#include "reduce.hpp"

namespace gg {

using detail::add_e;
using detail::cov;
using detail::GuardBag;
using detail::has_d;
using detail::Reduction;
using detail::rm_d;
using detail::Side;

namespace {

void add_all(GuardBag& b, const Side& s, std::initializer_list<int> es) {
    for (int i : es) add_e(b, s, i);
}

DominatingSet checked(const TriangulationGraph& t, std::vector<Edge> members) {
    DominatingSet d{DomMode::EdgeOnly, std::move(members)};
    d.normalize();
    if (!is_2_dominated(t, d)) throw std::logic_error("small edge construction failed");
    return d;
}

Edge bedge(int n, int i) { return make_edge(i % n, (i + 1) % n); }

// Two ear tips b1, b2 with b2 two to four steps ccw of b1. The same edge
// offsets from b1 work for all three relative positions.
DominatingSet eight(const TriangulationGraph& t) {
    const int n = 8;
    for (int b1 = 0; b1 < n; ++b1) {
        if (t.degree(b1) != 2) continue;
        for (int dist = 2; dist <= 4; ++dist)
            if (t.degree((b1 + dist) % n) == 2) return checked(t, {bedge(n, b1 + 1), bedge(n, b1 + 3), bedge(n, b1 + 6)});
    }
    throw std::logic_error("octagon without two ears");
}

DominatingSet nine(const TriangulationGraph& t) {
    const int n = 9;
    auto sd = find_separating_diagonal(t, 3);
    std::array<int, 9> L{};
    for (int i = 0; i < n; ++i) L[i] = (sd.v0 + i) % n;
    auto has = [&](int i, int j) { return t.has_edge(L[i % n], L[j % n]); };
    auto reflect = [&](int pivot) {
        std::array<int, 9> R{};
        for (int i = 0; i < n; ++i) R[i] = L[((pivot - i) % n + n) % n];
        L = R;
    };
    auto apex = [&](int i, int j) {
        for (int m = i + 1; m < j; ++m)
            if (has(i, m) && has(m, j)) return m;
        throw std::logic_error("no apex");
    };
    auto pick = [&](std::initializer_list<int> es) {
        std::vector<Edge> ms;
        for (int i : es) ms.push_back(make_edge(L[i], L[(i + 1) % n]));
        return checked(t, ms);
    };
    const auto e258 = {2, 5, 8};
    const auto e036 = {0, 3, 6};
    if (sd.k == 4) {
        if (has(0, 5)) reflect(4);
        return pick(e258);
    }
    // the triangle on v0v3 lies on the long side
    auto apex_long = [&]() {
        for (int m = 4; m < n; ++m)
            if (has(0, m) && has(3, m)) return m;
        throw std::logic_error("no apex");
    };
    int v = apex_long();
    if (v >= 7) {
        reflect(3);
        v = apex_long();
    }
    if (v != 4) return pick(e258);
    int vp = apex(4, 9);
    if (vp == 5) return pick(e258);
    if (vp != 8) return pick(e036);
    int vpp = apex(4, 8);
    return vpp == 5 ? pick(e258) : pick(e036);
}

// Sides with 5..8 boundary edges; k = 5 contracts the separating diagonal.
Reduction quadratic_case(Side& s) {
    Reduction r;
    const int k = s.k;
    if (k == 5) {
        int v = s.apex(0, 5);
        r.removed = {s.v(1), s.v(2), s.v(3), s.v(4)};
        bool low = v >= 3;  // vertex guard wanted at v0
        r.contract = low ? std::pair{s.v(0), s.v(5)} : std::pair{s.v(5), s.v(0)};
        // with both ends covered either pair works, so follow the lift
        r.rewrite = [s](GuardBag& b, int need) {
            if (need == s.v(0)) {
                add_all(b, s, {0, 3});
            } else {
                add_all(b, s, {1, 4});
            }
        };
        return r;
    }
    if (k == 6) {
        if (s.apex(0, 6) == 4) s.reflect();
        r.removed = {s.v(1), s.v(2), s.v(3), s.v(4), s.v(5)};
        r.rewrite = [s](GuardBag& b, int) {
            if (rm_d(b, s, 0, 6)) {
                add_all(b, s, {0, 2, 5});
            } else if (cov(b, s, 0)) {
                add_all(b, s, {2, 4});
            } else {
                add_all(b, s, {1, 3});
            }
        };
        return r;
    }
    if (k == 7) {
        if (s.apex(0, 7) == 4) s.reflect();
        r.removed = {s.v(1), s.v(2), s.v(4), s.v(5), s.v(6)};
        r.rewrite = [s](GuardBag& b, int) {
            bool a = rm_d(b, s, 0, 3);
            bool c = rm_d(b, s, 3, 7);
            if (a || c) {
                add_all(b, s, {0, 3, 6});
            } else {
                add_all(b, s, {2, 4});
            }
        };
        return r;
    }
    if (k != 8) throw std::logic_error("unexpected side size");
    const int vp = s.apex(0, 4);
    r.removed = {};
    for (int i = 1; i < 8; ++i)
        if (i != 4 && i != vp) r.removed.push_back(s.v(i));
    r.rewrite = [s, vp](GuardBag& b, int) {
        if (vp == 1) {
            bool a = has_d(b, s, 1, 4), c = has_d(b, s, 4, 8);
            if (a && c) {
                rm_d(b, s, 1, 4);
                rm_d(b, s, 4, 8);
                add_all(b, s, {0, 3, 5, 7});
            } else if (a) {
                bool v8 = cov(b, s, 8);
                rm_d(b, s, 1, 4);
                if (v8) {
                    add_all(b, s, {0, 3, 5});
                } else {
                    add_all(b, s, {2, 4, 7});
                }
            } else if (c) {
                rm_d(b, s, 4, 8);
                add_all(b, s, {2, 4, 7});
            } else {
                add_all(b, s, {3, 5});
            }
        } else if (vp == 2) {
            bool a = has_d(b, s, 0, 2), m = has_d(b, s, 2, 4), c = has_d(b, s, 4, 8);
            int cnt = a + m + c;
            if (cnt >= 2) {
                rm_d(b, s, 0, 2);
                rm_d(b, s, 2, 4);
                rm_d(b, s, 4, 8);
                add_all(b, s, {0, 3, 5, 7});
            } else if (a) {
                rm_d(b, s, 0, 2);
                add_all(b, s, {0, 3, 5});
            } else if (m) {
                bool v0 = cov(b, s, 0);
                rm_d(b, s, 2, 4);
                if (v0) {
                    add_all(b, s, {2, 4, 7});
                } else {
                    add_all(b, s, {0, 3, 5});
                }
            } else if (c) {
                rm_d(b, s, 4, 8);
                add_all(b, s, {2, 4, 7});
            } else {
                throw std::logic_error("octagon side: pentagon left undominated");
            }
        } else {
            bool a = has_d(b, s, 0, 3), c = has_d(b, s, 4, 8), e3 = has_d(b, s, 3, 4);
            if (a && c) {
                rm_d(b, s, 0, 3);
                rm_d(b, s, 4, 8);
                add_all(b, s, {0, 3, 5, 7});
            } else if (a || c) {
                if (a) {
                    rm_d(b, s, 0, 3);
                } else {
                    rm_d(b, s, 4, 8);
                }
                if (e3) {
                    add_all(b, s, {0, 5, 7});
                } else if (a) {
                    add_all(b, s, {0, 3, 5});
                } else {
                    add_all(b, s, {2, 4, 7});
                }
            } else if (cov(b, s, 8)) {
                add_all(b, s, {0, 5});
            } else {
                rm_d(b, s, 3, 4);
                add_all(b, s, {2, 4, 7});
            }
        }
    };
    return r;
}

// Sides with 6..10 boundary edges, no contraction.
Reduction linear_case(Side& s) {
    Reduction r;
    const int k = s.k;
    auto keep = [&](std::initializer_list<int> kept) {
        r.removed.clear();
        for (int i = 1; i < k; ++i) {
            bool kp = false;
            for (int j : kept) kp |= j == i;
            if (!kp) r.removed.push_back(s.v(i));
        }
    };
    if (k == 6) {
        keep({});
        int v = s.apex(0, 6);
        int vp = v == 1 ? s.apex(1, 6) : v == 5 ? s.apex(0, 5) : -1;
        r.rewrite = [s, v, vp](GuardBag& b, int) {
            if (rm_d(b, s, 0, 6)) {
                add_all(b, s, {0, 2, 5});
                return;
            }
            bool c0 = cov(b, s, 0), c6 = cov(b, s, 6);
            if (c0 && c6) {
                add_all(b, s, {1, 4});
            } else if (c0) {
                if (v != 1) {
                    add_all(b, s, {2, 4});
                } else if (vp <= 3) {
                    add_all(b, s, {2, 5});
                } else {
                    add_all(b, s, {1, 4});
                }
            } else {
                if (v != 5) {
                    add_all(b, s, {1, 3});
                } else if (vp <= 2) {
                    add_all(b, s, {1, 4});
                } else {
                    add_all(b, s, {0, 3});
                }
            }
        };
        return r;
    }
    if (k == 7) {
        int v = s.apex(0, 7);
        if (v >= 4) {
            s.reflect();
            v = 7 - v;
        }
        keep({v});
        if (v == 2) {
            int vp = s.apex(2, 7);
            r.rewrite = [s, vp](GuardBag& b, int) {
                bool a = has_d(b, s, 0, 2), c = has_d(b, s, 2, 7);
                if (a && c) {
                    rm_d(b, s, 0, 2);
                    rm_d(b, s, 2, 7);
                    add_all(b, s, {0, 2, 4, 6});
                } else if (a) {
                    rm_d(b, s, 0, 2);
                    if (vp <= 4) {
                        add_all(b, s, {0, 3, 6});
                    } else {
                        add_all(b, s, {0, 2, 5});
                    }
                } else if (c) {
                    rm_d(b, s, 2, 7);
                    add_all(b, s, {1, 4, 6});
                } else {
                    add_all(b, s, {2, 5});
                }
            };
        } else {
            r.rewrite = [s](GuardBag& b, int) {
                bool a = rm_d(b, s, 0, 3);
                bool c = rm_d(b, s, 3, 7);
                if (a || c) {
                    add_all(b, s, {0, 3, 6});
                } else {
                    add_all(b, s, {2, 5});
                }
            };
        }
        return r;
    }
    if (k == 8) {
        if (s.apex(0, 8) == 5) s.reflect();
        keep({});
        r.rewrite = [s](GuardBag& b, int) {
            if (rm_d(b, s, 0, 8)) {
                add_all(b, s, {0, 3, 5, 7});
            } else if (cov(b, s, 0)) {
                add_all(b, s, {2, 4, 7});
            } else {
                add_all(b, s, {0, 3, 5});
            }
        };
        return r;
    }
    if (k == 9) {
        if (s.apex(0, 9) == 5) s.reflect();
        keep({4});
        r.rewrite = [s](GuardBag& b, int) {
            bool a = rm_d(b, s, 0, 4);
            bool c = rm_d(b, s, 4, 9);
            if (a || c) {
                add_all(b, s, {0, 3, 5, 8});
            } else {
                add_all(b, s, {2, 4, 6});
            }
        };
        return r;
    }
    if (k != 10) throw std::logic_error("unexpected side size");
    int vp = s.apex(0, 5);
    if (vp == 4 && s.apex(5, 10) != 6) {
        s.reflect();
        vp = s.apex(0, 5);
    }
    keep({5, vp});
    if (vp == 1) {
        r.rewrite = [s](GuardBag& b, int) {
            bool a = rm_d(b, s, 1, 5);
            bool c = rm_d(b, s, 5, 10);
            if (a || c) {
                add_all(b, s, {1, 4, 6, 9});
            } else {
                add_all(b, s, {3, 5, 7});
            }
        };
    } else if (vp <= 3) {
        r.rewrite = [s, vp](GuardBag& b, int) {
            bool a = has_d(b, s, 0, vp), m = has_d(b, s, vp, 5), c = has_d(b, s, 5, 10);
            int cnt = a + m + c;
            rm_d(b, s, 0, vp);
            rm_d(b, s, vp, 5);
            rm_d(b, s, 5, 10);
            if (cnt >= 2) {
                add_all(b, s, {0, 2, 5, 7, 9});
            } else if (cov(b, s, 0)) {
                add_all(b, s, {2, 5, 7, 9});
            } else {
                add_all(b, s, {0, 2, 5, 7});
            }
        };
    } else {
        r.rewrite = [s](GuardBag& b, int) {
            bool a = rm_d(b, s, 0, 4);
            bool c = rm_d(b, s, 5, 10);
            if (!a && !c) rm_d(b, s, 4, 5);
            add_all(b, s, {0, 3, 6, 9});
        };
    }
    return r;
}

}  // namespace

DominatingSet small_edge_set(const TriangulationGraph& t) {
    const int n = t.n();
    switch (n) {
        case 3: return checked(t, {bedge(n, 0)});
        case 4: return checked(t, {bedge(n, 0), bedge(n, 2)});
        case 5:
        case 7: return checked(t, n == 5 ? std::vector<Edge>{bedge(n, 0), bedge(n, 2)}
                                         : std::vector<Edge>{bedge(n, 0), bedge(n, 2), bedge(n, 4)});
        case 6: {
            int tip = -1;
            for (int v = 0; v < n && tip < 0; ++v)
                if (t.degree(v) == 2) tip = v;
            int a = (tip + n - 1) % n, c = (tip + 1) % n;
            return checked(t, {make_edge((a + n - 1) % n, a), make_edge(c, (c + 1) % n)});
        }
        case 8: return eight(t);
        case 9: return nine(t);
        default: throw GraphError(GraphErrc::OutOfRange, "small_edge_set needs 3 <= n <= 9");
    }
}

DominatingSet edge_2dominate_quadratic(const TriangulationGraph& t, AlgoStats* stats) {
    return detail::run_explicit(t, DomMode::EdgeOnly, 5, 10, quadratic_case, small_edge_set, stats);
}

DominatingSet edge_2dominate_linear(const TriangulationGraph& t, AlgoStats* stats) {
    auto base = [](const TriangulationGraph& g) {
        return g.n() <= 9 ? small_edge_set(g) : edge_2dominate_quadratic(g);
    };
    return detail::run_queue(t, DomMode::EdgeOnly, 6, 21, linear_case, base, stats);
}

}  // namespace gg
