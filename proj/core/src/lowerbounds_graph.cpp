#include <algorithm>

#include "gg/lowerbounds.hpp"

namespace gg {

namespace {

struct Builder {
    int n;
    std::vector<Edge> ds;

    void add(int a, int b) {
        a %= n;
        b %= n;
        Edge e = make_edge(a, b);
        if (e.b - e.a <= 1 || (e.a == 0 && e.b == n - 1)) return;
        ds.push_back(e);
    }
    // piece vertices base, base+1, ..., base+p-2 and then `last`; diagonals in local labels
    void piece(int base, int p, int last, const std::vector<Edge>& local) {
        auto g = [&](int i) { return i == p - 1 ? last : base + i; };
        add(g(0), g(p - 1));
        for (Edge e : local) add(g(e.a), g(e.b));
    }
    // central polygon over the given vertices, fanned from the first
    void fan(const std::vector<int>& vs) {
        for (std::size_t i = 2; i + 1 < vs.size(); ++i) add(vs[0], vs[i]);
    }
    TriangulationGraph build() {
        std::sort(ds.begin(), ds.end());
        ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
        return TriangulationGraph::build(n, ds);
    }
};

// Gadget triangulations picked by exhaustive search: each needs its share of
// guards even when both chord endpoints are already covered.
const std::vector<Edge> kHexagon = {{1, 4}, {1, 5}, {2, 4}};
const std::vector<Edge> kHeptagon = {{1, 6}, {2, 6}, {3, 6}, {4, 6}};
const std::vector<Edge> kEnneagon = {{1, 8}, {2, 8}, {3, 8}, {4, 7}, {4, 8}, {5, 7}};
const std::vector<Edge> kDecagon = {{1, 9}, {2, 9}, {3, 9}, {4, 9}, {5, 9}, {6, 9}, {7, 9}};
// Hexagon H of T_3 in local labels (0 = v_{3m-3}, 5 = v0); contains d_{3m-2,3m}.
const std::vector<Edge> kDiagHexagon = {{0, 3}, {0, 4}, {1, 3}};

}  // namespace

TriangulationGraph gen_diag_lb(int m, int variant) {
    if (m < 2) throw LowerBoundError(LbErrc::MTooSmall, "gen_diag_lb needs m >= 2");
    if (variant < 1 || variant > 3) throw LowerBoundError(LbErrc::BadVariant, "variant must be 1, 2 or 3");
    Builder b{3 * m + variant - 1, {}};
    std::vector<int> centre;
    for (int j = 0; j < m - 1; ++j) {
        b.piece(3 * j, 4, 3 * j + 3, {{0, 2}});
        centre.push_back(3 * j);
    }
    const int s = 3 * m - 3;
    centre.push_back(s);
    if (variant == 1) b.piece(s, 4, 0, {{0, 2}});
    if (variant == 2) b.piece(s, 5, 0, {{0, 2}, {0, 3}});
    if (variant == 3) b.piece(s, 6, 0, kDiagHexagon);
    b.fan(centre);
    return b.build();
}

TriangulationGraph gen_edge_lb(int m, int residue) {
    if (m < 1) throw LowerBoundError(LbErrc::MTooSmall, "gen_edge_lb needs m >= 1");
    if (residue != 0 && residue != 1 && residue != 3 && residue != 4)
        throw LowerBoundError(LbErrc::BadVariant, "residue must be 0, 1, 3 or 4");
    Builder b{5 * (m + 1) + residue, {}};
    std::vector<int> centre;
    for (int j = 0; j < m; ++j) {
        b.piece(5 * j, 6, 5 * j + 5, kHexagon);
        centre.push_back(5 * j);
    }
    const int s = 5 * m;
    centre.push_back(s);
    switch (residue) {
        case 0: b.piece(s, 6, 0, kHexagon); break;
        case 1: b.piece(s, 7, 0, kHeptagon); break;
        case 3: b.piece(s, 9, 0, kEnneagon); break;
        default: b.piece(s, 10, 0, kDecagon); break;
    }
    b.fan(centre);
    return b.build();
}

TriangulationGraph gamma7() {
    // triangle v0v2v5 plus d24 in the quadrilateral v2v3v4v5
    return TriangulationGraph::build(7, {{0, 2}, {0, 5}, {2, 4}, {2, 5}});
}

TriangulationGraph glue_gamma7(const TriangulationGraph& g) {
    const int n = g.n();
    std::vector<Edge> ds;
    for (Edge e : g.diagonals()) ds.push_back(make_edge(e.a == 0 ? 0 : e.a + 5, e.b + 5));
    const auto g7 = gamma7();
    for (Edge e : g7.diagonals()) ds.push_back(e);
    ds.push_back({0, 6});
    std::sort(ds.begin(), ds.end());
    return TriangulationGraph::build(n + 5, ds);
}

TriangulationGraph gen_edge_lb_glued(int m) {
    if (m < 1) throw LowerBoundError(LbErrc::MTooSmall, "gen_edge_lb_glued needs m >= 1");
    auto g = gamma7();
    for (int i = 1; i < m; ++i) g = glue_gamma7(g);
    return g;
}

}  // namespace gg
