#include <doctest.h>

#include <bit>

#include "gg/oracle.hpp"

using namespace gg;

namespace {

// Plain subset scan over all candidate subsets, smallest first.
int subset_scan_optimum(const TriangulationGraph& t, DomMode mode) {
    auto cand = mode == DomMode::EdgeOnly ? t.boundary_edges() : t.all_edges();
    int m = static_cast<int>(cand.size());
    int best = m + 1;
    for (std::uint32_t s = 0; s < (1u << m); ++s) {
        int c = std::popcount(s);
        if (c >= best) continue;
        DominatingSet d{mode, {}};
        for (int i = 0; i < m; ++i)
            if (s >> i & 1) d.members.push_back(cand[i]);
        if (is_2_dominated(t, d)) best = c;
    }
    return best;
}

}  // namespace

TEST_CASE("oracle small cases") {
    auto tri = TriangulationGraph::build(3, {});
    CHECK(min_2dominating_set(tri, DomMode::EdgeOnly).size == 1);
    auto quad = TriangulationGraph::build(4, {{0, 2}});
    CHECK(min_2dominating_set(quad, DomMode::EdgeOnly).size == 2);
    CHECK(min_2dominating_set(quad, DomMode::DiagonalAllowed).size == 1);
    for (const auto& p : all_triangulations(5)) CHECK(min_2dominating_set(p, DomMode::DiagonalAllowed).size <= 2);
    CHECK_THROWS_AS(min_2dominating_set(fan_triangulation(15), DomMode::EdgeOnly), GraphError);
}

TEST_CASE("oracle agrees with subset scan") {
    for (int n = 3; n <= 8; ++n) {
        for (const auto& t : all_triangulations(n)) {
            for (auto mode : {DomMode::EdgeOnly, DomMode::DiagonalAllowed}) {
                auto r = min_2dominating_set(t, mode);
                CHECK(is_2_dominated(t, r.witness));
                CHECK(r.size == static_cast<int>(r.witness.size()));
                CHECK(r.size == subset_scan_optimum(t, mode));
            }
        }
    }
}

TEST_CASE("widening the mode never hurts") {
    for (int n = 3; n <= 10; ++n)
        for (const auto& t : all_triangulations(n))
            CHECK(min_2dominating_set(t, DomMode::DiagonalAllowed).size <=
                  min_2dominating_set(t, DomMode::EdgeOnly).size);
}

TEST_CASE("exhaustive checker reports violations") {
    auto all_edges = [](const TriangulationGraph& t) { return DominatingSet{DomMode::EdgeOnly, t.boundary_edges()}; };
    auto rep = check_bound_exhaustive(6, DomMode::EdgeOnly, all_edges, [](int n) { return n; });
    CHECK(rep.instances == 14);
    CHECK(rep.violations.empty());
    auto tight = check_bound_exhaustive(6, DomMode::EdgeOnly, all_edges, [](int) { return 2; });
    CHECK(tight.violations.size() == 14);
    auto empty = [](const TriangulationGraph&) { return DominatingSet{}; };
    CHECK(check_bound_exhaustive(5, DomMode::EdgeOnly, empty, [](int) { return 9; }).violations.size() == 5);
    CHECK_THROWS_AS(check_bound_exhaustive(13, DomMode::EdgeOnly, all_edges, [](int n) { return n; }), GraphError);
}
