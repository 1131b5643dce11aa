#include <doctest.h>

#include "gg/edge_dominate.hpp"
#include "gg/oracle.hpp"

using namespace gg;

namespace {

bool on_boundary(const TriangulationGraph& t, Edge e) {
    return e.b - e.a == 1 || (e.a == 0 && e.b == t.n() - 1);
}

void check_valid(const TriangulationGraph& t, const DominatingSet& d, int bound) {
    CHECK(d.mode == DomMode::EdgeOnly);
    CHECK(is_2_dominated(t, d));
    CHECK(static_cast<int>(d.size()) <= bound);
    for (Edge e : d.members) CHECK(on_boundary(t, e));
}

}  // namespace

TEST_CASE("bound helpers") {
    for (int n = 3; n <= 11; ++n) CHECK(edge_bound_quadratic(n) == edge_bound_linear(n));
    CHECK(edge_bound_quadratic(4) == 2);
    CHECK(edge_bound_quadratic(10) == 4);
    CHECK(edge_bound_linear(14) == 6);
    CHECK(edge_bound_linear(12) == 5);
    CHECK(edge_bound_quadratic(12) == 5);
    CHECK(edge_bound_linear(21) == 9);
    CHECK(edge_bound_quadratic(21) == 8);
}

TEST_CASE("small edge sets") {
    for (int n = 3; n <= 9; ++n)
        for (const auto& t : all_triangulations(n)) {
            auto d = small_edge_set(t);
            check_valid(t, d, edge_bound_quadratic(n));
            CHECK(static_cast<int>(d.size()) == edge_bound_quadratic(n));
        }
    auto pent = TriangulationGraph::build(5, {{0, 2}, {0, 3}});
    CHECK(small_edge_set(pent).members == std::vector<Edge>{{0, 1}, {2, 3}});
    for (const auto& t : all_triangulations(4)) {
        CHECK(small_edge_set(t).size() == 2);
        CHECK(min_2dominating_set(t, DomMode::EdgeOnly).size == 2);
    }
    for (const auto& t : all_triangulations(9)) CHECK(min_2dominating_set(t, DomMode::EdgeOnly).size <= 3);
    CHECK_THROWS_AS(small_edge_set(fan_triangulation(10)), GraphError);
}

TEST_CASE("examples") {
    auto tri = TriangulationGraph::build(3, {});
    CHECK(edge_2dominate_quadratic(tri).size() == 1);
    CHECK(edge_2dominate_linear(tri).size() == 1);
    CHECK(edge_2dominate_quadratic(fan_triangulation(10)).size() <= 4);
    check_valid(fan_triangulation(14), edge_2dominate_linear(fan_triangulation(14)), 6);
}

TEST_CASE("agreement with the oracle up to n = 10") {
    for (int n = 3; n <= 10; ++n)
        for (const auto& t : all_triangulations(n)) {
            auto q = edge_2dominate_quadratic(t);
            auto l = edge_2dominate_linear(t);
            check_valid(t, q, edge_bound_quadratic(n));
            check_valid(t, l, edge_bound_linear(n));
            int opt = min_2dominating_set(t, DomMode::EdgeOnly).size;
            CHECK(opt <= static_cast<int>(q.size()));
            CHECK(opt <= static_cast<int>(l.size()));
        }
}

TEST_CASE("exhaustive bounds at n = 11, 12") {
    for (int n = 11; n <= 12; ++n) {
        auto q = check_bound_exhaustive(n, DomMode::EdgeOnly, [](const TriangulationGraph& t) {
            return edge_2dominate_quadratic(t);
        }, edge_bound_quadratic, false);
        auto l = check_bound_exhaustive(n, DomMode::EdgeOnly, [](const TriangulationGraph& t) {
            return edge_2dominate_linear(t);
        }, edge_bound_linear, false);
        CHECK(q.instances == catalan(n - 2));
        CHECK(q.violations.empty());
        CHECK(l.violations.empty());
    }
}

TEST_CASE("queue reductions on random instances") {
    // below 21 vertices the linear variant hands everything to the base case
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        int n = 21 + static_cast<int>(seed % 120);
        auto t = random_triangulation(n, seed);
        AlgoStats st;
        check_valid(t, edge_2dominate_linear(t, &st), edge_bound_linear(n));
        CHECK(st.reductions >= 1);
        CHECK(st.rescans == 0);
        CHECK(st.pops <= static_cast<std::uint64_t>(n));
        CHECK(st.base_n < 21);
        check_valid(t, edge_2dominate_quadratic(t), edge_bound_quadratic(n));
    }
}

TEST_CASE("queue work scales linearly on fans") {
    std::vector<double> per_vertex;
    for (int n : {100, 1000, 10000}) {
        auto t = fan_triangulation(n);
        AlgoStats st;
        check_valid(t, edge_2dominate_linear(t, &st), edge_bound_linear(n));
        CHECK(st.pops <= static_cast<std::uint64_t>(n));
        per_vertex.push_back(static_cast<double>(st.work) / n);
    }
    for (double w : per_vertex) CHECK(w <= 100.0);
    CHECK(per_vertex.back() <= 1.25 * per_vertex[1]);
}
