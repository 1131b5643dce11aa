#include <doctest.h>

#include "gg/diag_dominate.hpp"
#include "gg/oracle.hpp"

using namespace gg;

namespace {

void check_valid(const TriangulationGraph& t, const DominatingSet& d) {
    CHECK(is_2_dominated(t, d));
    CHECK(static_cast<int>(d.size()) <= diag_bound(t.n()));
}

}  // namespace

TEST_CASE("small diagonal sets") {
    auto tri = TriangulationGraph::build(3, {});
    CHECK(small_diag_set(tri).size() == 1);
    auto quad = TriangulationGraph::build(4, {{0, 2}});
    CHECK(small_diag_set(quad).members == std::vector<Edge>{{0, 2}});
    for (int n = 3; n <= 7; ++n)
        for (const auto& t : all_triangulations(n)) {
            auto d = small_diag_set(t);
            check_valid(t, d);
            CHECK(static_cast<int>(d.size()) == diag_bound(n));
        }
    for (const auto& t : all_triangulations(5)) CHECK(small_diag_set(t).members == t.diagonals());
    CHECK_THROWS_AS(small_diag_set(fan_triangulation(8)), GraphError);
}

TEST_CASE("bound examples") {
    CHECK(diag_2dominate_linear(fan_triangulation(10)).size() <= 3);
    CHECK(diag_2dominate_linear(TriangulationGraph::build(3, {})).size() == 1);
    CHECK(diag_2dominate_contraction(TriangulationGraph::build(4, {{0, 2}})).members == std::vector<Edge>{{0, 2}});
    CHECK(diag_2dominate_contraction(fan_triangulation(8)).size() <= 3);
}

TEST_CASE("both variants agree with the oracle up to n = 10") {
    for (int n = 3; n <= 10; ++n) {
        for (const auto& t : all_triangulations(n)) {
            auto a = diag_2dominate_linear(t);
            auto b = diag_2dominate_contraction(t);
            check_valid(t, a);
            check_valid(t, b);
            int opt = min_2dominating_set(t, DomMode::DiagonalAllowed).size;
            CHECK(opt <= static_cast<int>(a.size()));
            CHECK(opt <= static_cast<int>(b.size()));
        }
    }
}

TEST_CASE("linear cases at n = 13") {
    // 13 is the first size where the queue reductions run before the base case.
    int count = 0;
    enumerate_triangulations(13, [&](const TriangulationGraph& t) {
        if (count++ % 7) return;
        AlgoStats st;
        auto d = diag_2dominate_linear(t, &st);
        check_valid(t, d);
        CHECK(st.reductions == 1);
        CHECK(st.base_n == 10);
        CHECK(st.rescans == 0);
    });
}

TEST_CASE("random large instances") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        int n = 13 + static_cast<int>(seed % 150);
        auto t = random_triangulation(n, seed);
        AlgoStats st;
        check_valid(t, diag_2dominate_linear(t, &st));
        CHECK(st.rescans == 0);
        CHECK(st.pops <= static_cast<std::uint64_t>(n));
        check_valid(t, diag_2dominate_contraction(t));
    }
}

TEST_CASE("queue pops scale linearly") {
    for (int n : {50, 500, 5000}) {
        for (int kind = 0; kind < 2; ++kind) {
            auto t = kind ? random_triangulation(n, 1) : fan_triangulation(n);
            AlgoStats st;
            check_valid(t, diag_2dominate_linear(t, &st));
            CHECK(st.pops <= static_cast<std::uint64_t>(n));
            CHECK(st.work <= 60ull * n);
        }
    }
}
