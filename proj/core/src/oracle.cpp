#include "gg/oracle.hpp"

#include <bit>

namespace gg {

namespace {

struct Search {
    std::vector<std::uint32_t> cand_mask;
    std::vector<Edge> cand;
    std::vector<std::uint32_t> tri_mask;
    std::vector<int> chosen;

    int first_open(std::uint32_t cov) const {
        for (std::size_t i = 0; i < tri_mask.size(); ++i)
            if (std::popcount(cov & tri_mask[i]) < 2) return static_cast<int>(i);
        return -1;
    }

    // Any valid completion must pick a candidate that touches an uncovered
    // vertex of the first open triangle, so branching over those is complete.
    bool dfs(std::uint32_t cov, int budget) {
        int t = first_open(cov);
        if (t < 0) return true;
        if (budget == 0) return false;
        std::uint32_t need = tri_mask[t] & ~cov;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            if (!(cand_mask[i] & need)) continue;
            chosen.push_back(static_cast<int>(i));
            if (dfs(cov | cand_mask[i], budget - 1)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace

OracleResult min_2dominating_set(const TriangulationGraph& t, DomMode mode) {
    if (t.n() > 14) throw GraphError(GraphErrc::NTooLarge, "oracle limited to n <= 14");
    Search s;
    s.cand = mode == DomMode::EdgeOnly ? t.boundary_edges() : t.all_edges();
    for (Edge e : s.cand) s.cand_mask.push_back((1u << e.a) | (1u << e.b));
    for (const auto& tri : t.triangles()) s.tri_mask.push_back((1u << tri[0]) | (1u << tri[1]) | (1u << tri[2]));
    for (int budget = 0;; ++budget) {
        s.chosen.clear();
        if (s.dfs(0, budget)) {
            OracleResult r;
            r.size = budget;
            r.witness.mode = mode;
            for (int i : s.chosen) r.witness.members.push_back(s.cand[i]);
            r.witness.normalize();
            r.size = static_cast<int>(r.witness.size());
            return r;
        }
    }
}

ExhaustiveReport check_bound_exhaustive(int n, DomMode mode, const DomAlgorithm& algo, const BoundFn& bound,
                                        bool check_optimum) {
    if (n > 12) throw GraphError(GraphErrc::NTooLarge, "exhaustive check limited to n <= 12");
    ExhaustiveReport rep;
    rep.n = n;
    enumerate_triangulations(n, [&](const TriangulationGraph& t) {
        ++rep.instances;
        auto fail = [&](const std::string& why) { rep.violations.push_back({t.diagonals(), why}); };
        DominatingSet d;
        try {
            d = algo(t);
        } catch (const std::exception& e) {
            fail(std::string("algorithm threw: ") + e.what());
            return;
        }
        for (Edge e : d.members) {
            if (!t.has_edge(e.a, e.b)) return fail("member is not an edge");
            if (mode == DomMode::EdgeOnly && !t.is_boundary(e.a, e.b)) return fail("diagonal in edge-only set");
        }
        if (!is_2_dominated(t, d)) return fail("not 2-dominating");
        int b = bound(n);
        if (static_cast<int>(d.size()) > b)
            return fail("size " + std::to_string(d.size()) + " exceeds bound " + std::to_string(b));
        if (check_optimum) {
            auto opt = min_2dominating_set(t, mode);
            if (opt.size > static_cast<int>(d.size())) fail("oracle optimum larger than algorithm output");
        }
    });
    return rep;
}

}  // namespace gg
