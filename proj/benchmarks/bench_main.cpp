#include <benchmark/benchmark.h>

#include <random>

#include "gg/diag_dominate.hpp"
#include "gg/edge_dominate.hpp"
#include "gg/geometry.hpp"
#include "gg/lowerbounds.hpp"
#include "gg/monotone.hpp"
#include "gg/oracle.hpp"

using namespace gg;

namespace {

using DomFn = DominatingSet (*)(const TriangulationGraph&, AlgoStats*);

TriangulationGraph input(int kind, int n) { return kind == 0 ? fan_triangulation(n) : random_triangulation(n, 1); }

void dominate(benchmark::State& state, DomFn fn) {
    auto t = input(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    AlgoStats st;
    for (auto _ : state) {
        st = {};
        benchmark::DoNotOptimize(fn(t, &st));
    }
    state.counters["work"] = static_cast<double>(st.work);
    state.counters["reductions"] = static_cast<double>(st.reductions);
    state.SetComplexityN(state.range(1));
}

void args_linear(benchmark::internal::Benchmark* b) {
    for (int kind : {0, 1})
        for (int n : {100, 1000, 10000}) b->Args({kind, n});
    b->ArgNames({"random", "n"})->Unit(benchmark::kMillisecond);
}

void args_quadratic(benchmark::internal::Benchmark* b) {
    for (int kind : {0, 1})
        for (int n : {100, 300, 1000, 3000}) b->Args({kind, n});
    b->ArgNames({"random", "n"})->Unit(benchmark::kMillisecond);
}

void BM_guard_fan_polygon(benchmark::State& state, GuardStrategy s) {
    auto P = gen_fan_polygon(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(guard_piecewise_convex(P, s));
    state.SetComplexityN(state.range(0));
}

void BM_monotone_guards(benchmark::State& state) {
    // Zipper family: n = 2m + 5.
    auto P = gen_monotone_lb(1, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(monotone_edge_guards(P));
    state.counters["n"] = P.n();
}

void BM_oracle(benchmark::State& state) {
    auto t = random_triangulation(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(min_2dominating_set(t, DomMode::EdgeOnly));
}

void BM_verify_guards(benchmark::State& state) {
    auto P = gen_spike_polygon(5);
    auto g = guard_piecewise_convex(P, GuardStrategy::MobileN3);
    for (auto _ : state) benchmark::DoNotOptimize(verify_guard_set(P, g, static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK_CAPTURE(dominate, diag_linear, diag_2dominate_linear)->Apply(args_linear);
BENCHMARK_CAPTURE(dominate, edge_linear, edge_2dominate_linear)->Apply(args_linear);
BENCHMARK_CAPTURE(dominate, diag_contract, diag_2dominate_contraction)->Apply(args_quadratic);
BENCHMARK_CAPTURE(dominate, edge_quadratic, edge_2dominate_quadratic)->Apply(args_quadratic);
BENCHMARK_CAPTURE(BM_guard_fan_polygon, mobile, GuardStrategy::MobileN3)
    ->RangeMultiplier(10)
    ->Range(100, 10000)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_guard_fan_polygon, edge_linear, GuardStrategy::EdgeLinear)
    ->RangeMultiplier(10)
    ->Range(100, 10000)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_monotone_guards)->RangeMultiplier(4)->Range(4, 1024)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_oracle)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_guards)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
