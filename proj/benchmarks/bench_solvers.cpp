// Rough throughput numbers for the exact solvers and the constructive
// tree partition; run with --benchmark_min_time=... for tighter numbers.

#include <benchmark/benchmark.h>

#include "limpack/families.hpp"
#include "limpack/graph.hpp"
#include "limpack/harness.hpp"
#include "limpack/solve.hpp"
#include "limpack/tree.hpp"

namespace {

void bm_l2_random_graph(benchmark::State& state) {
    const auto g = limpack::random_graphs(1, int(state.range(0)), 12345)[0];
    for (auto _ : state) {
        auto r = limpack::l_k(g, 2);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(bm_l2_random_graph)->Arg(16)->Arg(22)->Arg(28);

void bm_l2t_gap_instance(benchmark::State& state) {
    const auto g = limpack::build_gap_graph(1).graph;
    for (auto _ : state) {
        auto r = limpack::l_kt(g, 2);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(bm_l2t_gap_instance);

void bm_chi_x2_lambda(benchmark::State& state) {
    limpack::LambdaSpec spec;
    spec.r = 3;
    spec.s = 4;
    const auto g = limpack::build_lambda(spec);
    for (auto _ : state) {
        auto r = limpack::chi_xk(g, 2);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(bm_chi_x2_lambda);

void bm_d_x2_complete(benchmark::State& state) {
    const auto g = limpack::complete_graph(8);
    for (auto _ : state) {
        auto r = limpack::d_xk(g, 2);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(bm_d_x2_complete);

void bm_tree_partition(benchmark::State& state) {
    const auto t = limpack::random_tree(int(state.range(0)), 777);
    for (auto _ : state) {
        auto part = limpack::tree_2lp_partition(t);
        benchmark::DoNotOptimize(part.classes);
    }
}
BENCHMARK(bm_tree_partition)->Arg(100)->Arg(1000)->Arg(10000);

void bm_enumerate_trees(benchmark::State& state) {
    for (auto _ : state) {
        auto ts = limpack::enumerate_trees(int(state.range(0)));
        benchmark::DoNotOptimize(ts.size());
    }
}
BENCHMARK(bm_enumerate_trees)->Arg(10)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
