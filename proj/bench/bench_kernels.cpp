// Compares the OpenMP kernels against their single-threaded reference
// implementations: exhaustive partition-function evaluation and the
// psi/kappa verifier.

#include <benchmark/benchmark.h>

#include <random>
#include <utility>
#include <vector>

#include "iscount/exact.hpp"
#include "iscount/graph.hpp"
#include "iscount/psi.hpp"
#include "iscount/weighted_graph.hpp"

namespace {

iscount::WeightedGraph random_instance(int n, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (rng() % 10 < 3) edges.emplace_back(u, v);
    iscount::WeightedGraph wg = iscount::WeightedGraph::unit(iscount::Graph::from_edges(n, edges));
    for (int v = 1; v <= n; ++v) {
        long wm = 1 + static_cast<long>(rng() % 10);
        wg.wm[v] = wm;
        wg.wp[v] = 1 + static_cast<long>(rng() % wm);
    }
    return wg;
}

void BM_brute_force_z_serial(benchmark::State& state) {
    auto wg = random_instance(static_cast<int>(state.range(0)), 20240901);
    for (auto _ : state) benchmark::DoNotOptimize(iscount::brute_force_z_serial(wg));
}

void BM_brute_force_z_parallel(benchmark::State& state) {
    auto wg = random_instance(static_cast<int>(state.range(0)), 20240901);
    for (auto _ : state) benchmark::DoNotOptimize(iscount::brute_force_z(wg));
}

void BM_verify_psi_serial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(iscount::verify_psi_kappa_serial());
}

void BM_verify_psi_parallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(iscount::verify_psi_kappa());
}

}  // namespace

BENCHMARK(BM_brute_force_z_serial)->Arg(20)->Arg(24);
BENCHMARK(BM_brute_force_z_parallel)->Arg(20)->Arg(24);
BENCHMARK(BM_verify_psi_serial);
BENCHMARK(BM_verify_psi_parallel);

BENCHMARK_MAIN();
