#include <benchmark/benchmark.h>

#include "causaldisc/acyclify.hpp"
#include "causaldisc/discovery.hpp"
#include "causaldisc/oracle.hpp"
#include "causaldisc/random.hpp"
#include "causaldisc/separation.hpp"

namespace {

using namespace causaldisc;

Dmg make_graph(int n, std::uint64_t seed) { return random_dmg(n, 0.15, 0.08, seed); }

void BM_SeparationQuery(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Dmg g = make_graph(n, 7);
    detail::TraversalIndex idx(g);
    NodeSet c;
    for (int v = 2; v < n; v += 3) c.insert(v);
    for (auto _ : state) {
        benchmark::DoNotOptimize(detail::pair_connected(g, idx, 0, 1, c, Criterion::sigma));
    }
}
BENCHMARK(BM_SeparationQuery)->Arg(10)->Arg(20)->Arg(40);

void BM_IndependenceModel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Dmg g = make_graph(n, 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(independence_model(g, Criterion::sigma, 12));
    }
}
BENCHMARK(BM_IndependenceModel)->Arg(6)->Arg(8)->Arg(10);

void BM_Fci(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    // sparse regime; the possible-d-sep stage is exponential in dense graphs
    Dmg g = random_dmg(n, 2.0 / n, 0.05, 13);
    for (auto _ : state) {
        GraphOracle oracle = graph_oracle(g, Criterion::sigma);
        benchmark::DoNotOptimize(fci(oracle, g.names()));
    }
}
BENCHMARK(BM_Fci)->Arg(8)->Arg(12)->Arg(16);

void BM_CanonicalAcyclification(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Dmg g = make_graph(n, 17);
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_acyclification(g));
    }
}
BENCHMARK(BM_CanonicalAcyclification)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
