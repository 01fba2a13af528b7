#include <benchmark/benchmark.h>

#include "kcluster/cliques.hpp"
#include "kcluster/instance_gen.hpp"
#include "kcluster/nir.hpp"
#include "kcluster/solver.hpp"
#include "kcluster/split_bounds.hpp"

namespace {

using namespace kcluster;

NirForm random_form(int n, GraphClass cls, std::uint64_t seed) {
    GenSpec spec;
    spec.n = n;
    spec.cls = cls;
    spec.seed = seed;
    return to_nir(gen_random(spec)).form;
}

void BM_SolveProper(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    const auto snir = SnirForm::require(random_form(n, GraphClass::proper, 7));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_proper(snir, k, false));
    }
}
BENCHMARK(BM_SolveProper)
    ->ArgsProduct({{200, 400, 800, 1600}, {4, 8, 12}});

void BM_SolveInterval(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    const auto form = random_form(n, GraphClass::interval, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_interval(form, k, false));
    }
}
BENCHMARK(BM_SolveInterval)
    ->ArgsProduct({{200, 400, 800, 1600}, {4, 8, 12}});

void BM_SolveConnected(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto form = random_form(n, GraphClass::interval, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_interval(form, 8, true));
    }
}
BENCHMARK(BM_SolveConnected)->Arg(400)->Arg(800);

void BM_ToNir(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    GenSpec spec;
    spec.n = n;
    spec.seed = 11;
    const auto r = gen_random(spec);
    for (auto _ : state) {
        benchmark::DoNotOptimize(to_nir(r));
    }
}
BENCHMARK(BM_ToNir)->Range(1 << 8, 1 << 14);

void BM_MaximalCliques(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto form = random_form(n, GraphClass::interval, 13);
    for (auto _ : state) {
        benchmark::DoNotOptimize(maximal_cliques(form));
    }
}
BENCHMARK(BM_MaximalCliques)->Range(1 << 8, 1 << 13);

void BM_SplitTable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto form = random_form(n, GraphClass::interval, 17);
    const auto cliques = maximal_cliques(form);
    for (auto _ : state) {
        benchmark::DoNotOptimize(SplitTable(cliques, form));
    }
}
BENCHMARK(BM_SplitTable)->Range(1 << 8, 1 << 13);

void BM_SplitNaiveAll(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto form = random_form(n, GraphClass::interval, 17);
    const auto cliques = maximal_cliques(form);
    for (auto _ : state) {
        for (int t = 2; t <= cliques.count(); ++t) {
            benchmark::DoNotOptimize(split_bounds_interval_naive(cliques, form, t));
        }
    }
}
BENCHMARK(BM_SplitNaiveAll)->Range(1 << 8, 1 << 13);

} // namespace

BENCHMARK_MAIN();
