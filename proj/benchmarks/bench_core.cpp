#include <benchmark/benchmark.h>

#include "l3g/analyze.hpp"
#include "l3g/bowtie.hpp"
#include "l3g/config_search.hpp"
#include "l3g/graph_census.hpp"
#include "l3g/triple_system.hpp"

using l3g::LinearTripleSystem;
using l3g::Rational;

namespace {

LinearTripleSystem steiner(int n) { return l3g::generate_steiner(n); }

void bm_generate_steiner(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(l3g::generate_steiner(n));
}
BENCHMARK(bm_generate_steiner)->Arg(31)->Arg(63)->Arg(127)->Arg(255);

void bm_dilute(benchmark::State& state) {
    const LinearTripleSystem h = steiner(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(l3g::dilute(h, Rational(17, 20), 1));
}
BENCHMARK(bm_dilute)->Arg(63)->Arg(127)->Arg(255);

void bm_triad_census(benchmark::State& state) {
    const LinearTripleSystem h = steiner(static_cast<int>(state.range(0)));
    const l3g::SimpleGraph u = l3g::underlying_graph(h);
    for (auto _ : state) benchmark::DoNotOptimize(l3g::triad_census(u));
}
BENCHMARK(bm_triad_census)->Arg(31)->Arg(63)->Arg(127)->Arg(255);

void bm_build_bowtie(benchmark::State& state) {
    const LinearTripleSystem h = steiner(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(l3g::build_bowtie(h));
}
BENCHMARK(bm_build_bowtie)->Arg(31)->Arg(63)->Arg(127);

void bm_components(benchmark::State& state) {
    const LinearTripleSystem h = steiner(static_cast<int>(state.range(0)));
    const l3g::BowtieGraph b = l3g::build_bowtie(h);
    for (auto _ : state) benchmark::DoNotOptimize(l3g::components(b));
}
BENCHMARK(bm_components)->Arg(31)->Arg(63)->Arg(127);

void bm_greedy_witness(benchmark::State& state) {
    const LinearTripleSystem h = steiner(static_cast<int>(state.range(0)));
    const l3g::BowtieGraph b = l3g::build_bowtie(h);
    const auto comps = l3g::components(b);
    const l3g::SearchBudget budget{10'000'000, 60'000};
    for (auto _ : state)
        benchmark::DoNotOptimize(
            l3g::component_guided_search(h, b, comps.front(), 8, budget));
}
BENCHMARK(bm_greedy_witness)->Arg(31)->Arg(63)->Arg(127);

void bm_exhaustive_small(benchmark::State& state) {
    const LinearTripleSystem h = steiner(13);
    const int k = static_cast<int>(state.range(0));
    const l3g::SearchBudget budget{100'000'000, 60'000};
    for (auto _ : state)
        benchmark::DoNotOptimize(l3g::exhaustive_search(h, k, k + 3, budget));
}
BENCHMARK(bm_exhaustive_small)->Arg(3)->Arg(4);

void bm_analyze(benchmark::State& state) {
    const LinearTripleSystem h =
        l3g::dilute(steiner(static_cast<int>(state.range(0))), Rational(17, 20), 1);
    l3g::AnalyzeOptions opts;
    opts.k = 6;
    for (auto _ : state) benchmark::DoNotOptimize(l3g::analyze(h, opts));
}
BENCHMARK(bm_analyze)->Arg(31)->Arg(63)->Arg(127);

}  // namespace

BENCHMARK_MAIN();
