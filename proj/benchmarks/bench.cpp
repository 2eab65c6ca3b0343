#include <benchmark/benchmark.h>

#include "ehf/bitree.hpp"
#include "ehf/chordal.hpp"
#include "ehf/cover.hpp"
#include "ehf/gen.hpp"
#include "ehf/oracle.hpp"
#include "ehf/tisehf.hpp"

namespace {

void bm_brute_mis(benchmark::State& state) {
    auto g = ehf::gen::gen_ehf(static_cast<int>(state.range(0)), 0.3, 17);
    for (auto _ : state) benchmark::DoNotOptimize(ehf::oracle::brute_mis(g));
}
BENCHMARK(bm_brute_mis)->Arg(16)->Arg(22)->Arg(26);

void bm_find_even_hole_negative(benchmark::State& state) {
    // even-hole-free input: the search must exhaust every chordless path
    auto g = ehf::gen::gen_ehf(static_cast<int>(state.range(0)), 0.3, 23);
    for (auto _ : state) benchmark::DoNotOptimize(ehf::oracle::find_even_hole(g));
}
BENCHMARK(bm_find_even_hole_negative)->Arg(14)->Arg(18)->Arg(22);

void bm_chordal_mis(benchmark::State& state) {
    auto g = ehf::gen::gen_chordal(static_cast<int>(state.range(0)), 0.4, 31);
    for (auto _ : state) benchmark::DoNotOptimize(ehf::chordal_mis(g));
}
BENCHMARK(bm_chordal_mis)->Arg(32)->Arg(64)->Arg(128);

void bm_obstruction_scan(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    std::vector<ehf::bitree::BiTree> trees;
    ehf::oracle::enumerate_bitrees(m, [&](const ehf::bitree::BiTree& t) {
        if (trees.size() < 512) trees.push_back(t);
    });
    for (auto _ : state)
        for (const auto& t : trees) {
            benchmark::DoNotOptimize(ehf::bitree::find_directed_obstruction(t));
            benchmark::DoNotOptimize(ehf::bitree::find_alternating_obstruction(t));
        }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * trees.size()));
}
BENCHMARK(bm_obstruction_scan)->Arg(4)->Arg(5)->Arg(6);

void bm_tisehf_planted(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    auto pi = ehf::gen::gen_planted(k, 4, 0.2, 71);
    for (auto _ : state)
        benchmark::DoNotOptimize(ehf::tisehf::tisehf_solve(pi.graph, pi.parts));
}
BENCHMARK(bm_tisehf_planted)->Arg(2)->Arg(3)->Arg(4)->Arg(5);

void bm_isehf_end_to_end(benchmark::State& state) {
    auto g = ehf::gen::gen_ehf(20, 0.25, 43);
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ehf::cover::isehf_solve(g, k));
}
BENCHMARK(bm_isehf_end_to_end)->Arg(3)->Arg(5);

void bm_gen_planted(benchmark::State& state) {
    std::uint32_t seed = 101;
    for (auto _ : state)
        benchmark::DoNotOptimize(ehf::gen::gen_planted(static_cast<int>(state.range(0)), 4, 0.2, seed++));
}
BENCHMARK(bm_gen_planted)->Arg(3)->Arg(5);

} // namespace

BENCHMARK_MAIN();
