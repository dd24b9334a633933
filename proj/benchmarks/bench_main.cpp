#include "cnsdiff/diffusion.hpp"
#include "cnsdiff/metrics.hpp"
#include "cnsdiff/tie_strength.hpp"
#include "oracles.hpp"

#include <benchmark/benchmark.h>

#include <filesystem>

using namespace cnsdiff;

namespace {

// 0: Karate, 1: Polblogs-sized random stand-in (1224 nodes, 16718 edges)
const Graph& graph(std::int64_t which) {
    static const Graph karate =
        load_edge_list_file(std::filesystem::path(CNSDIFF_DATA_DIR) / "karate.txt");
    static const Graph large = oracle::connected_random_graph(1224, 16718, 7, "p");
    return which == 0 ? karate : large;
}

void BM_TieTable(benchmark::State& state) {
    const auto& g = graph(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(TieStrengthTable::build(g));
}
BENCHMARK(BM_TieTable)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_RunCns(benchmark::State& state) {
    const auto& g = graph(state.range(0));
    const auto table = TieStrengthTable::build(g);
    for (auto _ : state) benchmark::DoNotOptimize(run_cns(g, table, 0));
}
BENCHMARK(BM_RunCns)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_RunSi(benchmark::State& state) {
    const auto& g = graph(state.range(0));
    ModelParams p;
    std::size_t run = 0;
    for (auto _ : state) benchmark::DoNotOptimize(run_si(g, 0, p, run++));
}
BENCHMARK(BM_RunSi)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_EvaluateTrace(benchmark::State& state) {
    const auto& g = graph(state.range(0));
    const auto trace = run_ic(g, 0, ModelParams{});
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_trace(g, trace));
}
BENCHMARK(BM_EvaluateTrace)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
