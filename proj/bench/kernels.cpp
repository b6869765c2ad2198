#include "srp/corpus.hpp"
#include "srp/persistence.hpp"

#include <benchmark/benchmark.h>

namespace {

struct Workload {
    std::vector<srp::TameFiltration> filtrations;
};

/// `count` sublevel filtrations with up to `levels` critical values on hypergraphs of up to 8 vertices and 10 edges.
Workload make_workload(std::size_t levels, std::size_t count) {
    srp::CorpusConfig cfg;
    cfg.max_vertices = 8;
    cfg.max_edges = 10;
    cfg.levels = levels;
    Workload w;
    for (const auto& h : srp::random_corpus(levels, count, cfg))
        w.filtrations.push_back(srp::sublevel_filtration(h, srp::MonoClass::SizePreserving));
    return w;
}

template <srp::CountTable (*Kernel)(const srp::Feature&, const srp::TameFiltration&, srp::Mode)>
void run(benchmark::State& state, srp::Mode mode) {
    const auto work = make_workload(static_cast<std::size_t>(state.range(0)), 32);
    const auto feature = srp::max_originality_feature();
    for (auto _ : state)
        for (const auto& f : work.filtrations) benchmark::DoNotOptimize(Kernel(feature, f, mode));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(work.filtrations.size()));
}

void BM_ReferenceSteady(benchmark::State& s) { run<srp::count_table_reference>(s, srp::Mode::Steady); }
void BM_ParallelSteady(benchmark::State& s) { run<srp::count_table_parallel>(s, srp::Mode::Steady); }
void BM_ReferenceRanging(benchmark::State& s) { run<srp::count_table_reference>(s, srp::Mode::Ranging); }
void BM_ParallelRanging(benchmark::State& s) { run<srp::count_table_parallel>(s, srp::Mode::Ranging); }

}  // namespace

BENCHMARK(BM_ReferenceSteady)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_ParallelSteady)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_ReferenceRanging)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_ParallelRanging)->Arg(4)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
