#include <benchmark/benchmark.h>

#include <map>
#include <memory>

#include "refclass/engine.hpp"
#include "refclass/kernels.hpp"
#include "refclass/synth.hpp"

using namespace refclass;

namespace {

struct Fixture {
  CategoryScheme scheme;
  Corpus corpus;
  VectorStore papers;
  VectorStore refs;
  std::vector<std::uint8_t> all;
};

const Fixture& fixture(int papers) {
  static std::map<int, std::unique_ptr<Fixture>> cache;
  auto& slot = cache[papers];
  if (!slot) {
    SynthParams p;
    p.seed = 1;
    p.papers = papers;
    p.categories = 64;
    p.areas = 8;
    const auto sc = generate_corpus(p);
    auto scheme = CategoryScheme::from_rows(sc.scheme);
    auto corpus = Corpus::build(sc.input, scheme);
    auto vectors = initial_vectors(corpus);
    std::vector<std::uint8_t> all(corpus.paper_count(), 1);
    auto refs = kernels::serial::accumulate_references(corpus, vectors, all, true);
    slot = std::make_unique<Fixture>(
        Fixture{std::move(scheme), std::move(corpus), std::move(vectors), std::move(refs), std::move(all)});
  }
  return *slot;
}

// range(0): papers, range(1): threads (0 selects the serial kernels).
void BM_Accumulate(benchmark::State& state) {
  const auto& f = fixture(static_cast<int>(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto r = threads == 0 ? kernels::serial::accumulate_references(f.corpus, f.papers, f.all, true)
                          : kernels::parallel::accumulate_references(f.corpus, f.papers, f.all, true, threads);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.corpus.slot_count()));
}

void BM_PropagateLimited(benchmark::State& state) {
  const auto& f = fixture(static_cast<int>(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  const auto mask = f.corpus.eligibility_mask();
  for (auto _ : state) {
    auto r = threads == 0 ? kernels::serial::propagate(f.corpus, f.refs, f.papers, mask, true)
                          : kernels::parallel::propagate(f.corpus, f.refs, f.papers, mask, true, threads);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.corpus.slot_count()));
}

void BM_PropagateUnlimited(benchmark::State& state) {
  const auto& f = fixture(static_cast<int>(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  const auto mask = f.corpus.eligibility_mask();
  for (auto _ : state) {
    auto r = threads == 0 ? kernels::serial::propagate(f.corpus, f.refs, f.papers, mask, false)
                          : kernels::parallel::propagate(f.corpus, f.refs, f.papers, mask, false, threads);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.corpus.slot_count()));
}

void BM_FullRun(benchmark::State& state) {
  const auto& f = fixture(static_cast<int>(state.range(0)));
  EngineConfig e;
  e.fractional = true;
  e.exec = state.range(1) == 0 ? kernels::ExecPolicy{kernels::Backend::serial, 0}
                               : kernels::ExecPolicy{kernels::Backend::parallel, static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(run(f.corpus, e));
}

void sizes_and_threads(benchmark::internal::Benchmark* b) {
  for (const int n : {20000, 100000}) {
    for (const int t : {0, 1, 2, 4, 8}) b->Args({n, t});
  }
}

}  // namespace

BENCHMARK(BM_Accumulate)->Apply(sizes_and_threads)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PropagateLimited)->Apply(sizes_and_threads)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PropagateUnlimited)->Apply(sizes_and_threads)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FullRun)->Args({100000, 0})->Args({100000, 4})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
