// Serial reference vs OpenMP kernels on a synthetic corpus.

#include <benchmark/benchmark.h>

#include <map>

#include "ppattach/models.hpp"
#include "ppattach/pipeline.hpp"
#include "ppattach/synthetic.hpp"

namespace {

using ppattach::kernels::Execution;

const ppattach::SyntheticCorpus& corpus(std::size_t sentences) {
  static std::map<std::size_t, ppattach::SyntheticCorpus> cache;
  auto it = cache.find(sentences);
  if (it == cache.end()) {
    it = cache.emplace(sentences, ppattach::generate_synthetic_corpus(
                                      ppattach::default_synthetic_spec(sentences, sentences / 10, 7)))
             .first;
  }
  return it->second;
}

void BM_ChunkAndExtract(benchmark::State& state, Execution exec) {
  const auto& c = corpus(static_cast<std::size_t>(state.range(0)));
  const auto config = ppattach::english_profile();
  const ppattach::MorphLexicon lexicon;
  for (auto _ : state) {
    auto pass = ppattach::kernels::chunk_and_extract(c.sentences, config, lexicon, exec);
    benchmark::DoNotOptimize(pass.tuples.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CountCorpus(benchmark::State& state, Execution exec) {
  const auto& c = corpus(static_cast<std::size_t>(state.range(0)));
  const auto config = ppattach::english_profile();
  const ppattach::MorphLexicon lexicon;
  const auto chunked = ppattach::kernels::chunk_corpus(c.sentences, config);
  const auto meta = ppattach::StoreMeta::from_config(config, false);
  for (auto _ : state) {
    auto store = ppattach::kernels::count_corpus(chunked, config, lexicon, meta, exec);
    benchmark::DoNotOptimize(store.corpus_nouns().size());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ClassifyAll(benchmark::State& state, Execution exec) {
  const auto& c = corpus(static_cast<std::size_t>(state.range(0)));
  const auto config = ppattach::english_profile();
  const ppattach::MorphLexicon lexicon;
  const auto pass = ppattach::kernels::chunk_and_extract(c.sentences, config, lexicon);
  ppattach::CountStore store = ppattach::kernels::count_corpus(
      pass.chunked, config, lexicon, ppattach::StoreMeta::from_config(config, false));
  store.accumulate_tuples(pass.tuples);
  const ppattach::Classifier classifier(config, store, ppattach::Variant::kBigram);
  for (auto _ : state) {
    auto results = ppattach::kernels::classify_all(c.test, classifier, exec);
    benchmark::DoNotOptimize(results.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(c.test.size()));
}

}  // namespace

BENCHMARK_CAPTURE(BM_ChunkAndExtract, serial, Execution::kSerial)->Arg(20000)->Arg(200000);
BENCHMARK_CAPTURE(BM_ChunkAndExtract, parallel, Execution::kParallel)->Arg(20000)->Arg(200000);
BENCHMARK_CAPTURE(BM_CountCorpus, serial, Execution::kSerial)->Arg(20000)->Arg(200000);
BENCHMARK_CAPTURE(BM_CountCorpus, parallel, Execution::kParallel)->Arg(20000)->Arg(200000);
BENCHMARK_CAPTURE(BM_ClassifyAll, serial, Execution::kSerial)->Arg(200000);
BENCHMARK_CAPTURE(BM_ClassifyAll, parallel, Execution::kParallel)->Arg(200000);

BENCHMARK_MAIN();
