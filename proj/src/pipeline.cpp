#include "ppattach/pipeline.hpp"

#include <algorithm>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ppattach::kernels {
namespace {

// Contiguous [begin, end) block b of n items split into `blocks` parts.
std::pair<std::size_t, std::size_t> block_range(std::size_t n, std::size_t blocks, std::size_t b) {
  const std::size_t base = n / blocks;
  const std::size_t extra = n % blocks;
  const std::size_t begin = b * base + std::min(b, extra);
  return {begin, begin + base + (b < extra ? 1 : 0)};
}

std::size_t block_count(std::size_t n) {
  const auto workers = static_cast<std::size_t>(worker_count());
  return std::max<std::size_t>(1, std::min(n, workers * 4));
}

// Runs body(b) for every block in parallel, rethrowing the first exception.
template <typename Body>
void for_each_block(std::size_t blocks, Body&& body) {
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
    try {
      body(static_cast<std::size_t>(b));
    } catch (...) {
#pragma omp critical(ppattach_kernel_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

void extract_one(const ChunkedSentence& s, const TagConfig& config, const MorphLexicon& lexicon,
                 CorpusPass& out) {
  SentenceExtraction ex = extract_occurrences(s, config, lexicon);
  out.report.add(ex);
  for (auto& occ : ex.occurrences) out.tuples.push_back(std::move(occ.tuple));
}

void append(CorpusPass& into, CorpusPass&& part) {
  into.chunked.insert(into.chunked.end(), std::make_move_iterator(part.chunked.begin()),
                      std::make_move_iterator(part.chunked.end()));
  into.tuples.insert(into.tuples.end(), std::make_move_iterator(part.tuples.begin()),
                     std::make_move_iterator(part.tuples.end()));
  into.report += part.report;
}

}  // namespace

int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

CorpusPass chunk_and_extract(std::span<const Sentence> corpus, const TagConfig& config,
                             const MorphLexicon& lexicon, Execution exec) {
  if (exec == Execution::kSerial) {
    CorpusPass out;
    for (const auto& s : corpus) {
      out.chunked.push_back(chunk(s, config));
      extract_one(out.chunked.back(), config, lexicon, out);
    }
    return out;
  }
  const std::size_t blocks = block_count(corpus.size());
  std::vector<CorpusPass> parts(blocks);
  for_each_block(blocks, [&](std::size_t b) {
    const auto [begin, end] = block_range(corpus.size(), blocks, b);
    for (std::size_t i = begin; i < end; ++i) {
      parts[b].chunked.push_back(chunk(corpus[i], config));
      extract_one(parts[b].chunked.back(), config, lexicon, parts[b]);
    }
  });
  CorpusPass out;
  out.chunked.reserve(corpus.size());
  for (auto& p : parts) append(out, std::move(p));
  return out;
}

std::vector<ChunkedSentence> chunk_corpus(std::span<const Sentence> corpus, const TagConfig& config,
                                          Execution exec) {
  std::vector<ChunkedSentence> out(corpus.size());
  if (exec == Execution::kSerial) {
    for (std::size_t i = 0; i < corpus.size(); ++i) out[i] = chunk(corpus[i], config);
    return out;
  }
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(corpus.size()); ++i) {
    out[static_cast<std::size_t>(i)] = chunk(corpus[static_cast<std::size_t>(i)], config);
  }
  return out;
}

CorpusPass extract_corpus(std::span<const ChunkedSentence> chunked, const TagConfig& config,
                          const MorphLexicon& lexicon, Execution exec) {
  if (exec == Execution::kSerial) {
    CorpusPass out;
    for (const auto& s : chunked) extract_one(s, config, lexicon, out);
    return out;
  }
  const std::size_t blocks = block_count(chunked.size());
  std::vector<CorpusPass> parts(blocks);
  for_each_block(blocks, [&](std::size_t b) {
    const auto [begin, end] = block_range(chunked.size(), blocks, b);
    for (std::size_t i = begin; i < end; ++i) extract_one(chunked[i], config, lexicon, parts[b]);
  });
  CorpusPass out;
  for (auto& p : parts) append(out, std::move(p));
  return out;
}

CountStore count_corpus(std::span<const ChunkedSentence> chunked, const TagConfig& config,
                        const MorphLexicon& lexicon, const StoreMeta& meta, Execution exec) {
  if (exec == Execution::kSerial) {
    CountStore store(meta);
    for (const auto& s : chunked) store.accumulate_corpus(s, config, lexicon);
    return store;
  }
  const std::size_t blocks = block_count(chunked.size());
  std::vector<CountStore> shards(blocks, CountStore(meta));
  for_each_block(blocks, [&](std::size_t b) {
    const auto [begin, end] = block_range(chunked.size(), blocks, b);
    for (std::size_t i = begin; i < end; ++i) shards[b].accumulate_corpus(chunked[i], config, lexicon);
  });
  CountStore store(meta);
  for (const auto& shard : shards) store.merge_from(shard);
  return store;
}

std::vector<ClassificationResult> classify_all(std::span<const AttachmentInstance> instances,
                                               const Classifier& classifier, Execution exec) {
  std::vector<ClassificationResult> out(instances.size());
  if (exec == Execution::kSerial) {
    for (std::size_t i = 0; i < instances.size(); ++i) out[i] = classifier(instances[i]);
    return out;
  }
  const std::size_t blocks = block_count(instances.size());
  for_each_block(blocks, [&](std::size_t b) {
    const auto [begin, end] = block_range(instances.size(), blocks, b);
    for (std::size_t i = begin; i < end; ++i) out[i] = classifier(instances[i]);
  });
  return out;
}

}  // namespace ppattach::kernels
