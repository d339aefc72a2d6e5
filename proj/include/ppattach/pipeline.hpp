#pragma once

#include <span>
#include <vector>

#include "ppattach/chunker.hpp"
#include "ppattach/corpus_io.hpp"
#include "ppattach/counts.hpp"
#include "ppattach/extractor.hpp"
#include "ppattach/models.hpp"
#include "ppattach/tag_config.hpp"

// Corpus-scale kernels. Each has a plain serial loop, kept as the reference
// the OpenMP path is tested against, and a parallel version that splits
// sentences (or instances) into contiguous blocks and concatenates or merges
// block results in order, so both produce identical output.
namespace ppattach::kernels {

enum class Execution { kSerial, kParallel };

struct CorpusPass {
  std::vector<ChunkedSentence> chunked;
  std::vector<HeadTuple> tuples;  // corpus order
  ExtractionReport report;
};

/// Chunks every sentence and extracts its tuples.
CorpusPass chunk_and_extract(std::span<const Sentence> corpus, const TagConfig& config,
                             const MorphLexicon& lexicon, Execution exec = Execution::kParallel);

/// Chunks every sentence (number normalization only when chunking is off).
std::vector<ChunkedSentence> chunk_corpus(std::span<const Sentence> corpus, const TagConfig& config,
                                          Execution exec = Execution::kParallel);

/// Extracts tuples from already chunked sentences.
CorpusPass extract_corpus(std::span<const ChunkedSentence> chunked, const TagConfig& config,
                          const MorphLexicon& lexicon, Execution exec = Execution::kParallel);

/// Corpus side of a CountStore: shard-local stores merged in shard order.
CountStore count_corpus(std::span<const ChunkedSentence> chunked, const TagConfig& config,
                        const MorphLexicon& lexicon, const StoreMeta& meta,
                        Execution exec = Execution::kParallel);

std::vector<ClassificationResult> classify_all(std::span<const AttachmentInstance> instances,
                                               const Classifier& classifier,
                                               Execution exec = Execution::kParallel);

/// Worker count used by the parallel path (1 without OpenMP).
int worker_count();

}  // namespace ppattach::kernels
