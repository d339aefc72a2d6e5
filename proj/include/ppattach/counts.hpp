#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ppattach/attachment.hpp"
#include "ppattach/chunker.hpp"
#include "ppattach/corpus_io.hpp"
#include "ppattach/extractor.hpp"
#include "ppattach/tag_config.hpp"

namespace ppattach {

inline constexpr int kModelFormatVersion = 1;

/// Identifies how a store was built. Stores only merge when these agree.
struct StoreMeta {
  std::string config_fingerprint;
  std::string language_id;
  int window_k = 0;
  bool dedup = false;

  static StoreMeta from_config(const TagConfig& config, bool dedup);

  friend bool operator==(const StoreMeta&, const StoreMeta&) = default;
};

using Count = std::uint64_t;
using WordCounts = std::map<std::string, Count>;
using PairCounts = std::map<std::pair<std::string, std::string>, Count>;

/// Corpus word counts c(n), c(v) and tuple counts c(n,p,true), c(v,p,true).
/// Marginals are derived, never stored.
class CountStore {
 public:
  CountStore() = default;
  explicit CountStore(StoreMeta meta) : meta_(std::move(meta)) {}

  const StoreMeta& meta() const { return meta_; }
  const WordCounts& corpus_nouns() const { return corpus_noun_; }
  const WordCounts& corpus_verbs() const { return corpus_verb_; }
  const PairCounts& noun_preps() const { return noun_prep_; }
  const PairCounts& verb_preps() const { return verb_prep_; }

  const WordCounts& corpus(Attachment site) const {
    return site == Attachment::kNoun ? corpus_noun_ : corpus_verb_;
  }
  const PairCounts& tuples(Attachment site) const {
    return site == Attachment::kNoun ? noun_prep_ : verb_prep_;
  }

  /// c(n) or c(v).
  Count corpus_count(Attachment site, const std::string& head) const;
  /// c(head, p, true).
  Count tuple_count(Attachment site, const std::string& head, const std::string& prep) const;

  /// Every preposition with a nonzero tuple count.
  std::set<std::string> prep_vocab() const;

  bool empty() const;

  void add_corpus_word(Attachment site, const std::string& lemma, Count n = 1);
  void add_tuple(Attachment site, const std::string& head, const std::string& prep, Count n = 1);

  /// Counts every noun- and verb-class token of a chunked sentence by lemma.
  void accumulate_corpus(const ChunkedSentence& chunked, const TagConfig& config,
                         const MorphLexicon& lexicon);
  void accumulate_tuples(const std::vector<HeadTuple>& tuples);

  /// Pointwise sum. Throws IncompatibleStoresError when the metas differ.
  CountStore& merge_from(const CountStore& other);

  friend bool operator==(const CountStore&, const CountStore&) = default;

 private:
  StoreMeta meta_;
  WordCounts corpus_noun_;
  WordCounts corpus_verb_;
  PairCounts noun_prep_;
  PairCounts verb_prep_;
};

CountStore merge(const CountStore& a, const CountStore& b);

/// Canonical text form. Equal stores serialize to identical bytes.
std::string serialize(const CountStore& store);
CountStore deserialize(std::istream& in);

void save(const CountStore& store, const std::string& path);
CountStore load(const std::string& path);

}  // namespace ppattach
