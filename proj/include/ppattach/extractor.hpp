#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ppattach/attachment.hpp"
#include "ppattach/chunker.hpp"
#include "ppattach/corpus_io.hpp"
#include "ppattach/tag_config.hpp"

namespace ppattach {

/// An unambiguous attachment: (v, p, n2) when site is V, (n, p, n2) when N.
struct HeadTuple {
  Attachment site = Attachment::kNoun;
  std::string head;
  std::string prep;
  std::string n2;

  friend bool operator==(const HeadTuple&, const HeadTuple&) = default;
  friend auto operator<=>(const HeadTuple&, const HeadTuple&) = default;
};

enum class SkipReason : std::size_t {
  kOfEquivalent,
  kCopulaVerb,
  kNounBeforeVerb,   // noun between the verb and p
  kNoObject,         // no n2 to the right within K before a verb
  kNoSite,           // neither verb nor noun within K to the left
  kCount,
};

std::string_view to_string(SkipReason r);

/// A tuple plus the chunked-token positions it was read from.
struct TupleOccurrence {
  HeadTuple tuple;
  std::size_t head_index = 0;
  std::size_t prep_index = 0;
  std::size_t n2_index = 0;
};

struct SentenceExtraction {
  std::vector<TupleOccurrence> occurrences;
  std::size_t prepositions = 0;
  std::array<std::uint64_t, static_cast<std::size_t>(SkipReason::kCount)> skipped{};
};

/// Runs the left/right window heuristic over every preposition of a chunked
/// sentence. At most one tuple per preposition; results are in token order.
SentenceExtraction extract_occurrences(const ChunkedSentence& chunked, const TagConfig& config,
                                       const MorphLexicon& lexicon);

std::vector<HeadTuple> extract_tuples(const ChunkedSentence& chunked, const TagConfig& config,
                                      const MorphLexicon& lexicon);

struct ExtractionReport {
  std::uint64_t sentences = 0;
  std::uint64_t prepositions = 0;
  std::uint64_t noun_tuples = 0;
  std::uint64_t verb_tuples = 0;
  std::array<std::uint64_t, static_cast<std::size_t>(SkipReason::kCount)> skipped{};

  void add(const SentenceExtraction& s);
  ExtractionReport& operator+=(const ExtractionReport& other);
  std::string to_text() const;

  friend bool operator==(const ExtractionReport&, const ExtractionReport&) = default;
};

/// Summary from tuples alone; preposition and skip counts stay zero.
ExtractionReport extraction_report(const std::vector<HeadTuple>& tuples,
                                   std::uint64_t sentences_processed);

/// "site TAB head TAB prep TAB n2" lines.
void write_tuples(std::ostream& out, const std::vector<HeadTuple>& tuples);
std::vector<HeadTuple> read_tuples(std::istream& in);

/// Sorted unique tuples (type counting).
std::vector<HeadTuple> dedup_tuples(std::vector<HeadTuple> tuples);

}  // namespace ppattach
