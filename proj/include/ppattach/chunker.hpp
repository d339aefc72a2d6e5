#pragma once

#include <cstddef>
#include <vector>

#include "ppattach/corpus_io.hpp"
#include "ppattach/tag_config.hpp"

namespace ppattach {

/// Half-open range [begin, end) of input token indices.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const Span&, const Span&) = default;
};

struct ChunkedSentence {
  std::vector<TaggedToken> tokens;
  std::vector<Span> provenance;  // one per output token

  Sentence as_sentence() const { return Sentence{tokens}; }
};

/// True for digit strings with optional internal '.', ',' or '-' groups and
/// an optional "/digits" fraction, e.g. "46", "3.5", "1,000", "1/2".
bool is_numeric(std::string_view surface);

/// Replaces numeric tokens with (num_token, number_tag). Length preserving.
Sentence normalize_numbers(const Sentence& sentence, const TagConfig& config);

/// Numbers, then quantifier phrases, then simple noun phrases. With chunking
/// disabled only number normalization happens.
///
/// Quantifier rule: a maximal run of quantifier-tagged tokens becomes its
/// last alphabetic token ("5 million" -> "million"), or num_token if none.
/// Noun phrase rule: a maximal run of modifier/noun tokens is cut after its
/// last noun and the prefix becomes that noun ("The professional conduct"
/// -> "conduct"). Trailing modifiers are passed through.
ChunkedSentence chunk(const Sentence& sentence, const TagConfig& config);

}  // namespace ppattach
