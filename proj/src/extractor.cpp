#include "ppattach/extractor.hpp"

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "ppattach/error.hpp"

namespace ppattach {
namespace {

void skip(SentenceExtraction& out, SkipReason r) {
  ++out.skipped[static_cast<std::size_t>(r)];
}

}  // namespace

std::string_view to_string(SkipReason r) {
  switch (r) {
    case SkipReason::kOfEquivalent: return "of_equivalent";
    case SkipReason::kCopulaVerb: return "copula_verb";
    case SkipReason::kNounBeforeVerb: return "noun_between_verb_and_prep";
    case SkipReason::kNoObject: return "no_object";
    case SkipReason::kNoSite: return "no_site";
    case SkipReason::kCount: break;
  }
  return "unknown";
}

SentenceExtraction extract_occurrences(const ChunkedSentence& chunked, const TagConfig& config,
                                       const MorphLexicon& lexicon) {
  SentenceExtraction out;
  const auto& t = chunked.tokens;
  const std::size_t n = t.size();
  const auto k = static_cast<std::size_t>(config.window_k);

  std::vector<CoarseClass> cls(n);
  for (std::size_t i = 0; i < n; ++i) cls[i] = coarse_class(t[i].tag, config);

  for (std::size_t i = 0; i < n; ++i) {
    if (cls[i] != CoarseClass::kPrep) continue;
    ++out.prepositions;
    std::string prep = to_lower(t[i].surface);
    if (config.is_of_equivalent(prep)) {
      skip(out, SkipReason::kOfEquivalent);
      continue;
    }

    // First noun within K to the right, with no verb in between.
    std::optional<std::size_t> object;
    for (std::size_t j = i + 1; j < n && j <= i + k; ++j) {
      if (cls[j] == CoarseClass::kVerb) break;
      if (cls[j] == CoarseClass::kNoun) {
        object = j;
        break;
      }
    }

    const std::size_t lo = i >= k ? i - k : 0;
    std::optional<std::size_t> verb;
    std::optional<std::size_t> noun;  // first noun to the left, within K
    bool noun_before_verb = false;
    for (std::size_t j = i; j-- > lo;) {
      if (cls[j] == CoarseClass::kVerb) {
        verb = j;
        break;
      }
      if (cls[j] == CoarseClass::kNoun) {
        noun_before_verb = true;
        if (!noun) noun = j;
      }
    }

    if (verb) {
      std::string head = lemmatize(t[*verb].surface, LemmaClass::kVerb, lexicon);
      if (config.is_be_lemma(head)) {
        skip(out, SkipReason::kCopulaVerb);
      } else if (noun_before_verb) {
        skip(out, SkipReason::kNounBeforeVerb);
      } else if (!object) {
        skip(out, SkipReason::kNoObject);
      } else {
        out.occurrences.push_back(
            {{Attachment::kVerb, std::move(head), std::move(prep),
              lemmatize(t[*object].surface, LemmaClass::kNoun, lexicon)},
             *verb, i, *object});
      }
      continue;
    }
    if (!noun) {
      skip(out, SkipReason::kNoSite);
    } else if (!object) {
      skip(out, SkipReason::kNoObject);
    } else {
      out.occurrences.push_back({{Attachment::kNoun,
                                  lemmatize(t[*noun].surface, LemmaClass::kNoun, lexicon),
                                  std::move(prep),
                                  lemmatize(t[*object].surface, LemmaClass::kNoun, lexicon)},
                                 *noun, i, *object});
    }
  }
  return out;
}

std::vector<HeadTuple> extract_tuples(const ChunkedSentence& chunked, const TagConfig& config,
                                      const MorphLexicon& lexicon) {
  std::vector<HeadTuple> tuples;
  for (auto& occ : extract_occurrences(chunked, config, lexicon).occurrences) {
    tuples.push_back(std::move(occ.tuple));
  }
  return tuples;
}

void ExtractionReport::add(const SentenceExtraction& s) {
  ++sentences;
  prepositions += s.prepositions;
  for (const auto& occ : s.occurrences) {
    ++(occ.tuple.site == Attachment::kNoun ? noun_tuples : verb_tuples);
  }
  for (std::size_t r = 0; r < skipped.size(); ++r) skipped[r] += s.skipped[r];
}

ExtractionReport& ExtractionReport::operator+=(const ExtractionReport& o) {
  sentences += o.sentences;
  prepositions += o.prepositions;
  noun_tuples += o.noun_tuples;
  verb_tuples += o.verb_tuples;
  for (std::size_t r = 0; r < skipped.size(); ++r) skipped[r] += o.skipped[r];
  return *this;
}

std::string ExtractionReport::to_text() const {
  std::ostringstream out;
  out << "sentences\t" << sentences << '\n'
      << "prepositions\t" << prepositions << '\n'
      << "noun_tuples\t" << noun_tuples << '\n'
      << "verb_tuples\t" << verb_tuples << '\n';
  for (std::size_t r = 0; r < skipped.size(); ++r) {
    out << "skip." << to_string(static_cast<SkipReason>(r)) << '\t' << skipped[r] << '\n';
  }
  return out.str();
}

ExtractionReport extraction_report(const std::vector<HeadTuple>& tuples,
                                   std::uint64_t sentences_processed) {
  ExtractionReport r;
  r.sentences = sentences_processed;
  for (const auto& t : tuples) ++(t.site == Attachment::kNoun ? r.noun_tuples : r.verb_tuples);
  return r;
}

void write_tuples(std::ostream& out, const std::vector<HeadTuple>& tuples) {
  for (const auto& t : tuples) {
    out << to_char(t.site) << '\t' << t.head << '\t' << t.prep << '\t' << t.n2 << '\n';
  }
}

std::vector<HeadTuple> read_tuples(std::istream& in) {
  std::vector<HeadTuple> tuples;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cols;
    std::size_t start = 0;
    for (;;) {
      const auto tab = line.find('\t', start);
      cols.push_back(line.substr(start, tab == std::string::npos ? tab : tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (cols.size() != 4) throw ParseError("tuple row needs 4 tab-separated columns", row);
    const auto site = parse_attachment(cols[0]);
    if (!site) throw ParseError("tuple site must be N or V, got '" + cols[0] + "'", row);
    for (std::size_t c = 1; c < 4; ++c) {
      if (cols[c].empty()) throw ParseError("empty tuple field", row);
    }
    tuples.push_back({*site, std::move(cols[1]), std::move(cols[2]), std::move(cols[3])});
  }
  return tuples;
}

std::vector<HeadTuple> dedup_tuples(std::vector<HeadTuple> tuples) {
  std::sort(tuples.begin(), tuples.end());
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
  return tuples;
}

}  // namespace ppattach
