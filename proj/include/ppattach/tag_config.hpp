#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>

namespace ppattach {

using TagSet = std::set<std::string, std::less<>>;

/// Language profile. Everything language specific lives here so that
/// switching languages is a configuration change only.
struct TagConfig {
  TagSet noun_tags;
  TagSet verb_tags;
  TagSet prep_tags;
  TagSet of_equivalents;  // prepositions always attached to the noun
  TagSet be_lemmas;       // copula forms never used as verb attachment sites
  int window_k = 5;
  std::string num_token = "num";
  bool chunking_enabled = true;
  std::string language_id = "en";

  // Tag classes used by the chunking rules. The quantifier tags also count
  // as nouns for extraction, so "num" and "million" can be heads or objects.
  TagSet np_modifier_tags;
  TagSet quantifier_tags;
  std::string number_tag = "CD";

  /// Throws ParseError describing the first violated invariant.
  void validate() const;

  /// Canonical key = value rendering; parse_tag_config(to_text()) == *this.
  std::string to_text() const;

  /// 64-bit FNV-1a over to_text(), hex encoded.
  std::string fingerprint() const;

  bool is_of_equivalent(std::string_view prep_lemma) const {
    return of_equivalents.find(prep_lemma) != of_equivalents.end();
  }
  bool is_be_lemma(std::string_view verb_lemma) const {
    return be_lemmas.find(verb_lemma) != be_lemmas.end();
  }

  friend bool operator==(const TagConfig&, const TagConfig&) = default;
};

TagConfig english_profile();
TagConfig spanish_profile();

/// Parses the key = value format written by TagConfig::to_text(). Missing
/// keys keep the English defaults; unknown keys are errors.
TagConfig parse_tag_config(std::istream& in);
TagConfig load_tag_config(const std::string& path);

enum class CoarseClass { kNoun, kVerb, kPrep, kOther };

CoarseClass coarse_class(std::string_view tag, const TagConfig& config);

std::string_view to_string(CoarseClass c);

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);

}  // namespace ppattach
