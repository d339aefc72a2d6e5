#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ppattach/tag_config.hpp"

namespace ppattach {

struct TaggedToken {
  std::string surface;
  std::string tag;

  friend bool operator==(const TaggedToken&, const TaggedToken&) = default;
};

struct Sentence {
  std::vector<TaggedToken> tokens;

  bool empty() const { return tokens.empty(); }
  std::size_t size() const { return tokens.size(); }

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

/// Splits whitespace-separated "surface/TAG" tokens at their last '/'.
/// line_no is only used to label errors.
Sentence parse_tagged_line(std::string_view line, std::size_t line_no = 0);

/// "surface/TAG" tokens joined by single spaces.
std::string format_sentence(const Sentence& sentence);

/// One sentence per line. Blank lines are skipped.
std::vector<Sentence> read_corpus(std::istream& in);
void write_corpus(std::ostream& out, const std::vector<Sentence>& corpus);

enum class LemmaClass { kNoun, kVerb };

/// Surface-to-lemma table keyed on (lowercased surface, class).
class MorphLexicon {
 public:
  void add(std::string surface, LemmaClass cls, std::string lemma);
  const std::string* find(std::string_view lower_surface, LemmaClass cls) const;
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// (surface, class) pairs whose lemma is not itself a fixed point.
  std::vector<std::pair<std::string, LemmaClass>> non_fixed_points() const;

 private:
  std::map<std::pair<std::string, LemmaClass>, std::string, std::less<>> entries_;
};

/// Lowercases, then maps through the lexicon; unknown words map to themselves.
std::string lemmatize(std::string_view surface, LemmaClass cls, const MorphLexicon& lexicon);

std::string to_lower(std::string_view s);

/// TSV rows "surface TAB class TAB lemma"; '#' lines and blank lines ignored.
/// Later duplicates overwrite earlier ones. Non-fixed-point lemmas are
/// reported through `warnings` when it is non-null.
MorphLexicon parse_lexicon(std::istream& in, std::vector<std::string>* warnings = nullptr);
MorphLexicon load_lexicon(const std::string& path, std::vector<std::string>* warnings = nullptr);

}  // namespace ppattach
