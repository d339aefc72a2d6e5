#include "ppattach/chunker.hpp"

#include <cctype>

namespace ppattach {
namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_alphabetic_word(std::string_view s) {
  bool letter = false;
  for (char c : s) {
    if (is_digit(c)) return false;
    if (std::isalpha(static_cast<unsigned char>(c)) || static_cast<unsigned char>(c) >= 0x80) {
      letter = true;
    }
  }
  return letter;
}

// Applies one rewriting pass and composes the provenance of the previous pass.
struct Builder {
  const std::vector<TaggedToken>& in;
  const std::vector<Span>& in_prov;
  ChunkedSentence out;

  void emit(const TaggedToken& token, std::size_t first, std::size_t last) {
    out.tokens.push_back(token);
    out.provenance.push_back({in_prov[first].begin, in_prov[last].end});
  }
};

ChunkedSentence quantifier_pass(const ChunkedSentence& s, const TagConfig& config) {
  Builder b{s.tokens, s.provenance, {}};
  const auto& t = s.tokens;
  std::size_t i = 0;
  while (i < t.size()) {
    if (!config.quantifier_tags.count(t[i].tag)) {
      b.emit(t[i], i, i);
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < t.size() && config.quantifier_tags.count(t[end].tag)) ++end;
    const TaggedToken* head = nullptr;
    for (std::size_t j = i; j < end; ++j) {
      if (t[j].tag == config.number_tag && is_alphabetic_word(t[j].surface)) head = &t[j];
    }
    b.emit(head != nullptr ? *head : TaggedToken{config.num_token, config.number_tag}, i, end - 1);
    i = end;
  }
  return std::move(b.out);
}

ChunkedSentence noun_phrase_pass(const ChunkedSentence& s, const TagConfig& config) {
  Builder b{s.tokens, s.provenance, {}};
  const auto& t = s.tokens;
  const auto in_np = [&](const TaggedToken& tok) {
    return config.np_modifier_tags.count(tok.tag) || config.noun_tags.count(tok.tag);
  };
  std::size_t i = 0;
  while (i < t.size()) {
    if (!in_np(t[i])) {
      b.emit(t[i], i, i);
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < t.size() && in_np(t[end])) ++end;
    std::size_t last_noun = end;
    for (std::size_t j = i; j < end; ++j) {
      if (config.noun_tags.count(t[j].tag)) last_noun = j;
    }
    std::size_t rest = i;
    if (last_noun != end) {
      b.emit(t[last_noun], i, last_noun);
      rest = last_noun + 1;
    }
    for (std::size_t j = rest; j < end; ++j) b.emit(t[j], j, j);
    i = end;
  }
  return std::move(b.out);
}

}  // namespace

bool is_numeric(std::string_view s) {
  // digits ([.,-] digits)* ( '/' digits )?
  std::size_t i = 0;
  const auto digits = [&] {
    const std::size_t start = i;
    while (i < s.size() && is_digit(s[i])) ++i;
    return i > start;
  };
  if (!digits()) return false;
  while (i < s.size() && (s[i] == '.' || s[i] == ',' || s[i] == '-')) {
    ++i;
    if (!digits()) return false;
  }
  if (i < s.size() && s[i] == '/') {
    ++i;
    if (!digits()) return false;
  }
  return i == s.size();
}

Sentence normalize_numbers(const Sentence& sentence, const TagConfig& config) {
  Sentence out = sentence;
  for (auto& tok : out.tokens) {
    if (is_numeric(tok.surface)) tok = {config.num_token, config.number_tag};
  }
  return out;
}

ChunkedSentence chunk(const Sentence& sentence, const TagConfig& config) {
  ChunkedSentence s;
  s.tokens = normalize_numbers(sentence, config).tokens;
  s.provenance.reserve(s.tokens.size());
  for (std::size_t i = 0; i < s.tokens.size(); ++i) s.provenance.push_back({i, i + 1});
  if (!config.chunking_enabled) return s;
  return noun_phrase_pass(quantifier_pass(s, config), config);
}

}  // namespace ppattach
