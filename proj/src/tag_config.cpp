#include "ppattach/tag_config.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

#include "ppattach/error.hpp"

namespace ppattach {
namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

TagSet parse_set(std::string_view value, bool lowercase) {
  TagSet out;
  std::size_t start = 0;
  while (start <= value.size()) {
    std::size_t comma = value.find(',', start);
    if (comma == std::string_view::npos) comma = value.size();
    std::string item = trim(value.substr(start, comma - start));
    if (!item.empty()) out.insert(lowercase ? lower(std::move(item)) : std::move(item));
    start = comma + 1;
  }
  return out;
}

std::string join(const TagSet& s) {
  std::string out;
  for (const auto& item : s) {
    if (!out.empty()) out += ',';
    out += item;
  }
  return out;
}

bool parse_bool(const std::string& v, std::size_t line) {
  std::string l = lower(v);
  if (l == "true" || l == "1" || l == "yes") return true;
  if (l == "false" || l == "0" || l == "no") return false;
  throw ParseError("expected boolean, got '" + v + "'", line);
}

}  // namespace

void TagConfig::validate() const {
  const std::array<std::pair<const char*, const TagSet*>, 5> sets = {{
      {"noun_tags", &noun_tags},
      {"verb_tags", &verb_tags},
      {"prep_tags", &prep_tags},
      {"np_modifier_tags", &np_modifier_tags},
      {"quantifier_tags", &quantifier_tags},
  }};
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      for (const auto& tag : *sets[i].second) {
        if (sets[j].second->count(tag)) {
          throw ParseError("tag '" + tag + "' appears in both " + sets[i].first + " and " +
                           sets[j].first);
        }
      }
    }
  }
  if (noun_tags.empty()) throw ParseError("noun_tags must not be empty");
  if (verb_tags.empty()) throw ParseError("verb_tags must not be empty");
  if (prep_tags.empty()) throw ParseError("prep_tags must not be empty");
  if (window_k < 1) throw ParseError("window_k must be >= 1");
  if (of_equivalents.empty()) throw ParseError("of_equivalents must not be empty");
  if (num_token.empty()) throw ParseError("num_token must not be empty");
  if (number_tag.empty()) throw ParseError("number_tag must not be empty");
  if (language_id.empty()) throw ParseError("language_id must not be empty");
}

std::string TagConfig::to_text() const {
  std::ostringstream out;
  out << "language_id = " << language_id << '\n'
      << "noun_tags = " << join(noun_tags) << '\n'
      << "verb_tags = " << join(verb_tags) << '\n'
      << "prep_tags = " << join(prep_tags) << '\n'
      << "of_equivalents = " << join(of_equivalents) << '\n'
      << "be_lemmas = " << join(be_lemmas) << '\n'
      << "window_k = " << window_k << '\n'
      << "num_token = " << num_token << '\n'
      << "chunking_enabled = " << (chunking_enabled ? "true" : "false") << '\n'
      << "np_modifier_tags = " << join(np_modifier_tags) << '\n'
      << "quantifier_tags = " << join(quantifier_tags) << '\n'
      << "number_tag = " << number_tag << '\n';
  return out.str();
}

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string TagConfig::fingerprint() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(to_text())));
  return buf;
}

TagConfig english_profile() {
  TagConfig c;
  c.noun_tags = {"NN", "NNS", "NNP", "NNPS"};
  c.verb_tags = {"VB", "VBD", "VBG", "VBN", "VBP", "VBZ"};
  c.prep_tags = {"IN", "TO"};
  c.of_equivalents = {"of"};
  // Inflected forms are listed so the copula rule holds without a lexicon.
  c.be_lemmas = {"be", "is", "am", "are", "was", "were", "been", "being", "'s", "'re", "'m"};
  c.window_k = 5;
  c.num_token = "num";
  c.chunking_enabled = true;
  c.language_id = "en";
  c.np_modifier_tags = {"DT", "PDT", "POS", "JJ", "JJR", "JJS"};
  c.quantifier_tags = {"CD", "$"};
  c.number_tag = "CD";
  return c;
}

TagConfig spanish_profile() {
  TagConfig c;
  c.noun_tags = {"NC", "NP"};
  c.verb_tags = {"VM", "VS", "VA"};
  c.prep_tags = {"SP"};
  c.of_equivalents = {"de", "del"};
  c.be_lemmas = {"ser", "es", "son", "era", "eran", "fue", "fueron", "sido", "siendo", "sea"};
  c.window_k = 5;
  c.num_token = "num";
  c.chunking_enabled = false;
  c.language_id = "es";
  c.np_modifier_tags = {"DA", "DI", "AQ"};
  c.quantifier_tags = {"Z"};
  c.number_tag = "Z";
  return c;
}

TagConfig parse_tag_config(std::istream& in) {
  TagConfig c = english_profile();
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", line_no);
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key == "noun_tags") {
      c.noun_tags = parse_set(value, false);
    } else if (key == "verb_tags") {
      c.verb_tags = parse_set(value, false);
    } else if (key == "prep_tags") {
      c.prep_tags = parse_set(value, false);
    } else if (key == "of_equivalents") {
      c.of_equivalents = parse_set(value, true);
    } else if (key == "be_lemmas") {
      c.be_lemmas = parse_set(value, true);
    } else if (key == "window_k") {
      try {
        std::size_t used = 0;
        c.window_k = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
      } catch (const std::exception&) {
        throw ParseError("window_k must be an integer", line_no);
      }
    } else if (key == "num_token") {
      c.num_token = lower(value);
    } else if (key == "chunking_enabled") {
      c.chunking_enabled = parse_bool(value, line_no);
    } else if (key == "language_id") {
      c.language_id = value;
    } else if (key == "np_modifier_tags") {
      c.np_modifier_tags = parse_set(value, false);
    } else if (key == "quantifier_tags") {
      c.quantifier_tags = parse_set(value, false);
    } else if (key == "number_tag") {
      c.number_tag = value;
    } else {
      throw ParseError("unknown key '" + key + "'", line_no);
    }
  }
  c.validate();
  return c;
}

TagConfig load_tag_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  return parse_tag_config(in);
}

CoarseClass coarse_class(std::string_view tag, const TagConfig& config) {
  if (config.noun_tags.count(tag) || config.quantifier_tags.count(tag)) return CoarseClass::kNoun;
  if (config.verb_tags.count(tag)) return CoarseClass::kVerb;
  if (config.prep_tags.count(tag)) return CoarseClass::kPrep;
  return CoarseClass::kOther;
}

std::string_view to_string(CoarseClass c) {
  switch (c) {
    case CoarseClass::kNoun: return "noun";
    case CoarseClass::kVerb: return "verb";
    case CoarseClass::kPrep: return "prep";
    case CoarseClass::kOther: return "other";
  }
  return "other";
}

}  // namespace ppattach
