#include "ppattach/corpus_io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>

#include "ppattach/error.hpp"

namespace ppattach {

Sentence parse_tagged_line(std::string_view line, std::size_t line_no) {
  Sentence sentence;
  std::size_t pos = 0;
  std::size_t index = 0;
  const auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (pos < line.size()) {
    while (pos < line.size() && is_space(line[pos])) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && !is_space(line[end])) ++end;
    const std::string_view token = line.substr(pos, end - pos);
    const auto slash = token.rfind('/');
    if (slash == std::string_view::npos || slash == 0 || slash + 1 == token.size()) {
      throw ParseError("malformed token " + std::to_string(index) + " '" + std::string(token) +
                           "' (expected surface/TAG)",
                       line_no);
    }
    sentence.tokens.push_back({std::string(token.substr(0, slash)),
                               std::string(token.substr(slash + 1))});
    ++index;
    pos = end;
  }
  return sentence;
}

std::string format_sentence(const Sentence& sentence) {
  std::string out;
  for (const auto& t : sentence.tokens) {
    if (!out.empty()) out += ' ';
    out += t.surface;
    out += '/';
    out += t.tag;
  }
  return out;
}

std::vector<Sentence> read_corpus(std::istream& in) {
  std::vector<Sentence> corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    Sentence s = parse_tagged_line(line, line_no);
    if (!s.empty()) corpus.push_back(std::move(s));
  }
  return corpus;
}

void write_corpus(std::ostream& out, const std::vector<Sentence>& corpus) {
  for (const auto& s : corpus) out << format_sentence(s) << '\n';
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

void MorphLexicon::add(std::string surface, LemmaClass cls, std::string lemma) {
  entries_[{to_lower(surface), cls}] = to_lower(lemma);
}

const std::string* MorphLexicon::find(std::string_view lower_surface, LemmaClass cls) const {
  const auto it = entries_.find(std::pair<std::string, LemmaClass>(std::string(lower_surface), cls));
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<std::pair<std::string, LemmaClass>> MorphLexicon::non_fixed_points() const {
  std::vector<std::pair<std::string, LemmaClass>> out;
  for (const auto& [key, lemma] : entries_) {
    const std::string* again = find(lemma, key.second);
    if (again != nullptr && *again != lemma) out.push_back(key);
  }
  return out;
}

std::string lemmatize(std::string_view surface, LemmaClass cls, const MorphLexicon& lexicon) {
  std::string folded = to_lower(surface);
  if (const std::string* lemma = lexicon.find(folded, cls)) return *lemma;
  return folded;
}

MorphLexicon parse_lexicon(std::istream& in, std::vector<std::string>* warnings) {
  MorphLexicon lexicon;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos) {
      throw ParseError("lexicon row needs exactly three tab-separated columns", row);
    }
    const std::string surface = line.substr(0, t1);
    const std::string cls = line.substr(t1 + 1, t2 - t1 - 1);
    const std::string lemma = line.substr(t2 + 1);
    if (surface.empty() || lemma.empty()) throw ParseError("empty surface or lemma", row);
    LemmaClass c;
    if (cls == "noun") {
      c = LemmaClass::kNoun;
    } else if (cls == "verb") {
      c = LemmaClass::kVerb;
    } else {
      throw ParseError("lexicon class must be 'noun' or 'verb', got '" + cls + "'", row);
    }
    lexicon.add(surface, c, lemma);
  }
  if (warnings != nullptr) {
    for (const auto& [surface, cls] : lexicon.non_fixed_points()) {
      warnings->push_back("lemma of '" + surface + "' (" +
                          (cls == LemmaClass::kNoun ? "noun" : "verb") +
                          ") is not its own lemma; lemmatize is not idempotent there");
    }
  }
  return lexicon;
}

MorphLexicon load_lexicon(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open lexicon '" + path + "'");
  return parse_lexicon(in, warnings);
}

}  // namespace ppattach
