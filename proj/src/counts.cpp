#include "ppattach/counts.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

#include "ppattach/error.hpp"

namespace ppattach {

StoreMeta StoreMeta::from_config(const TagConfig& config, bool dedup) {
  return {config.fingerprint(), config.language_id, config.window_k, dedup};
}

Count CountStore::corpus_count(Attachment site, const std::string& head) const {
  const auto& m = corpus(site);
  const auto it = m.find(head);
  return it == m.end() ? 0 : it->second;
}

Count CountStore::tuple_count(Attachment site, const std::string& head,
                              const std::string& prep) const {
  const auto& m = tuples(site);
  const auto it = m.find({head, prep});
  return it == m.end() ? 0 : it->second;
}

std::set<std::string> CountStore::prep_vocab() const {
  std::set<std::string> out;
  for (const auto* m : {&noun_prep_, &verb_prep_}) {
    for (const auto& [key, count] : *m) {
      if (count > 0) out.insert(key.second);
    }
  }
  return out;
}

bool CountStore::empty() const {
  return corpus_noun_.empty() && corpus_verb_.empty() && noun_prep_.empty() && verb_prep_.empty();
}

void CountStore::add_corpus_word(Attachment site, const std::string& lemma, Count n) {
  if (n == 0) return;
  (site == Attachment::kNoun ? corpus_noun_ : corpus_verb_)[lemma] += n;
}

void CountStore::add_tuple(Attachment site, const std::string& head, const std::string& prep,
                           Count n) {
  if (n == 0) return;
  (site == Attachment::kNoun ? noun_prep_ : verb_prep_)[{head, prep}] += n;
}

void CountStore::accumulate_corpus(const ChunkedSentence& chunked, const TagConfig& config,
                                   const MorphLexicon& lexicon) {
  for (const auto& tok : chunked.tokens) {
    switch (coarse_class(tok.tag, config)) {
      case CoarseClass::kNoun:
        ++corpus_noun_[lemmatize(tok.surface, LemmaClass::kNoun, lexicon)];
        break;
      case CoarseClass::kVerb:
        ++corpus_verb_[lemmatize(tok.surface, LemmaClass::kVerb, lexicon)];
        break;
      default:
        break;
    }
  }
}

void CountStore::accumulate_tuples(const std::vector<HeadTuple>& tuples) {
  for (const auto& t : tuples) add_tuple(t.site, t.head, t.prep);
}

CountStore& CountStore::merge_from(const CountStore& other) {
  if (!(meta_ == other.meta_)) {
    throw IncompatibleStoresError("cannot merge count stores built with different settings (" +
                                  meta_.config_fingerprint + "/" + other.meta_.config_fingerprint +
                                  ")");
  }
  for (const auto& [k, v] : other.corpus_noun_) corpus_noun_[k] += v;
  for (const auto& [k, v] : other.corpus_verb_) corpus_verb_[k] += v;
  for (const auto& [k, v] : other.noun_prep_) noun_prep_[k] += v;
  for (const auto& [k, v] : other.verb_prep_) verb_prep_[k] += v;
  return *this;
}

CountStore merge(const CountStore& a, const CountStore& b) {
  CountStore out = a;
  out.merge_from(b);
  return out;
}

namespace {

Count sum(const WordCounts& m) {
  Count s = 0;
  for (const auto& [k, v] : m) s += v;
  return s;
}

Count sum(const PairCounts& m) {
  Count s = 0;
  for (const auto& [k, v] : m) s += v;
  return s;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string body_of(const CountStore& s) {
  std::ostringstream out;
  out << "NOUN\n";
  for (const auto& [k, v] : s.corpus_nouns()) out << k << '\t' << v << '\n';
  out << "VERB\n";
  for (const auto& [k, v] : s.corpus_verbs()) out << k << '\t' << v << '\n';
  out << "NP\n";
  for (const auto& [k, v] : s.noun_preps()) out << k.first << '\t' << k.second << '\t' << v << '\n';
  out << "VP\n";
  for (const auto& [k, v] : s.verb_preps()) out << k.first << '\t' << k.second << '\t' << v << '\n';
  return out.str();
}

std::string totals_of(const CountStore& s) {
  std::ostringstream out;
  out << "nouns=" << sum(s.corpus_nouns()) << " verbs=" << sum(s.corpus_verbs())
      << " np=" << sum(s.noun_preps()) << " vp=" << sum(s.verb_preps());
  return out.str();
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cols;
  std::size_t start = 0;
  for (;;) {
    const auto tab = line.find('\t', start);
    cols.push_back(line.substr(start, tab == std::string::npos ? tab : tab - start));
    if (tab == std::string::npos) return cols;
    start = tab + 1;
  }
}

Count parse_count(const std::string& s, std::size_t line) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("bad count '" + s + "'", line);
  }
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw ParseError("count out of range '" + s + "'", line);
  }
}

}  // namespace

std::string serialize(const CountStore& store) {
  const std::string body = body_of(store);
  std::ostringstream out;
  out << "# ppattach count model\n"
      << "# format=" << kModelFormatVersion << '\n'
      << "# language_id=" << store.meta().language_id << '\n'
      << "# config=" << store.meta().config_fingerprint << '\n'
      << "# k=" << store.meta().window_k << '\n'
      << "# dedup=" << (store.meta().dedup ? 1 : 0) << '\n'
      << "# corpus_counts=chunked_lemmas\n"
      << "# totals " << totals_of(store) << '\n'
      << "# checksum=" << hex64(fnv1a64(body)) << '\n'
      << body;
  return out.str();
}

CountStore deserialize(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::map<std::string, std::string> header;
  std::string totals;
  std::string body;
  bool in_body = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!in_body && !line.empty() && line[0] == '#') {
      const std::string rest = line.size() > 2 ? line.substr(2) : "";
      if (rest.rfind("totals ", 0) == 0) {
        totals = rest.substr(7);
        continue;
      }
      const auto eq = rest.find('=');
      if (eq != std::string::npos) header[rest.substr(0, eq)] = rest.substr(eq + 1);
      if (rest.rfind("format=", 0) == 0 && header["format"] != std::to_string(kModelFormatVersion)) {
        throw FormatVersionError("model format " + header["format"] + " is not supported (expected " +
                                 std::to_string(kModelFormatVersion) + ")");
      }
      continue;
    }
    in_body = true;
    body += line;
    body += '\n';
  }
  for (const char* key : {"format", "language_id", "config", "k", "dedup", "checksum"}) {
    if (!header.count(key)) throw ParseError(std::string("model header lacks '") + key + "'");
  }
  if (hex64(fnv1a64(body)) != header["checksum"]) {
    throw ParseError("model checksum mismatch (file truncated or edited)");
  }

  StoreMeta meta;
  meta.language_id = header["language_id"];
  meta.config_fingerprint = header["config"];
  try {
    meta.window_k = std::stoi(header["k"]);
  } catch (const std::exception&) {
    throw ParseError("bad k in model header");
  }
  if (header["dedup"] != "0" && header["dedup"] != "1") throw ParseError("bad dedup flag");
  meta.dedup = header["dedup"] == "1";
  CountStore store(meta);

  enum class Section { kNone, kNoun, kVerb, kNp, kVp } section = Section::kNone;
  std::istringstream bin(body);
  std::size_t body_line = line_no - static_cast<std::size_t>(std::count(body.begin(), body.end(), '\n'));
  while (std::getline(bin, line)) {
    ++body_line;
    if (line == "NOUN") { section = Section::kNoun; continue; }
    if (line == "VERB") { section = Section::kVerb; continue; }
    if (line == "NP") { section = Section::kNp; continue; }
    if (line == "VP") { section = Section::kVp; continue; }
    const auto cols = split_tabs(line);
    switch (section) {
      case Section::kNone:
        throw ParseError("row outside of any section", body_line);
      case Section::kNoun:
      case Section::kVerb:
        if (cols.size() != 2 || cols[0].empty()) throw ParseError("expected 'word TAB count'", body_line);
        store.add_corpus_word(section == Section::kNoun ? Attachment::kNoun : Attachment::kVerb,
                              cols[0], parse_count(cols[1], body_line));
        break;
      case Section::kNp:
      case Section::kVp:
        if (cols.size() != 3 || cols[0].empty() || cols[1].empty()) {
          throw ParseError("expected 'head TAB prep TAB count'", body_line);
        }
        store.add_tuple(section == Section::kNp ? Attachment::kNoun : Attachment::kVerb, cols[0],
                        cols[1], parse_count(cols[2], body_line));
        break;
    }
  }
  if (totals != totals_of(store)) throw ParseError("model totals do not match its rows");
  return store;
}

void save(const CountStore& store, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write model '" + path + "'");
  out << serialize(store);
  if (!out) throw IoError("write failed for '" + path + "'");
}

CountStore load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open model '" + path + "'");
  return deserialize(in);
}

}  // namespace ppattach
