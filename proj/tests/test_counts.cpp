#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <random>
#include <sstream>

#include "ppattach/counts.hpp"
#include "ppattach/error.hpp"
#include "ppattach/models.hpp"
#include "ppattach/pipeline.hpp"
#include "test_data.hpp"

using namespace ppattach;

namespace {

const MorphLexicon& english_lexicon() {
  static const MorphLexicon lex = load_lexicon(data_path("english.lex"));
  return lex;
}

CountStore random_store(std::mt19937& rng, const StoreMeta& meta) {
  static const char* words[] = {"a", "b", "c", "d", "e"};
  static const char* preps[] = {"in", "on", "to", "with"};
  CountStore s(meta);
  const int n = static_cast<int>(rng() % 12);
  for (int i = 0; i < n; ++i) {
    const Attachment site = rng() % 2 ? Attachment::kNoun : Attachment::kVerb;
    if (rng() % 2) {
      s.add_corpus_word(site, words[rng() % 5], rng() % 4 + 1);
    } else {
      s.add_tuple(site, words[rng() % 5], preps[rng() % 4], rng() % 3 + 1);
    }
  }
  return s;
}

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / (std::string("ppattach_test_") + name)).string();
}

}  // namespace

TEST_SUITE_BEGIN("counts");

TEST_CASE("corpus counts of the Table 1 chunked sentence") {
  const TagConfig en = english_profile();
  CountStore store(StoreMeta::from_config(en, false));
  store.accumulate_corpus(chunk(parse_tagged_line(slurp(data_path("table1.tagged"))), en), en,
                          english_lexicon());
  CHECK(store.corpus_verbs() == WordCounts{{"be", 2}, {"guide", 1}, {"permit", 1}});
  CHECK(store.corpus_count(Attachment::kNoun, "lawyer") == 1);
  CHECK(store.corpus_count(Attachment::kNoun, "conduct") == 1);
  CHECK(store.corpus_count(Attachment::kNoun, "ethics") == 0);  // chunked away
}

TEST_CASE("tuple counts") {
  CountStore store;
  store.accumulate_tuples({{Attachment::kVerb, "guide", "by", "rule"},
                           {Attachment::kNoun, "lawyer", "in", "jurisdiction"}});
  CHECK(store.tuple_count(Attachment::kVerb, "guide", "by") == 1);
  CHECK(store.tuple_count(Attachment::kNoun, "lawyer", "in") == 1);
  CHECK(store.tuple_count(Attachment::kNoun, "guide", "by") == 0);
  CHECK(store.prep_vocab() == std::set<std::string>{"by", "in"});

  CountStore twice;
  const HeadTuple t{Attachment::kVerb, "rise", "to", "num"};
  twice.accumulate_tuples({t, t});
  CHECK(twice.tuple_count(Attachment::kVerb, "rise", "to") == 2);

  CHECK(CountStore{}.empty());
  CHECK(CountStore{}.prep_vocab().empty());
}

TEST_CASE("corpus accumulation is linear") {
  const TagConfig en = english_profile();
  const auto chunked = chunk(parse_tagged_line(slurp(data_path("table1.tagged"))), en);
  CountStore once(StoreMeta::from_config(en, false));
  once.accumulate_corpus(chunked, en, english_lexicon());
  CountStore twice = once;
  twice.accumulate_corpus(chunked, en, english_lexicon());
  for (const auto& [lemma, count] : once.corpus_nouns()) {
    CHECK(twice.corpus_count(Attachment::kNoun, lemma) == 2 * count);
  }
}

TEST_CASE("merge is a commutative monoid") {
  std::mt19937 rng(21);
  const StoreMeta meta = StoreMeta::from_config(english_profile(), false);
  for (int iter = 0; iter < 300; ++iter) {
    const CountStore a = random_store(rng, meta);
    const CountStore b = random_store(rng, meta);
    const CountStore c = random_store(rng, meta);
    CHECK(merge(a, CountStore(meta)) == a);
    CHECK(merge(CountStore(meta), a) == a);
    CHECK(merge(a, b) == merge(b, a));
    CHECK(merge(merge(a, b), c) == merge(a, merge(b, c)));
  }
}

TEST_CASE("merge rejects stores built under different settings") {
  const CountStore en(StoreMeta::from_config(english_profile(), false));
  const CountStore es(StoreMeta::from_config(spanish_profile(), false));
  const CountStore en_dedup(StoreMeta::from_config(english_profile(), true));
  CHECK_THROWS_AS(merge(en, es), IncompatibleStoresError);
  CHECK_THROWS_AS(merge(en, en_dedup), IncompatibleStoresError);
}

TEST_CASE("marginals match a full recomputation") {
  std::mt19937 rng(23);
  const StoreMeta meta = StoreMeta::from_config(english_profile(), false);
  for (int iter = 0; iter < 200; ++iter) {
    CountStore s = random_store(rng, meta);
    s.add_tuple(Attachment::kNoun, "a", "in");
    s.add_tuple(Attachment::kVerb, "b", "on");
    const Estimator est(s, Variant::kInterp);
    for (const Attachment site : {Attachment::kNoun, Attachment::kVerb}) {
      Count total = 0;
      std::map<std::string, Count> by_head;
      std::map<std::string, Count> by_prep;
      for (const auto& [key, c] : s.tuples(site)) {
        total += c;
        by_head[key.first] += c;
        by_prep[key.second] += c;
      }
      CHECK(est.type_total(site) == total);
      for (const auto& [h, c] : by_head) CHECK(est.head_total(site, h) == c);
      for (const auto& [p, c] : by_prep) CHECK(est.type_prep(site, p) == c);
      Count sum_over_preps = 0;
      for (const auto& [p, c] : by_prep) sum_over_preps += c;
      CHECK(sum_over_preps == total);
    }
    for (const auto& p : s.prep_vocab()) {
      CHECK(est.type_prep(Attachment::kNoun, p) + est.type_prep(Attachment::kVerb, p) > 0);
    }
  }
}

TEST_CASE("sharded corpus counting equals a single pass") {
  const TagConfig en = english_profile();
  std::istringstream in(slurp(data_path("mini.tagged")));
  const auto corpus = read_corpus(in);
  const auto chunked = kernels::chunk_corpus(corpus, en);
  const StoreMeta meta = StoreMeta::from_config(en, false);
  CountStore single(meta);
  for (const auto& s : chunked) single.accumulate_corpus(s, en, english_lexicon());

  std::mt19937 rng(29);
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<CountStore> shards(1 + rng() % 5, CountStore(meta));
    for (const auto& s : chunked) shards[rng() % shards.size()].accumulate_corpus(s, en, english_lexicon());
    CountStore merged(meta);
    for (const auto& shard : shards) merged.merge_from(shard);
    CHECK(merged == single);
  }
}

TEST_CASE("save and load round-trip byte for byte") {
  std::mt19937 rng(31);
  const StoreMeta meta = StoreMeta::from_config(english_profile(), true);
  for (int iter = 0; iter < 100; ++iter) {
    const CountStore s = random_store(rng, meta);
    const std::string text = serialize(s);
    std::istringstream in(text);
    const CountStore back = deserialize(in);
    CHECK(back == s);
    CHECK(serialize(back) == text);
  }

  // Same content inserted in different orders serializes identically.
  CountStore x(meta);
  CountStore y(meta);
  x.add_tuple(Attachment::kNoun, "b", "in");
  x.add_corpus_word(Attachment::kVerb, "z");
  y.add_corpus_word(Attachment::kVerb, "z");
  y.add_tuple(Attachment::kNoun, "b", "in");
  CHECK(serialize(x) == serialize(y));

  const std::string path = temp_path("roundtrip.model");
  save(x, path);
  CHECK(load(path) == x);
  CHECK(slurp(path) == serialize(x));
  std::remove(path.c_str());
}

TEST_CASE("corrupted model files are rejected") {
  CountStore s(StoreMeta::from_config(english_profile(), false));
  s.add_corpus_word(Attachment::kNoun, "shirt", 3);
  s.add_tuple(Attachment::kVerb, "wash", "with", 2);
  const std::string text = serialize(s);

  std::istringstream truncated(text.substr(0, text.size() - 5));
  CHECK_THROWS_AS(deserialize(truncated), ParseError);

  std::string edited = text;
  edited.replace(edited.find("shirt\t3"), 7, "shirt\t4");
  std::istringstream edited_in(edited);
  CHECK_THROWS_AS(deserialize(edited_in), ParseError);

  std::string future = text;
  future.replace(future.find("format=1"), 8, "format=2");
  std::istringstream future_in(future);
  CHECK_THROWS_AS(deserialize(future_in), FormatVersionError);

  std::istringstream no_header("NOUN\nshirt\t3\n");
  CHECK_THROWS_AS(deserialize(no_header), ParseError);
  CHECK_THROWS_AS(load("/nonexistent/model"), IoError);
}

TEST_SUITE_END();
