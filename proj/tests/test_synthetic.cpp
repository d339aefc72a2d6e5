#include "doctest.h"

#include "ppattach/error.hpp"
#include "ppattach/eval.hpp"
#include "ppattach/pipeline.hpp"
#include "ppattach/synthetic.hpp"

using namespace ppattach;

TEST_SUITE_BEGIN("synthetic");

TEST_CASE("same seed, same corpus; different seed, different corpus") {
  const auto a = generate_synthetic_corpus(default_synthetic_spec(300, 50, 99));
  const auto b = generate_synthetic_corpus(default_synthetic_spec(300, 50, 99));
  const auto c = generate_synthetic_corpus(default_synthetic_spec(300, 50, 100));
  CHECK(a.sentences == b.sentences);
  CHECK(a.test == b.test);
  CHECK_FALSE(a.sentences == c.sentences);
  CHECK(a.sentences.size() == 300);
  CHECK(a.test.size() == 50);
}

TEST_CASE("zero sentences give an empty corpus and test set") {
  const auto empty = generate_synthetic_corpus(default_synthetic_spec(0, 50, 1));
  CHECK(empty.sentences.empty());
  CHECK(empty.test.empty());
}

TEST_CASE("invalid distributions are rejected") {
  SyntheticSpec spec = default_synthetic_spec(10, 10, 1);
  spec.verbs[0].prep_distribution[0].second += 0.1;
  CHECK_THROWS_AS(generate_synthetic_corpus(spec), UsageError);
  spec = default_synthetic_spec(10, 10, 1);
  spec.nouns[0].prep_distribution.clear();
  CHECK_THROWS_AS(generate_synthetic_corpus(spec), UsageError);
  spec = default_synthetic_spec(10, 10, 1);
  spec.nouns[1].prep_distribution[0].second -= 1.0;
  spec.nouns[1].prep_distribution[1].second += 1.0;
  CHECK_THROWS_AS(generate_synthetic_corpus(spec), UsageError);
}

TEST_CASE("every generated sentence yields the planted tuple shape") {
  const SyntheticSpec spec = default_synthetic_spec(500, 0, 5);
  const auto corpus = generate_synthetic_corpus(spec);
  const TagConfig en = english_profile();
  const auto pass = kernels::chunk_and_extract(corpus.sentences, en, {});
  // One tuple per PP sentence and none for the transitive clauses.
  std::size_t with_prep = 0;
  for (const auto& s : corpus.sentences) {
    for (const auto& t : s.tokens) with_prep += t.tag == "IN";
  }
  CHECK(pass.tuples.size() == with_prep);
  CHECK(pass.report.prepositions == with_prep);
}

TEST_CASE("a verb that loves 'with' is recovered") {
  SyntheticSpec spec = default_synthetic_spec(2000, 0, 13);
  spec.verbs[0] = {"wash", {{"with", 0.9}, {"in", 0.1}}};
  spec.nouns[0] = {"shirt", {{"on", 0.9}, {"with", 0.1}}};
  const auto corpus = generate_synthetic_corpus(spec);
  const TagConfig en = english_profile();
  const auto pass = kernels::chunk_and_extract(corpus.sentences, en, {});
  CountStore store = kernels::count_corpus(pass.chunked, en, {}, StoreMeta::from_config(en, false));
  store.accumulate_tuples(pass.tuples);
  const Classifier bigram(en, store, Variant::kBigram);
  CHECK(bigram({"wash", "shirt", "with", "soap", Attachment::kVerb}).label == Attachment::kVerb);
  CHECK(bigram({"wash", "shirt", "on", "soap", Attachment::kNoun}).label == Attachment::kNoun);
}

TEST_SUITE_END();
