#include "doctest.h"

#include <algorithm>
#include <random>
#include <sstream>

#include "ppattach/error.hpp"
#include "ppattach/eval.hpp"
#include "support/oracle.hpp"

using namespace ppattach;

namespace {

constexpr Attachment N = Attachment::kNoun;
constexpr Attachment V = Attachment::kVerb;

std::vector<AttachmentInstance> parse(const std::string& text, bool require_gold = true) {
  std::istringstream in(text);
  return parse_instances(in, require_gold);
}

}  // namespace

TEST_SUITE_BEGIN("eval");

TEST_CASE("test set parsing") {
  const auto items = parse("bought shirt with pockets N\nwashed Shirt with soap V\n\n");
  REQUIRE(items.size() == 2);
  CHECK(items[0] == AttachmentInstance{"bought", "shirt", "with", "pockets", N});
  CHECK(items[1].n == "shirt");
  CHECK(items[1].gold == V);
  CHECK(parse("").empty());

  // Leading sentence ids are dropped.
  const auto rrr = parse("0 join board as director V\n");
  REQUIRE(rrr.size() == 1);
  CHECK(rrr[0].v == "join");

  CHECK(parse("a b c d", false).size() == 1);
  CHECK_FALSE(parse("a b c d", false)[0].gold.has_value());
  CHECK_THROWS_AS(parse("a b c d\n"), ParseError);
  CHECK_THROWS_AS(parse("a b c d X\n"), ParseError);
  try {
    parse("a b c d N\na b c\n");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("baseline on a hand-scored four item set") {
  // Two of-items gold N, one non-of gold V, one non-of gold N: baseline gets 3/4.
  const auto items = parse(
      "eat cake of chocolate N\n"
      "drink glass of water N\n"
      "washed shirt with soap V\n"
      "bought shirt with pockets N\n");
  const EvalReport r = evaluate(items, Classifier(english_profile()));
  CHECK(r.of == SubsetRow{"of", 2, 2});
  CHECK(r.non_of == SubsetRow{"non_of", 2, 1});
  CHECK(r.total == SubsetRow{"total", 4, 3});
  CHECK(r.total.accuracy() == 0.75);
  CHECK(r.of.accuracy() == 1.0);
  CHECK(format_report_tsv(r) ==
        "subset\tevents\tcorrect\taccuracy\nof\t2\t2\t1.000000\nnon_of\t2\t1\t0.500000\n"
        "total\t4\t3\t0.750000\n");
}

TEST_CASE("evaluation edge cases") {
  const EvalReport empty = evaluate({}, Classifier(english_profile()));
  CHECK(empty.total.events == 0);
  CHECK_FALSE(empty.total.accuracy().has_value());
  CHECK(format_report_tsv(empty).find("total\t0\t0\t\n") != std::string::npos);

  // Gold equal to the classifier's own output.
  const auto items = parse("a b with c V\nd e of f N\ng h in i V\n");
  const EvalReport perfect = evaluate(items, Classifier(english_profile()));
  CHECK(perfect.total.accuracy() == 1.0);
  CHECK(perfect.of.accuracy() == 1.0);
  CHECK(perfect.non_of.accuracy() == 1.0);

  CHECK_THROWS_AS(evaluate(parse("a b c d", false), Classifier(english_profile())), UsageError);
}

TEST_CASE("evaluation is permutation invariant and baseline is a direct count") {
  std::mt19937 rng(53);
  const char* preps[] = {"of", "with", "in", "to"};
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<AttachmentInstance> items;
    std::uint64_t expected = 0;
    for (int i = static_cast<int>(rng() % 30); i > 0; --i) {
      const std::string p = preps[rng() % 4];
      const Attachment gold = rng() % 2 ? N : V;
      expected += (p == "of") ? gold == N : gold == V;
      items.push_back({"v", "n", p, "n2", gold});
    }
    const Classifier baseline(english_profile());
    const EvalReport a = evaluate(items, baseline);
    CHECK(a.total.correct == expected);
    std::shuffle(items.begin(), items.end(), rng);
    const EvalReport b = evaluate(items, baseline);
    CHECK(a.of == b.of);
    CHECK(a.non_of == b.non_of);
    CHECK(a.total == b.total);
  }
}

TEST_CASE("sign test") {
  CHECK(sign_test_p_value(0, 0) == 1.0);
  CHECK(sign_test_p_value(9, 1) == doctest::Approx(0.021484375).epsilon(1e-12));
  CHECK(sign_test_p_value(1, 9) == sign_test_p_value(9, 1));
  CHECK(sign_test_p_value(5, 5) == 1.0);
  for (unsigned n = 1; n <= 20; ++n) {
    double prev = 2.0;
    for (unsigned k = (n + 1) / 2; k <= n; ++k) {
      const double p = sign_test_p_value(k, n - k);
      CHECK(p >= 0.0);
      CHECK(p <= 1.0);
      CHECK(p <= prev);
      prev = p;
      CHECK(p == doctest::Approx(oracle::sign_test(k, n - k)).epsilon(1e-12));
    }
  }
  // Large samples stay finite and tiny.
  const double far = sign_test_p_value(3000, 1000);
  CHECK(far >= 0.0);
  CHECK(far < 1e-100);
}

TEST_CASE("changed cases test counts discordant pairs") {
  const std::vector<Attachment> gold = {N, N, V, V, N};
  const std::vector<Attachment> a = {N, N, V, N, V};
  const std::vector<Attachment> b = {V, N, N, V, V};
  const PairedComparison cmp = changed_cases_test(a, b, gold);
  CHECK(cmp.both_correct == 1);
  CHECK(cmp.a_only_correct == 2);
  CHECK(cmp.b_only_correct == 1);
  CHECK(cmp.neither_correct == 1);
  CHECK(cmp.total() == gold.size());
  CHECK(cmp.p_value == doctest::Approx(oracle::sign_test(2, 1)).epsilon(1e-12));

  const PairedComparison swapped = changed_cases_test(b, a, gold);
  CHECK(swapped.p_value == cmp.p_value);
  CHECK(swapped.a_only_correct == cmp.b_only_correct);

  CHECK(changed_cases_test(a, a, gold).p_value == 1.0);
  CHECK_THROWS_AS(changed_cases_test(a, {N}, gold), UsageError);

  const std::string text = format_comparison(cmp, "bigram", "baseline");
  CHECK(text.find("bigram right") != std::string::npos);
  CHECK(text.find("p = ") != std::string::npos);
}

TEST_CASE("report table mirrors the subset layout") {
  const auto items = parse("eat cake of chocolate N\nwashed shirt with soap V\n");
  const std::string table =
      format_report_table(evaluate(items, Classifier(english_profile())), english_profile());
  CHECK(table.find("p = of") != std::string::npos);
  CHECK(table.find("p != of") != std::string::npos);
  CHECK(table.find("Total") != std::string::npos);
  CHECK(table.find("100.00%") != std::string::npos);
  const std::string es =
      format_report_table(evaluate({}, Classifier(spanish_profile())), spanish_profile());
  CHECK(es.find("p = de|del") != std::string::npos);
}

TEST_SUITE_END();
