#include "ppattach/synthetic.hpp"

#include <cmath>
#include <random>

#include "ppattach/error.hpp"

namespace ppattach {
namespace {

// std::mt19937_64 output is fully specified; the standard distributions are
// not, so draws are derived by hand to keep corpora identical across libraries.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

  const std::string& from(const std::vector<std::pair<std::string, double>>& dist) {
    double u = unit();
    for (const auto& [word, prob] : dist) {
      if (u < prob) return word;
      u -= prob;
    }
    return dist.back().first;
  }

 private:
  std::mt19937_64 engine_;
};

void validate(const std::vector<PlantedHead>& heads, const char* what) {
  if (heads.empty()) throw UsageError(std::string("synthetic spec has no ") + what);
  for (const auto& h : heads) {
    if (h.lemma.empty()) throw UsageError(std::string("empty ") + what + " lemma");
    if (h.prep_distribution.empty()) {
      throw UsageError("empty preposition distribution for '" + h.lemma + "'");
    }
    double total = 0.0;
    for (const auto& [p, prob] : h.prep_distribution) {
      if (p.empty() || !(prob >= 0.0)) {
        throw UsageError("invalid preposition entry for '" + h.lemma + "'");
      }
      total += prob;
    }
    if (std::fabs(total - 1.0) > 1e-9) {
      throw UsageError("preposition distribution for '" + h.lemma + "' sums to " +
                       std::to_string(total) + ", not 1");
    }
  }
}

TaggedToken tok(const std::string& surface, const char* tag) { return {surface, tag}; }

}  // namespace

const std::string& PlantedHead::dominant_prep() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < prep_distribution.size(); ++i) {
    if (prep_distribution[i].second > prep_distribution[best].second) best = i;
  }
  return prep_distribution[best].first;
}

SyntheticCorpus generate_synthetic_corpus(const SyntheticSpec& spec) {
  validate(spec.verbs, "verbs");
  validate(spec.nouns, "nouns");
  if (spec.objects.empty()) throw UsageError("synthetic spec has no objects");
  if (spec.verb_pp_share < 0 || spec.noun_pp_share < 0 ||
      spec.verb_pp_share + spec.noun_pp_share > 1.0) {
    throw UsageError("sentence shares must be non-negative and sum to at most 1");
  }

  SyntheticCorpus out;
  if (spec.sentences == 0) return out;
  Draw draw(spec.seed);

  out.sentences.reserve(spec.sentences);
  for (std::size_t i = 0; i < spec.sentences; ++i) {
    const double kind = draw.unit();
    Sentence s;
    if (kind < spec.verb_pp_share) {
      const auto& v = spec.verbs[draw.below(spec.verbs.size())];
      const auto& p = draw.from(v.prep_distribution);
      const auto& n2 = spec.objects[draw.below(spec.objects.size())];
      s.tokens = {tok("they", "PRP"), tok(v.lemma, "VBD"), tok(p, "IN"), tok("the", "DT"),
                  tok(n2, "NN"), tok(".", ".")};
    } else if (kind < spec.verb_pp_share + spec.noun_pp_share) {
      const auto& n = spec.nouns[draw.below(spec.nouns.size())];
      const auto& p = draw.from(n.prep_distribution);
      const auto& n2 = spec.objects[draw.below(spec.objects.size())];
      s.tokens = {tok("the", "DT"), tok(n.lemma, "NN"), tok(p, "IN"), tok("the", "DT"),
                  tok(n2, "NN"), tok(".", ".")};
    } else {
      const auto& v = spec.verbs[draw.below(spec.verbs.size())];
      const auto& n = spec.nouns[draw.below(spec.nouns.size())];
      s.tokens = {tok("they", "PRP"), tok(v.lemma, "VBD"), tok("the", "DT"), tok(n.lemma, "NN"),
                  tok(".", ".")};
    }
    out.sentences.push_back(std::move(s));
  }

  constexpr int kMaxTries = 1000;
  out.test.reserve(spec.test_items);
  for (std::size_t i = 0; i < spec.test_items; ++i) {
    const bool verb_gold = draw.unit() < 0.5;
    int tries = 0;
    for (;; ++tries) {
      if (tries == kMaxTries) {
        throw UsageError("cannot find a verb and noun with different dominant prepositions");
      }
      const auto& v = spec.verbs[draw.below(spec.verbs.size())];
      const auto& n = spec.nouns[draw.below(spec.nouns.size())];
      if (v.dominant_prep() == n.dominant_prep()) continue;
      const auto& n2 = spec.objects[draw.below(spec.objects.size())];
      out.test.push_back({v.lemma, n.lemma, verb_gold ? v.dominant_prep() : n.dominant_prep(), n2,
                          verb_gold ? Attachment::kVerb : Attachment::kNoun});
      break;
    }
  }
  return out;
}

SyntheticSpec default_synthetic_spec(std::size_t sentences, std::size_t test_items,
                                     std::uint64_t seed, double dominance) {
  static const std::vector<std::string> preps = {"with", "for", "on", "in",
                                                 "at",   "from", "to", "by"};
  static const std::vector<std::string> verbs = {
      "wash", "buy",  "send", "pay",   "cut",   "hold",  "open",   "build",  "sell",  "carry",
      "move", "cook", "fix",  "paint", "clean", "store", "mail",   "print",  "ship",  "load"};
  static const std::vector<std::string> nouns = {
      "shirt", "cake",  "letter", "bill",  "rope",  "box",   "door",   "house", "car",   "bag",
      "table", "soup",  "roof",   "wall",  "floor", "crate", "parcel", "book",  "truck", "tray"};
  static const std::vector<std::string> objects = {"soap", "pocket", "friend", "cash", "knife",
                                                   "hand", "key",    "tool",   "oven", "brush",
                                                   "shelf", "sack",   "press",  "boat", "van"};
  const auto planted = [&](const std::string& lemma, std::size_t favourite) {
    PlantedHead h{lemma, {}};
    const double rest = (1.0 - dominance) / static_cast<double>(preps.size() - 1);
    for (std::size_t i = 0; i < preps.size(); ++i) {
      h.prep_distribution.emplace_back(preps[i], i == favourite ? dominance : rest);
    }
    return h;
  };
  SyntheticSpec spec;
  for (std::size_t i = 0; i < verbs.size(); ++i) spec.verbs.push_back(planted(verbs[i], i % 4));
  for (std::size_t i = 0; i < nouns.size(); ++i) spec.nouns.push_back(planted(nouns[i], 4 + i % 4));
  spec.objects = objects;
  spec.sentences = sentences;
  spec.test_items = test_items;
  spec.seed = seed;
  return spec;
}

}  // namespace ppattach
