#include "ppattach/models.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "ppattach/chunker.hpp"
#include "ppattach/error.hpp"

namespace ppattach {
namespace {

constexpr double kTieTolerance = 1e-12;

std::size_t idx(Attachment site) { return site == Attachment::kNoun ? 0 : 1; }

const char* site_name(Attachment site) { return site == Attachment::kNoun ? "noun" : "verb"; }

Count head_total_scan(const CountStore& store, Attachment site, const std::string& head) {
  Count total = 0;
  const auto& m = store.tuples(site);
  for (auto it = m.lower_bound({head, std::string()}); it != m.end() && it->first.first == head;
       ++it) {
    total += it->second;
  }
  return total;
}

double pr_true_scan(Attachment site, const std::string& head, const CountStore& store) {
  return static_cast<double>(
      phi_ratio(head_total_scan(store, site, head), store.corpus_count(site, head)).value());
}

}  // namespace

std::string_view to_string(DecisionRule r) {
  switch (r) {
    case DecisionRule::kOfRule: return "of_rule";
    case DecisionRule::kModel: return "model";
    case DecisionRule::kZeroFallback: return "zero_fallback";
    case DecisionRule::kTieFallback: return "tie_fallback";
  }
  return "model";
}

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::kBaseline: return "baseline";
    case Variant::kBigram: return "bigram";
    case Variant::kInterp: return "interp";
  }
  return "baseline";
}

std::optional<Variant> parse_variant(std::string_view s) {
  if (s == "baseline") return Variant::kBaseline;
  if (s == "bigram") return Variant::kBigram;
  if (s == "interp" || s == "interpolation") return Variant::kInterp;
  return std::nullopt;
}

Rational phi_ratio(Count head_true, Count head_corpus) {
  if (head_corpus == 0) return Rational(1, 2);
  return Rational(std::min(head_true, head_corpus), head_corpus);
}

Rational bigram_ratio(Count head_prep, Count head_true, std::size_t vocab_size) {
  if (head_true > 0) return Rational(head_prep, head_true);
  if (vocab_size == 0) throw ModelNotTrainedError("no prepositions in the model");
  return Rational(1, vocab_size);
}

Rational interp_ratio(Count head_prep, Count head_true, Count type_prep, Count type_total) {
  if (type_total == 0) throw ModelNotTrainedError("no tuples for this attachment type");
  using Int = Rational::Int;
  return Rational(Int(head_prep) * type_total + type_prep, Int(type_total) * (Int(head_true) + 1));
}

double pr_true_given_noun(const std::string& n, const CountStore& store) {
  return pr_true_scan(Attachment::kNoun, n, store);
}

double pr_true_given_verb(const std::string& v, const CountStore& store) {
  return pr_true_scan(Attachment::kVerb, v, store);
}

double pr_p_bigram(const std::string& p, Attachment site, const std::string& head,
                   const CountStore& store) {
  const std::size_t vocab = store.prep_vocab().size();
  if (vocab == 0) throw ModelNotTrainedError("bigram estimator needs at least one preposition");
  return static_cast<double>(
      bigram_ratio(store.tuple_count(site, head, p), head_total_scan(store, site, head), vocab)
          .value());
}

double pr_p_interp(const std::string& p, Attachment site, const std::string& head,
                   const CountStore& store) {
  Count type_prep = 0;
  Count type_total = 0;
  for (const auto& [key, c] : store.tuples(site)) {
    type_total += c;
    if (key.second == p) type_prep += c;
  }
  if (type_total == 0) {
    throw ModelNotTrainedError(std::string("interpolation needs ") + site_name(site) +
                               "-attached tuples");
  }
  return static_cast<double>(interp_ratio(store.tuple_count(site, head, p),
                                          head_total_scan(store, site, head), type_prep, type_total)
                                 .value());
}

Estimator::Estimator(const CountStore& store, Variant variant)
    : store_(&store), variant_(variant) {
  if (variant == Variant::kBaseline) {
    throw UsageError("the baseline classifier does not use an estimator");
  }
  for (const Attachment site : {Attachment::kNoun, Attachment::kVerb}) {
    for (const auto& [key, c] : store.tuples(site)) {
      head_total_[idx(site)][key.first] += c;
      type_prep_[idx(site)][key.second] += c;
      type_total_[idx(site)] += c;
    }
  }
  vocab_size_ = store.prep_vocab().size();
  if (variant == Variant::kBigram && vocab_size_ == 0) {
    throw ModelNotTrainedError("bigram estimator needs at least one preposition");
  }
  if (variant == Variant::kInterp) {
    for (const Attachment site : {Attachment::kNoun, Attachment::kVerb}) {
      if (type_total_[idx(site)] == 0) {
        throw ModelNotTrainedError(std::string("interpolation needs ") + site_name(site) +
                                   "-attached tuples");
      }
    }
  }
}

Count Estimator::head_total(Attachment site, const std::string& head) const {
  const auto& m = head_total_[idx(site)];
  const auto it = m.find(head);
  return it == m.end() ? 0 : it->second;
}

Count Estimator::type_prep(Attachment site, const std::string& p) const {
  const auto& m = type_prep_[idx(site)];
  const auto it = m.find(p);
  return it == m.end() ? 0 : it->second;
}

Count Estimator::type_total(Attachment site) const { return type_total_[idx(site)]; }

Rational Estimator::pr_true(Attachment site, const std::string& head) const {
  return phi_ratio(head_total(site, head), store_->corpus_count(site, head));
}

Rational Estimator::pr_prep(const std::string& p, Attachment site, const std::string& head) const {
  const Count hp = store_->tuple_count(site, head, p);
  const Count ht = head_total(site, head);
  if (variant_ == Variant::kBigram) return bigram_ratio(hp, ht, vocab_size_);
  return interp_ratio(hp, ht, type_prep(site, p), type_total(site));
}

namespace {

struct Products {
  Rational phi_n, phi_v, prep_n, prep_v;
};

Products products(const AttachmentInstance& inst, const Estimator& est) {
  return {est.pr_true(Attachment::kNoun, inst.n), est.pr_true(Attachment::kVerb, inst.v),
          est.pr_prep(inst.p, Attachment::kNoun, inst.n),
          est.pr_prep(inst.p, Attachment::kVerb, inst.v)};
}

std::pair<double, double> normalized(const Products& pr) {
  const long double z = pr.phi_n.value() + pr.phi_v.value();
  if (pr.phi_n.num() == 0 && pr.phi_v.num() == 0) return {0.0, 0.0};
  return {static_cast<double>(pr.phi_n.value() / z * pr.prep_n.value()),
          static_cast<double>(pr.phi_v.value() / z * pr.prep_v.value())};
}

}  // namespace

std::pair<double, double> attachment_scores(const AttachmentInstance& instance,
                                            const Estimator& estimator) {
  return normalized(products(instance, estimator));
}

ClassificationResult decide_attachment(const Rational& phi_n, const Rational& phi_v,
                                       const Rational& prep_n, const Rational& prep_v) {
  const Products pr{phi_n, phi_v, prep_n, prep_v};
  ClassificationResult r;
  std::tie(r.score_n, r.score_v) = normalized(pr);
  if (phi_n.num() == 0 && phi_v.num() == 0) {
    r.label = Attachment::kVerb;
    r.rule = DecisionRule::kZeroFallback;
    return r;
  }

  // Z is shared by both sides, so the unnormalized products decide.
  std::optional<int> order;
  const auto lhs = Rational::multiply(phi_n, prep_n);
  const auto rhs = Rational::multiply(phi_v, prep_v);
  if (lhs && rhs) order = Rational::compare(*lhs, *rhs);
  if (!order) {
    const long double a = phi_n.value() * prep_n.value();
    const long double b = phi_v.value() * prep_v.value();
    const long double scale = std::max(std::fabs(a), std::fabs(b));
    order = std::fabs(a - b) <= kTieTolerance * scale ? 0 : (a < b ? -1 : 1);
  }
  if (*order == 0) {
    r.label = Attachment::kNoun;
    r.rule = DecisionRule::kTieFallback;
  } else {
    r.label = *order > 0 ? Attachment::kNoun : Attachment::kVerb;
    r.rule = DecisionRule::kModel;
  }
  return r;
}

ClassificationResult classify(const AttachmentInstance& instance, const Estimator& estimator,
                              const TagConfig& config) {
  if (config.is_of_equivalent(instance.p)) {
    ClassificationResult r;
    r.label = Attachment::kNoun;
    r.rule = DecisionRule::kOfRule;
    return r;
  }
  const Products pr = products(instance, estimator);
  return decide_attachment(pr.phi_n, pr.phi_v, pr.prep_n, pr.prep_v);
}

ClassificationResult classify_baseline(const AttachmentInstance& instance,
                                       const TagConfig& config) {
  ClassificationResult r;
  if (config.is_of_equivalent(instance.p)) {
    r.label = Attachment::kNoun;
    r.rule = DecisionRule::kOfRule;
  } else {
    r.label = Attachment::kVerb;
    r.rule = DecisionRule::kModel;
  }
  return r;
}

Classifier::Classifier(TagConfig config) : config_(std::move(config)) {}

Classifier::Classifier(TagConfig config, const CountStore& store, Variant variant)
    : config_(std::move(config)), variant_(variant) {
  if (variant != Variant::kBaseline) estimator_.emplace(store, variant);
}

ClassificationResult Classifier::operator()(const AttachmentInstance& instance) const {
  if (!estimator_) return classify_baseline(instance, config_);
  return classify(instance, *estimator_, config_);
}

AttachmentInstance normalize_instance(AttachmentInstance instance, const TagConfig& config,
                                      const MorphLexicon& lexicon) {
  const auto word = [&](const std::string& w, LemmaClass cls) {
    return is_numeric(w) ? config.num_token : lemmatize(w, cls, lexicon);
  };
  instance.v = word(instance.v, LemmaClass::kVerb);
  instance.n = word(instance.n, LemmaClass::kNoun);
  instance.p = to_lower(instance.p);
  instance.n2 = word(instance.n2, LemmaClass::kNoun);
  return instance;
}

}  // namespace ppattach
