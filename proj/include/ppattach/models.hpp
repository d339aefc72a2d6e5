#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>

#include "ppattach/attachment.hpp"
#include "ppattach/corpus_io.hpp"
#include "ppattach/counts.hpp"
#include "ppattach/rational.hpp"
#include "ppattach/tag_config.hpp"

namespace ppattach {

/// Ambiguous (v, n, p, n2) item. n2 is carried but never scored.
struct AttachmentInstance {
  std::string v;
  std::string n;
  std::string p;
  std::string n2;
  std::optional<Attachment> gold;

  friend bool operator==(const AttachmentInstance&, const AttachmentInstance&) = default;
};

enum class DecisionRule { kOfRule, kModel, kZeroFallback, kTieFallback };

std::string_view to_string(DecisionRule r);

struct ClassificationResult {
  Attachment label = Attachment::kVerb;
  double score_n = 0.0;
  double score_v = 0.0;
  DecisionRule rule = DecisionRule::kModel;
};

enum class Variant { kBaseline, kBigram, kInterp };

std::string_view to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view s);

// Raw formulas over counts, exact.

/// c(h,true)/c(h), clamped to 1; 1/2 when c(h) = 0.
Rational phi_ratio(Count head_true, Count head_corpus);
/// c(h,p,true)/c(h,true); 1/|P| when c(h,true) = 0.
Rational bigram_ratio(Count head_prep, Count head_true, std::size_t vocab_size);
/// (c(h,p,true) + c_T(p)/c_T) / (c(h,true) + 1) for attachment type T.
Rational interp_ratio(Count head_prep, Count head_true, Count type_prep, Count type_total);

// Store-level estimators. These derive marginals by scanning the store; use
// Estimator for repeated queries.

double pr_true_given_noun(const std::string& n, const CountStore& store);
double pr_true_given_verb(const std::string& v, const CountStore& store);
/// Throws ModelNotTrainedError when no preposition has been seen.
double pr_p_bigram(const std::string& p, Attachment site, const std::string& head,
                   const CountStore& store);
/// Throws ModelNotTrainedError when the site has no tuples at all.
double pr_p_interp(const std::string& p, Attachment site, const std::string& head,
                   const CountStore& store);

/// Immutable view over a CountStore with cached marginals. The store must
/// outlive the estimator.
class Estimator {
 public:
  /// Throws ModelNotTrainedError if the store cannot support the variant.
  Estimator(const CountStore& store, Variant variant);

  Variant variant() const { return variant_; }
  const CountStore& store() const { return *store_; }

  Rational pr_true(Attachment site, const std::string& head) const;
  Rational pr_prep(const std::string& p, Attachment site, const std::string& head) const;

  Count head_total(Attachment site, const std::string& head) const;
  Count type_prep(Attachment site, const std::string& p) const;
  Count type_total(Attachment site) const;
  std::size_t vocab_size() const { return vocab_size_; }

 private:
  const CountStore* store_;
  Variant variant_;
  std::unordered_map<std::string, Count> head_total_[2];
  std::unordered_map<std::string, Count> type_prep_[2];
  Count type_total_[2] = {0, 0};
  std::size_t vocab_size_ = 0;
};

/// Normalized scores Pr(a|v,n) * Pr(p|a,v,n) for N and V; both 0 when
/// Pr(true|n) + Pr(true|v) = 0.
std::pair<double, double> attachment_scores(const AttachmentInstance& instance,
                                            const Estimator& estimator);

/// Argmax over a in {N, V} of Pr(true|a-head) * Pr(p|true, a-head), with the
/// zero and tie fallbacks. Exact unless the products overflow 128 bits, in
/// which case ties are detected at 1e-12 relative tolerance.
ClassificationResult decide_attachment(const Rational& phi_n, const Rational& phi_v,
                                       const Rational& prep_n, const Rational& prep_v);

ClassificationResult classify(const AttachmentInstance& instance, const Estimator& estimator,
                              const TagConfig& config);

ClassificationResult classify_baseline(const AttachmentInstance& instance,
                                       const TagConfig& config);

/// Dispatches to the baseline or to an estimator-backed classifier.
class Classifier {
 public:
  /// Baseline only.
  explicit Classifier(TagConfig config);
  Classifier(TagConfig config, const CountStore& store, Variant variant);

  Variant variant() const { return variant_; }
  ClassificationResult operator()(const AttachmentInstance& instance) const;
  const TagConfig& config() const { return config_; }

 private:
  TagConfig config_;
  Variant variant_ = Variant::kBaseline;
  std::optional<Estimator> estimator_;
};

/// Lowercases, lemmatizes v and n, and replaces numeric words with the num
/// token so test items share the training vocabulary.
AttachmentInstance normalize_instance(AttachmentInstance instance, const TagConfig& config,
                                      const MorphLexicon& lexicon);

}  // namespace ppattach
