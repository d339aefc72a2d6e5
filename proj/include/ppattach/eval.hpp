#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ppattach/attachment.hpp"
#include "ppattach/models.hpp"
#include "ppattach/tag_config.hpp"

namespace ppattach {

/// Reads "v n p n2 label" rows (whitespace separated). A leading sentence-id
/// column (six fields) is accepted and ignored. With require_gold = false,
/// four-field unlabeled rows are also accepted. Words are lowercased.
std::vector<AttachmentInstance> parse_instances(std::istream& in, bool require_gold = true);
std::vector<AttachmentInstance> load_test_set(const std::string& path);

struct SubsetRow {
  std::string subset;  // "of", "non_of", "total"
  std::uint64_t events = 0;
  std::uint64_t correct = 0;

  /// Absent when there are no events.
  std::optional<double> accuracy() const {
    if (events == 0) return std::nullopt;
    return static_cast<double>(correct) / static_cast<double>(events);
  }

  friend bool operator==(const SubsetRow&, const SubsetRow&) = default;
};

struct EvalReport {
  std::string classifier;
  SubsetRow of{"of"};
  SubsetRow non_of{"non_of"};
  SubsetRow total{"total"};
  std::vector<ClassificationResult> predictions;  // aligned with the input
};

/// Scores a classifier against gold labels. Subset membership follows the
/// classifier config's of-equivalents. Throws UsageError on missing gold.
EvalReport evaluate(const std::vector<AttachmentInstance>& instances, const Classifier& classifier);

/// Aligned table with rows of / non_of / total / accuracy.
std::string format_report_table(const EvalReport& report, const TagConfig& config);
/// "subset TAB events TAB correct TAB accuracy" rows.
std::string format_report_tsv(const EvalReport& report);

struct PairedComparison {
  std::uint64_t a_only_correct = 0;
  std::uint64_t b_only_correct = 0;
  std::uint64_t both_correct = 0;
  std::uint64_t neither_correct = 0;
  double p_value = 1.0;

  std::uint64_t total() const {
    return a_only_correct + b_only_correct + both_correct + neither_correct;
  }
};

/// Exact two-sided sign test on discordant pairs: with k = a_only and
/// m = b_only, p = min(1, 2 * P[X >= max(k, m)]) for X ~ Binomial(k + m, 1/2).
double sign_test_p_value(std::uint64_t k, std::uint64_t m);

/// Pairs two prediction lists against the same gold labels.
PairedComparison changed_cases_test(const std::vector<Attachment>& a,
                                    const std::vector<Attachment>& b,
                                    const std::vector<Attachment>& gold);

std::string format_comparison(const PairedComparison& cmp, const std::string& name_a,
                              const std::string& name_b);

/// Gold labels of instances; throws UsageError if any is missing.
std::vector<Attachment> gold_labels(const std::vector<AttachmentInstance>& instances);
std::vector<Attachment> labels_of(const std::vector<ClassificationResult>& results);

}  // namespace ppattach
