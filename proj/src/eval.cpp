#include "ppattach/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <istream>
#include <sstream>

#include "ppattach/error.hpp"
#include "ppattach/pipeline.hpp"

namespace ppattach {

std::vector<AttachmentInstance> parse_instances(std::istream& in, bool require_gold) {
  std::vector<AttachmentInstance> out;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    std::istringstream fields(line);
    std::vector<std::string> f;
    for (std::string w; fields >> w;) f.push_back(std::move(w));
    if (f.empty() || f[0][0] == '#') continue;
    if (f.size() == 6) f.erase(f.begin());
    if (f.size() != 5 && !(f.size() == 4 && !require_gold)) {
      throw ParseError("expected 'v n p n2 label', got " + std::to_string(f.size()) + " fields", row);
    }
    AttachmentInstance inst{to_lower(f[0]), to_lower(f[1]), to_lower(f[2]), to_lower(f[3]), {}};
    if (f.size() == 5) {
      inst.gold = parse_attachment(f[4]);
      if (!inst.gold) throw ParseError("label must be N or V, got '" + f[4] + "'", row);
    }
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<AttachmentInstance> load_test_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open test set '" + path + "'");
  return parse_instances(in, true);
}

std::vector<Attachment> gold_labels(const std::vector<AttachmentInstance>& instances) {
  std::vector<Attachment> gold;
  gold.reserve(instances.size());
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (!instances[i].gold) {
      throw UsageError("instance " + std::to_string(i + 1) + " has no gold label");
    }
    gold.push_back(*instances[i].gold);
  }
  return gold;
}

std::vector<Attachment> labels_of(const std::vector<ClassificationResult>& results) {
  std::vector<Attachment> out;
  out.reserve(results.size());
  for (const auto& r : results) out.push_back(r.label);
  return out;
}

EvalReport evaluate(const std::vector<AttachmentInstance>& instances, const Classifier& classifier) {
  const std::vector<Attachment> gold = gold_labels(instances);
  EvalReport report;
  report.classifier = std::string(to_string(classifier.variant()));
  report.predictions = kernels::classify_all(instances, classifier);
  for (std::size_t i = 0; i < instances.size(); ++i) {
    SubsetRow& row = classifier.config().is_of_equivalent(instances[i].p) ? report.of : report.non_of;
    const bool ok = report.predictions[i].label == gold[i];
    ++row.events;
    row.correct += ok ? 1 : 0;
  }
  report.total.events = report.of.events + report.non_of.events;
  report.total.correct = report.of.correct + report.non_of.correct;
  return report;
}

namespace {

std::string percent(const SubsetRow& row) {
  const auto acc = row.accuracy();
  if (!acc) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", *acc * 100.0);
  return buf;
}

std::string join_set(const TagSet& s, const char* sep) {
  std::string out;
  for (const auto& w : s) {
    if (!out.empty()) out += sep;
    out += w;
  }
  return out;
}

}  // namespace

std::string format_report_table(const EvalReport& report, const TagConfig& config) {
  const std::string ofs = join_set(config.of_equivalents, "|");
  const std::vector<std::pair<std::string, const SubsetRow*>> rows = {
      {"p = " + ofs, &report.of}, {"p != " + ofs, &report.non_of}, {"Total", &report.total}};
  std::size_t w = std::string("Accuracy").size();
  for (const auto& [label, row] : rows) w = std::max(w, label.size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(w)) << "Subset" << "  " << std::right
      << std::setw(8) << "Events" << "  " << std::setw(10) << report.classifier << '\n';
  for (const auto& [label, row] : rows) {
    out << std::left << std::setw(static_cast<int>(w)) << label << "  " << std::right
        << std::setw(8) << row->events << "  " << std::setw(10) << row->correct << '\n';
  }
  out << std::left << std::setw(static_cast<int>(w)) << "Accuracy" << "  " << std::right
      << std::setw(8) << "-" << "  " << std::setw(10) << percent(report.total) << '\n';
  return out.str();
}

std::string format_report_tsv(const EvalReport& report) {
  std::ostringstream out;
  out << "subset\tevents\tcorrect\taccuracy\n";
  for (const SubsetRow* row : {&report.of, &report.non_of, &report.total}) {
    out << row->subset << '\t' << row->events << '\t' << row->correct << '\t';
    if (const auto acc = row->accuracy()) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", *acc);
      out << buf;
    }
    out << '\n';
  }
  return out.str();
}

double sign_test_p_value(std::uint64_t k, std::uint64_t m) {
  const std::uint64_t n = k + m;
  if (n == 0) return 1.0;
  const std::uint64_t hi = std::max(k, m);
  // Upper tail in log space: pmf(i) = C(n, i) / 2^n.
  const long double log_half_n = static_cast<long double>(n) * std::log(2.0L);
  const long double lg_n1 = std::lgamma(static_cast<long double>(n) + 1.0L);
  long double tail = 0.0L;
  for (std::uint64_t i = hi; i <= n; ++i) {
    const long double log_c = lg_n1 - std::lgamma(static_cast<long double>(i) + 1.0L) -
                              std::lgamma(static_cast<long double>(n - i) + 1.0L);
    tail += std::exp(log_c - log_half_n);
  }
  return static_cast<double>(std::min(1.0L, 2.0L * tail));
}

PairedComparison changed_cases_test(const std::vector<Attachment>& a,
                                    const std::vector<Attachment>& b,
                                    const std::vector<Attachment>& gold) {
  if (a.size() != gold.size() || b.size() != gold.size()) {
    throw UsageError("paired comparison needs equally long prediction lists");
  }
  PairedComparison cmp;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const bool ca = a[i] == gold[i];
    const bool cb = b[i] == gold[i];
    if (ca && cb) {
      ++cmp.both_correct;
    } else if (ca) {
      ++cmp.a_only_correct;
    } else if (cb) {
      ++cmp.b_only_correct;
    } else {
      ++cmp.neither_correct;
    }
  }
  cmp.p_value = sign_test_p_value(cmp.a_only_correct, cmp.b_only_correct);
  return cmp;
}

std::string format_comparison(const PairedComparison& cmp, const std::string& name_a,
                              const std::string& name_b) {
  const int w = static_cast<int>(std::max(name_a.size(), name_b.size()) + 8);
  std::ostringstream out;
  out << std::left << std::setw(w) << "" << std::right << std::setw(w) << (name_b + " right")
      << std::setw(w) << (name_b + " wrong") << '\n';
  out << std::left << std::setw(w) << (name_a + " right") << std::right << std::setw(w)
      << cmp.both_correct << std::setw(w) << cmp.a_only_correct << '\n';
  out << std::left << std::setw(w) << (name_a + " wrong") << std::right << std::setw(w)
      << cmp.b_only_correct << std::setw(w) << cmp.neither_correct << '\n';
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", cmp.p_value);
  out << "discordant pairs: " << cmp.a_only_correct << " vs " << cmp.b_only_correct
      << ", two-sided sign test p = " << buf << '\n';
  return out.str();
}

}  // namespace ppattach
