// ppattach: chunk -> extract -> train -> classify/eval/compare.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "ppattach/chunker.hpp"
#include "ppattach/corpus_io.hpp"
#include "ppattach/counts.hpp"
#include "ppattach/error.hpp"
#include "ppattach/eval.hpp"
#include "ppattach/extractor.hpp"
#include "ppattach/models.hpp"
#include "ppattach/pipeline.hpp"
#include "ppattach/tag_config.hpp"

#ifndef PPATTACH_VERSION
#define PPATTACH_VERSION "dev"
#endif

namespace fs = std::filesystem;
using namespace ppattach;

namespace {

constexpr const char* kConfigDirEnv = "PPATTACH_CONFIG_DIR";

enum ExitCode {
  kOk = 0,
  kIoFailure = 1,
  kUsage = 2,
  kParse = 3,
  kFormatVersion = 4,
  kIncompatible = 5,
  kNotTrained = 6,
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUsage: return kUsage;
    case ErrorKind::kParse: return kParse;
    case ErrorKind::kFormatVersion: return kFormatVersion;
    case ErrorKind::kIncompatible: return kIncompatible;
    case ErrorKind::kNotTrained: return kNotTrained;
    case ErrorKind::kIo: return kIoFailure;
  }
  return kIoFailure;
}

struct Options {
  std::string config;
  std::string lexicon;
  std::string variant = "bigram";
  bool dedup = false;
  int k = 0;
  bool verbose = false;

  std::string input = "-";
  std::string output = "-";
  std::string corpus;
  std::string tuples;
  std::string model;
  std::string test;
  std::string report;
  std::string variant_a = "bigram";
  std::string variant_b = "baseline";
};

// Input stream for a path, "-" meaning stdin.
class Input {
 public:
  explicit Input(const std::string& path) {
    if (path == "-") {
      in_ = &std::cin;
    } else {
      file_ = std::make_unique<std::ifstream>(path, std::ios::binary);
      if (!*file_) throw IoError("cannot open '" + path + "'");
      in_ = file_.get();
    }
  }
  std::istream& get() { return *in_; }

 private:
  std::unique_ptr<std::ifstream> file_;
  std::istream* in_ = nullptr;
};

class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {
    if (path == "-") {
      out_ = &std::cout;
    } else {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw IoError("cannot write '" + path + "'");
      out_ = file_.get();
    }
  }
  std::ostream& get() { return *out_; }
  void finish() {
    out_->flush();
    if (!*out_) throw IoError("write failed for '" + path_ + "'");
  }

 private:
  std::string path_;
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_ = nullptr;
};

TagConfig resolve_config(const Options& o) {
  const char* dir = std::getenv(kConfigDirEnv);
  TagConfig config;
  if (o.config.empty()) {
    if (dir != nullptr && fs::exists(fs::path(dir) / "default.conf")) {
      config = load_tag_config((fs::path(dir) / "default.conf").string());
    } else {
      config = english_profile();
    }
  } else if (fs::exists(o.config)) {
    config = load_tag_config(o.config);
  } else if (dir != nullptr && fs::exists(fs::path(dir) / o.config)) {
    config = load_tag_config((fs::path(dir) / o.config).string());
  } else if (dir != nullptr && fs::exists(fs::path(dir) / (o.config + ".conf"))) {
    config = load_tag_config((fs::path(dir) / (o.config + ".conf")).string());
  } else if (o.config == "english") {
    config = english_profile();
  } else if (o.config == "spanish") {
    config = spanish_profile();
  } else {
    throw IoError("config '" + o.config + "' not found");
  }
  if (o.k != 0) {
    config.window_k = o.k;
    config.validate();
  }
  return config;
}

MorphLexicon resolve_lexicon(const Options& o) {
  if (o.lexicon.empty()) return {};
  std::vector<std::string> warnings;
  MorphLexicon lexicon = load_lexicon(o.lexicon, &warnings);
  if (o.verbose) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
  }
  return lexicon;
}

Variant resolve_variant(const std::string& name) {
  const auto v = parse_variant(name);
  if (!v) throw UsageError("unknown variant '" + name + "' (baseline, bigram, interp)");
  return *v;
}

CountStore load_model_for(const Options& o, const TagConfig& config) {
  if (o.model.empty()) throw UsageError("--model is required for this variant");
  CountStore store = load(o.model);
  if (store.meta().config_fingerprint != config.fingerprint()) {
    throw IncompatibleStoresError("model '" + o.model + "' was trained with a different tag config (" +
                                  store.meta().config_fingerprint + " vs " + config.fingerprint() +
                                  ")");
  }
  return store;
}

std::vector<AttachmentInstance> normalized(std::vector<AttachmentInstance> items,
                                           const TagConfig& config, const MorphLexicon& lexicon) {
  for (auto& item : items) item = normalize_instance(std::move(item), config, lexicon);
  return items;
}

int cmd_chunk(const Options& o) {
  const TagConfig config = resolve_config(o);
  Input in(o.input);
  const auto corpus = read_corpus(in.get());
  const auto chunked = kernels::chunk_corpus(corpus, config);
  Output out(o.output);
  for (const auto& s : chunked) out.get() << format_sentence(s.as_sentence()) << '\n';
  out.finish();
  return kOk;
}

int cmd_extract(const Options& o) {
  const TagConfig config = resolve_config(o);
  const MorphLexicon lexicon = resolve_lexicon(o);
  Input in(o.input);
  const auto corpus = read_corpus(in.get());
  // Input is already chunked; the identity provenance is all extraction needs.
  std::vector<ChunkedSentence> chunked;
  chunked.reserve(corpus.size());
  for (const auto& s : corpus) {
    ChunkedSentence c;
    c.tokens = s.tokens;
    for (std::size_t i = 0; i < s.size(); ++i) c.provenance.push_back({i, i + 1});
    chunked.push_back(std::move(c));
  }
  const auto pass = kernels::extract_corpus(chunked, config, lexicon);
  Output out(o.output);
  write_tuples(out.get(), pass.tuples);
  out.finish();
  if (!o.report.empty()) {
    Output report(o.report);
    report.get() << pass.report.to_text();
    report.finish();
  }
  if (o.verbose) std::cerr << pass.report.to_text();
  return kOk;
}

int cmd_train(const Options& o) {
  if (o.corpus.empty() || o.tuples.empty() || o.model.empty()) {
    throw UsageError("train needs --corpus, --tuples and --model");
  }
  const TagConfig config = resolve_config(o);
  const MorphLexicon lexicon = resolve_lexicon(o);
  Input corpus_in(o.corpus);
  const auto corpus = read_corpus(corpus_in.get());
  std::vector<ChunkedSentence> chunked;
  chunked.reserve(corpus.size());
  for (const auto& s : corpus) chunked.push_back({s.tokens, {}});
  Input tuples_in(o.tuples);
  auto tuples = read_tuples(tuples_in.get());
  if (o.dedup) tuples = dedup_tuples(std::move(tuples));

  const StoreMeta meta = StoreMeta::from_config(config, o.dedup);
  CountStore store = kernels::count_corpus(chunked, config, lexicon, meta);
  store.accumulate_tuples(tuples);
  save(store, o.model);
  if (o.verbose) {
    std::cerr << "sentences\t" << corpus.size() << "\ntuples\t" << tuples.size()
              << "\nprepositions\t" << store.prep_vocab().size() << '\n';
  }
  return kOk;
}

std::unique_ptr<Classifier> make_classifier(const Options& o, const std::string& variant_name,
                                            const TagConfig& config,
                                            std::unique_ptr<CountStore>& store) {
  const Variant variant = resolve_variant(variant_name);
  if (variant == Variant::kBaseline) return std::make_unique<Classifier>(config);
  if (!store) store = std::make_unique<CountStore>(load_model_for(o, config));
  return std::make_unique<Classifier>(config, *store, variant);
}

int cmd_classify(const Options& o) {
  const TagConfig config = resolve_config(o);
  const MorphLexicon lexicon = resolve_lexicon(o);
  std::unique_ptr<CountStore> store;
  const auto classifier = make_classifier(o, o.variant, config, store);
  Input in(o.input);
  const auto items = normalized(parse_instances(in.get(), false), config, lexicon);
  const auto results = kernels::classify_all(items, *classifier);
  Output out(o.output);
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& it = items[i];
    const auto& r = results[i];
    char scores[64];
    std::snprintf(scores, sizeof scores, "%.10g\t%.10g", r.score_n, r.score_v);
    out.get() << it.v << '\t' << it.n << '\t' << it.p << '\t' << it.n2 << '\t' << to_char(r.label)
              << '\t' << to_string(r.rule) << '\t' << scores << '\n';
  }
  out.finish();
  return kOk;
}

int cmd_eval(const Options& o) {
  if (o.test.empty()) throw UsageError("eval needs --test");
  const TagConfig config = resolve_config(o);
  const MorphLexicon lexicon = resolve_lexicon(o);
  std::unique_ptr<CountStore> store;
  const auto classifier = make_classifier(o, o.variant, config, store);
  const auto items = normalized(load_test_set(o.test), config, lexicon);
  const EvalReport report = evaluate(items, *classifier);
  if (o.report == "-") {
    std::cout << format_report_tsv(report);
  } else {
    std::cout << format_report_table(report, config);
    if (!o.report.empty()) {
      Output out(o.report);
      out.get() << format_report_tsv(report);
      out.finish();
    }
  }
  return kOk;
}

int cmd_compare(const Options& o) {
  if (o.test.empty()) throw UsageError("compare needs --test");
  const TagConfig config = resolve_config(o);
  const MorphLexicon lexicon = resolve_lexicon(o);
  std::unique_ptr<CountStore> store;
  const auto a = make_classifier(o, o.variant_a, config, store);
  const auto b = make_classifier(o, o.variant_b, config, store);
  const auto items = normalized(load_test_set(o.test), config, lexicon);
  const auto gold = gold_labels(items);
  const auto cmp = changed_cases_test(labels_of(kernels::classify_all(items, *a)),
                                      labels_of(kernels::classify_all(items, *b)), gold);
  std::cout << format_comparison(cmp, o.variant_a, o.variant_b);
  return kOk;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config,
                  std::string("tag config file or profile name (english, spanish); names are also "
                              "looked up in $") +
                      kConfigDirEnv);
  cmd->add_option("--lexicon", o.lexicon, "morphology TSV: surface, class, lemma");
  cmd->add_option("--k", o.k, "override the extraction window")->check(CLI::PositiveNumber);
  cmd->add_flag("--verbose", o.verbose, "report statistics and warnings on stderr");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unsupervised prepositional phrase attachment"};
  app.name("ppattach");
  app.require_subcommand(0, 1);
  bool version = false;
  app.add_flag("--version", version, "print version and file format versions");

  Options o;
  auto* chunk = app.add_subcommand("chunk", "replace noun and quantifier phrases by their heads");
  add_common(chunk, o);
  chunk->add_option("-i,--input", o.input, "tagged corpus ('-' for stdin)");
  chunk->add_option("-o,--output", o.output, "chunked corpus ('-' for stdout)");

  auto* extract = app.add_subcommand("extract", "extract unambiguous head word tuples");
  add_common(extract, o);
  extract->add_option("-i,--input", o.input, "chunked corpus ('-' for stdin)");
  extract->add_option("-o,--output", o.output, "tuple file ('-' for stdout)");
  extract->add_option("--report", o.report, "write extraction statistics here");

  auto* train = app.add_subcommand("train", "count corpus words and tuples into a model file");
  add_common(train, o);
  train->add_option("--corpus", o.corpus, "chunked corpus ('-' for stdin)")->required();
  train->add_option("--tuples", o.tuples, "tuple file from extract")->required();
  train->add_option("--model", o.model, "model file to write")->required();
  train->add_flag("--dedup", o.dedup, "count unique tuples instead of occurrences");

  auto* classify = app.add_subcommand("classify", "label ambiguous (v n p n2) items");
  add_common(classify, o);
  classify->add_option("--model", o.model, "model file (not needed for baseline)");
  classify->add_option("-i,--input", o.input, "items, one 'v n p n2 [label]' per line");
  classify->add_option("-o,--output", o.output, "predictions ('-' for stdout)");
  classify->add_option("--variant", o.variant, "baseline, bigram or interp");

  auto* eval = app.add_subcommand("eval", "score a classifier on a labeled test set");
  add_common(eval, o);
  eval->add_option("--model", o.model, "model file (not needed for baseline)");
  eval->add_option("--test", o.test, "test set, one 'v n p n2 label' per line")->required();
  eval->add_option("--report", o.report, "also write the TSV report here ('-': TSV to stdout)");
  eval->add_option("--variant", o.variant, "baseline, bigram or interp");

  auto* compare = app.add_subcommand("compare", "sign test between two classifiers");
  add_common(compare, o);
  compare->add_option("--model", o.model, "model file (not needed for baseline)");
  compare->add_option("--test", o.test, "test set")->required();
  compare->add_option("--variant-a", o.variant_a, "first classifier");
  compare->add_option("--variant-b", o.variant_b, "second classifier");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  if (version) {
    std::cout << "ppattach " << PPATTACH_VERSION << " (model format " << kModelFormatVersion
              << ", tuple format 1, report format 1)\n";
    return kOk;
  }

  try {
    if (*chunk) return cmd_chunk(o);
    if (*extract) return cmd_extract(o);
    if (*train) return cmd_train(o);
    if (*classify) return cmd_classify(o);
    if (*eval) return cmd_eval(o);
    if (*compare) return cmd_compare(o);
  } catch (const Error& e) {
    std::cerr << "ppattach: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "ppattach: " << e.what() << '\n';
    return kIoFailure;
  }
  std::cerr << app.help();
  return kUsage;
}
