#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ppattach/corpus_io.hpp"
#include "ppattach/models.hpp"

namespace ppattach {

/// A head word and the preposition distribution planted for it.
struct PlantedHead {
  std::string lemma;
  std::vector<std::pair<std::string, double>> prep_distribution;

  /// Highest-probability preposition; the first one wins ties.
  const std::string& dominant_prep() const;
};

struct SyntheticSpec {
  std::vector<PlantedHead> verbs;
  std::vector<PlantedHead> nouns;
  std::vector<std::string> objects;  // n2 vocabulary
  std::size_t sentences = 0;
  std::size_t test_items = 0;
  // Sentence mix; the remainder are prepositionless transitive clauses.
  double verb_pp_share = 0.35;
  double noun_pp_share = 0.35;
  std::uint64_t seed = 1;
};

struct SyntheticCorpus {
  std::vector<Sentence> sentences;       // English-tagged, lemmas as surfaces
  std::vector<AttachmentInstance> test;  // gold = planted dominant preference
};

/// Three sentence shapes, chosen by the shares above:
///   "they/PRP <v>/VBD <p>/IN the/DT <n2>/NN ./."     one V tuple
///   "the/DT <n>/NN <p>/IN the/DT <n2>/NN ./."        one N tuple
///   "they/PRP <v>/VBD the/DT <n>/NN ./."             counts only
/// Test items pair a verb and a noun whose dominant prepositions differ and
/// ask about one of the two; the gold site is the head that owns it.
/// Throws UsageError for distributions that are empty, negative, or do not
/// sum to 1 within 1e-9. Output depends only on the spec (seed included).
SyntheticCorpus generate_synthetic_corpus(const SyntheticSpec& spec);

/// 20 verbs and 20 nouns over 8 prepositions, each head putting `dominance`
/// of its mass on one preposition and spreading the rest evenly.
SyntheticSpec default_synthetic_spec(std::size_t sentences, std::size_t test_items,
                                     std::uint64_t seed, double dominance = 0.7);

}  // namespace ppattach
