#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cske/corpus.hpp"
#include "cske/embedding.hpp"
#include "cske/pipeline.hpp"
#include "cske/seeds.hpp"

namespace cske {

enum class MatchMethod { exact, lemma, fuzzy, cosine };

inline constexpr std::array<MatchMethod, 4> kAllMatchMethods = {
    MatchMethod::exact, MatchMethod::lemma, MatchMethod::fuzzy, MatchMethod::cosine};

std::string_view method_name(MatchMethod method);

// Lookup-table lemmatizer with identity fallback.
class Lemmatizer {
 public:
  Lemmatizer() = default;
  // UTF-8 TSV, "surface<TAB>lemma" per line.
  static Lemmatizer from_tsv(const std::string& path);

  std::string lemma(const std::string& surface) const;
  std::size_t table_size() const { return table_.size(); }

 private:
  std::unordered_map<std::string, std::string> table_;
};

// Every distinct corpus token eligible as a candidate (no stopword
// filtering: the vocabulary is the raw token set).
std::set<std::string> corpus_vocabulary(const Corpus& corpus, std::size_t min_len = 2);

struct FilteredGold {
  // Gold terms whose normalized form appears in the corpus vocabulary
  // (exact / fuzzy / cosine evaluation).
  std::vector<std::string> surface;
  // Gold terms whose lemma appears in the lemmatized vocabulary.
  std::vector<std::string> lemma;
};

FilteredGold filter_gold(const GoldSet& gold, const std::set<std::string>& corpus_vocab,
                         const Lemmatizer& lemmatizer);

// 100 * |top-k extracted ∩ gold| / k; missing slots count as incorrect.
double precision_at_k_exact(const std::vector<std::string>& extracted,
                            const std::vector<std::string>& gold, std::size_t k);

// As exact after mapping both sides through the lemmatizer; duplicate
// lemmas in the top-k each count against their slot.
double precision_at_k_lemma(const std::vector<std::string>& extracted,
                            const std::vector<std::string>& gold, std::size_t k,
                            const Lemmatizer& lemmatizer);

// Indel similarity: 100 * 2*LCS(a,b) / (|a|+|b|) over codepoints; 100
// when both strings are empty.
double fuzzy_ratio(std::string_view a, std::string_view b);

// Mean over the top-k slots of the best fuzzy_ratio against any gold
// term; missing slots contribute 0. Throws on an empty gold set.
double fuzzy_match_score(const std::vector<std::string>& extracted,
                         const std::vector<std::string>& gold, std::size_t k);

// Mean over the top-k slots of the best cosine against any gold term,
// clamped at 0 from below and scaled to [0,100]; missing slots
// contribute 0. Throws on an empty gold set.
double cosine_match_score(const std::vector<std::string>& extracted,
                          const std::vector<std::string>& gold, std::size_t k,
                          const Embedder& eval_embedder);

struct EvalOptions {
  std::vector<std::size_t> ks = {10, 25, 50, 100};
  // Skip the seed head of each keyword list before scoring.
  bool exclude_seeds = false;
};

struct EvaluationReport {
  std::vector<std::size_t> ks;
  // cells[class][method][k], 0-100.
  std::map<std::string, std::map<MatchMethod, std::map<std::size_t, double>>> cells;
  // Mean over classes for each (method, k).
  std::map<MatchMethod, std::map<std::size_t, double>> average_over_classes;
  // Mean over k of the per-k class averages, per method.
  std::map<MatchMethod, double> average_over_k;
  // Mean over the four methods, per k, and overall.
  std::map<std::size_t, double> average_match;
  double average_match_overall = 0.0;

  // Aligned plain-text table (methods x k, plus averages).
  std::string text_table() const;
};

// Fills the full class x method x k grid. Gold sets are filtered against
// the corpus vocabulary first (per-method, see filter_gold). Throws on a
// class mismatch between results and gold.
EvaluationReport evaluate_all(const std::map<std::string, ClassResult>& results,
                              const std::map<std::string, GoldSet>& gold,
                              const std::set<std::string>& corpus_vocab,
                              const Lemmatizer& lemmatizer, const Embedder& eval_embedder,
                              const EvalOptions& opts = {});

}  // namespace cske
