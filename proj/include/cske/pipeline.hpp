#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cske/corpus.hpp"
#include "cske/embedding.hpp"
#include "cske/extraction.hpp"
#include "cske/scoring.hpp"
#include "cske/seeds.hpp"

namespace cske {

struct PipelineConfig {
  std::size_t n_iterations = 5;
  double percentile_newseed = 99.0;
  std::size_t number_newseed = 3;   // 0 disables augmentation
  std::size_t topk = 100;
  std::size_t top_n_per_doc = 10;
  std::size_t min_token_len = 2;
  EmbedderSpec embedder;
  std::string stopword_path;        // empty -> built-in German list
  std::optional<std::uint64_t> shuffle_seed;
  bool seed_head_original_only = false;
  double seed_weight = 1.0;
  bool transliterate = true;
  int jobs = 0;                     // 0 -> OpenMP default

  // Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

struct ClassResult {
  std::string class_id;
  std::vector<std::string> final_keywords;
  // final_score per returned non-original-seed keyword.
  std::map<std::string, double> scores;
  // Terms appended to the seed set after each iteration (last entry is
  // always empty: the final iteration does not augment).
  std::vector<std::vector<std::string>> seed_history;
  // The seed sequence heading final_keywords.
  std::vector<std::string> final_seeds;
};

struct IterationOutcome {
  std::vector<ScoredCandidate> ranked;
  SeedSet seeds;  // input seeds plus any newly selected ones
};

// One batch pass: extract, rank against the current seeds and select new
// seeds. `augment` is false on the final iteration.
IterationOutcome run_iteration(const Batch& batch, const SeedSet& seeds,
                               const PipelineConfig& config, const Embedder& embedder,
                               const Stopwords& stopwords, bool augment);

// Union by term across iterations; a term scored in several iterations
// keeps its highest final score (earliest iteration on ties). Sorted by
// final score descending, ties lexicographic.
std::vector<ScoredCandidate> merge_results(
    const std::vector<std::vector<ScoredCandidate>>& per_iteration);

// Seed sequence first, then merged candidates not already in it,
// truncated to topk. Throws if topk cannot hold the seed head.
std::vector<std::string> finalize(const std::vector<ScoredCandidate>& merged,
                                  const SeedSet& seeds, std::size_t topk,
                                  bool head_original_only = false);

// Full per-class run: batch the corpus, iterate sequentially (augmenting
// after every batch except the last), merge and finalize. Deterministic
// for a fixed config.
std::map<std::string, ClassResult> run_pipeline(const Corpus& corpus,
                                                const std::map<std::string, SeedSet>& class_seeds,
                                                const PipelineConfig& config);

// As above with a caller-supplied embedder and stopword set (the
// overload above builds both from the config).
std::map<std::string, ClassResult> run_pipeline(const Corpus& corpus,
                                                const std::map<std::string, SeedSet>& class_seeds,
                                                const PipelineConfig& config,
                                                const Embedder& embedder,
                                                const Stopwords& stopwords);

}  // namespace cske
