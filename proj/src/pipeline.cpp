#include "cske/pipeline.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "cske/kernels.hpp"
#include "cske/rng.hpp"

namespace cske {

void PipelineConfig::validate() const {
  if (n_iterations == 0) throw std::invalid_argument("n_iterations must be >= 1");
  if (topk == 0) throw std::invalid_argument("topk must be >= 1");
  if (top_n_per_doc == 0) throw std::invalid_argument("top_n_per_doc must be >= 1");
  if (min_token_len == 0) throw std::invalid_argument("min_token_len must be >= 1");
  if (!(percentile_newseed > 0.0) || percentile_newseed > 100.0) {
    throw std::invalid_argument("percentile_newseed must be in (0, 100]");
  }
  if (seed_weight < 0.0 || seed_weight > 1.0) {
    throw std::invalid_argument("seed_weight must be in [0, 1]");
  }
  if (embedder.dim < 2) throw std::invalid_argument("embedder dim must be >= 2");
}

IterationOutcome run_iteration(const Batch& batch, const SeedSet& seeds,
                               const PipelineConfig& config, const Embedder& embedder,
                               const Stopwords& stopwords, bool augment) {
  if (seeds.empty()) throw std::invalid_argument("run_iteration: empty seed set");

  GuidedOptions opts;
  opts.top_n = config.top_n_per_doc;
  opts.min_len = config.min_token_len;
  opts.seed_weight = config.seed_weight;

  const std::vector<std::string> terms =
      extract_batch(batch, seeds, embedder, stopwords, opts);

  IterationOutcome outcome;
  outcome.ranked = rank_candidates(terms, seeds, embedder);
  for (ScoredCandidate& c : outcome.ranked) c.iteration = batch.index;

  outcome.seeds = seeds;
  if (augment && config.number_newseed > 0) {
    for (std::string& term : select_new_seeds(outcome.ranked, config.percentile_newseed,
                                              config.number_newseed, seeds)) {
      outcome.seeds.augmented.push_back(std::move(term));
    }
  }
  return outcome;
}

std::vector<ScoredCandidate> merge_results(
    const std::vector<std::vector<ScoredCandidate>>& per_iteration) {
  std::unordered_map<std::string, ScoredCandidate> best;
  for (const auto& iteration : per_iteration) {
    for (const ScoredCandidate& c : iteration) {
      auto [it, inserted] = best.emplace(c.term, c);
      // Keep the highest final score; the earliest iteration wins ties.
      if (!inserted && c.final_score > it->second.final_score) it->second = c;
    }
  }
  std::vector<ScoredCandidate> merged;
  merged.reserve(best.size());
  for (auto& [term, candidate] : best) merged.push_back(std::move(candidate));
  std::sort(merged.begin(), merged.end(),
            [](const ScoredCandidate& a, const ScoredCandidate& b) {
              if (a.final_score != b.final_score) return a.final_score > b.final_score;
              return a.term < b.term;
            });
  return merged;
}

std::vector<std::string> finalize(const std::vector<ScoredCandidate>& merged,
                                  const SeedSet& seeds, std::size_t topk,
                                  bool head_original_only) {
  const std::vector<std::string> head =
      head_original_only ? seeds.original : seeds.all();
  if (topk < head.size()) {
    throw std::runtime_error("topk (" + std::to_string(topk) +
                             ") cannot hold the seed head (" + std::to_string(head.size()) +
                             " seeds)");
  }
  std::unordered_set<std::string> taken(head.begin(), head.end());
  std::vector<std::string> out = head;
  for (const ScoredCandidate& c : merged) {
    if (out.size() == topk) break;
    if (taken.insert(c.term).second) out.push_back(c.term);
  }
  return out;
}

std::map<std::string, ClassResult> run_pipeline(const Corpus& corpus,
                                                const std::map<std::string, SeedSet>& class_seeds,
                                                const PipelineConfig& config,
                                                const Embedder& embedder,
                                                const Stopwords& stopwords) {
  config.validate();
  if (corpus.empty()) throw std::invalid_argument("run_pipeline: empty corpus");
  for (const auto& [class_id, seeds] : class_seeds) {
    if (seeds.empty()) {
      throw std::runtime_error("class '" + class_id + "': empty seed set");
    }
  }
  kernels::set_jobs(config.jobs);

  // Optional shuffle happens once, before batching, with a recorded seed.
  Corpus shuffled;
  const Corpus* active = &corpus;
  if (config.shuffle_seed) {
    shuffled = corpus;
    DeterministicRng rng(*config.shuffle_seed);
    rng.shuffle(shuffled.documents);
    active = &shuffled;
  }
  const std::vector<Batch> batches = make_batches(*active, config.n_iterations);

  std::map<std::string, ClassResult> results;
  for (const auto& [class_id, initial_seeds] : class_seeds) {
    try {
      SeedSet seeds = initial_seeds;
      std::vector<std::vector<ScoredCandidate>> per_iteration;
      std::vector<std::vector<std::string>> history;
      per_iteration.reserve(batches.size());

      for (std::size_t i = 0; i < batches.size(); ++i) {
        const bool last = (i + 1 == batches.size());
        const std::size_t before = seeds.augmented.size();
        IterationOutcome outcome =
            run_iteration(batches[i], seeds, config, embedder, stopwords, !last);
        history.emplace_back(outcome.seeds.augmented.begin() + before,
                             outcome.seeds.augmented.end());
        per_iteration.push_back(std::move(outcome.ranked));
        seeds = std::move(outcome.seeds);
      }

      const std::vector<ScoredCandidate> merged = merge_results(per_iteration);

      ClassResult result;
      result.class_id = class_id;
      result.final_keywords =
          finalize(merged, seeds, config.topk, config.seed_head_original_only);
      result.seed_history = std::move(history);
      result.final_seeds = config.seed_head_original_only ? seeds.original : seeds.all();

      std::unordered_set<std::string> kept(result.final_keywords.begin(),
                                           result.final_keywords.end());
      for (const ScoredCandidate& c : merged) {
        if (kept.count(c.term)) result.scores.emplace(c.term, c.final_score);
      }
      results.emplace(class_id, std::move(result));
    } catch (const std::exception& e) {
      throw std::runtime_error("class '" + class_id + "': " + e.what());
    }
  }
  return results;
}

std::map<std::string, ClassResult> run_pipeline(const Corpus& corpus,
                                                const std::map<std::string, SeedSet>& class_seeds,
                                                const PipelineConfig& config) {
  config.validate();
  const std::unique_ptr<Embedder> embedder = make_embedder(config.embedder);
  const Stopwords stopwords = config.stopword_path.empty()
                                  ? default_german_stopwords()
                                  : load_stopwords(config.stopword_path);
  return run_pipeline(corpus, class_seeds, config, *embedder, stopwords);
}

}  // namespace cske
