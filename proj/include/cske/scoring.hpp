#pragma once

#include <string>
#include <vector>

#include "cske/embedding.hpp"
#include "cske/seeds.hpp"

namespace cske {

struct ScoredCandidate {
  std::string term;
  double avg_score = 0.0;
  double max_score = 0.0;
  double final_score = 0.0;
  std::size_t iteration = 0;
};

// Mean cosine of the candidate against every seed vector.
double average_score(const EmbeddingVector& candidate,
                     const std::vector<EmbeddingVector>& seed_vectors);

// Maximum cosine of the candidate against any seed vector.
double max_score(const EmbeddingVector& candidate,
                 const std::vector<EmbeddingVector>& seed_vectors);

inline double final_score(double avg, double max) { return (avg + max) / 2.0; }

// Scores every term against the full current seed set (original and
// augmented) and sorts by final score descending, ties lexicographic
// ascending. Throws on an empty seed set.
std::vector<ScoredCandidate> rank_candidates(const std::vector<std::string>& terms,
                                             const SeedSet& seeds,
                                             const Embedder& embedder);

// Picks at most `n` new seeds from `ranked` (best first) whose final
// score clears the nearest-rank percentile of the batch's scores,
// skipping terms already in `existing`. percentile must be in (0,100].
std::vector<std::string> select_new_seeds(const std::vector<ScoredCandidate>& ranked,
                                          double percentile, std::size_t n,
                                          const SeedSet& existing);

// Nearest-rank percentile: value at position ceil(p/100 * N) of the
// ascending-sorted scores.
double nearest_rank_percentile(std::vector<double> scores, double percentile);

}  // namespace cske
