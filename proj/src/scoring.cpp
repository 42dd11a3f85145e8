#include "cske/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cske/kernels.hpp"

namespace cske {

double average_score(const EmbeddingVector& candidate,
                     const std::vector<EmbeddingVector>& seed_vectors) {
  if (seed_vectors.empty()) throw std::invalid_argument("average_score: empty seed list");
  double sum = 0.0;
  for (const EmbeddingVector& s : seed_vectors) sum += cosine(candidate, s);
  return sum / static_cast<double>(seed_vectors.size());
}

double max_score(const EmbeddingVector& candidate,
                 const std::vector<EmbeddingVector>& seed_vectors) {
  if (seed_vectors.empty()) throw std::invalid_argument("max_score: empty seed list");
  double best = cosine(candidate, seed_vectors.front());
  for (std::size_t i = 1; i < seed_vectors.size(); ++i) {
    best = std::max(best, cosine(candidate, seed_vectors[i]));
  }
  return best;
}

std::vector<ScoredCandidate> rank_candidates(const std::vector<std::string>& terms,
                                             const SeedSet& seeds, const Embedder& embedder) {
  if (seeds.empty()) throw std::invalid_argument("rank_candidates: empty seed set");

  const std::vector<EmbeddingVector> seed_vecs =
      kernels::embed_terms(embedder, seeds.all());
  const std::vector<EmbeddingVector> term_vecs = kernels::embed_terms(embedder, terms);
  const std::vector<kernels::ScoreTriple> triples =
      kernels::score_against_seeds(term_vecs, seed_vecs);

  std::vector<ScoredCandidate> out;
  out.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    out.push_back({terms[i], triples[i].avg, triples[i].max, triples[i].final, 0});
  }
  std::sort(out.begin(), out.end(), [](const ScoredCandidate& a, const ScoredCandidate& b) {
    if (a.final_score != b.final_score) return a.final_score > b.final_score;
    return a.term < b.term;
  });
  return out;
}

double nearest_rank_percentile(std::vector<double> scores, double percentile) {
  if (scores.empty()) throw std::invalid_argument("nearest_rank_percentile: empty scores");
  if (!(percentile > 0.0) || percentile > 100.0) {
    throw std::invalid_argument("percentile must be in (0, 100]");
  }
  std::sort(scores.begin(), scores.end());
  const double n = static_cast<double>(scores.size());
  std::size_t rank = static_cast<std::size_t>(std::ceil(percentile * n / 100.0));
  rank = std::clamp<std::size_t>(rank, 1, scores.size());
  return scores[rank - 1];
}

std::vector<std::string> select_new_seeds(const std::vector<ScoredCandidate>& ranked,
                                          double percentile, std::size_t n,
                                          const SeedSet& existing) {
  if (!(percentile > 0.0) || percentile > 100.0) {
    throw std::invalid_argument("percentile must be in (0, 100]");
  }
  if (ranked.empty() || n == 0) return {};

  std::vector<double> scores;
  scores.reserve(ranked.size());
  for (const ScoredCandidate& c : ranked) scores.push_back(c.final_score);
  const double threshold = nearest_rank_percentile(std::move(scores), percentile);

  std::vector<std::string> out;
  for (const ScoredCandidate& c : ranked) {
    if (out.size() == n) break;
    // ranked is sorted descending: everything past the threshold fails.
    if (c.final_score < threshold) break;
    if (existing.contains(c.term)) continue;
    out.push_back(c.term);
  }
  return out;
}

}  // namespace cske
