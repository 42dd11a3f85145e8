#include "cske/kernels.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cske::kernels {

namespace {

// Per-item bodies shared by the OpenMP and serial paths: the two only
// differ in loop scheduling, never in arithmetic or iteration order
// within an item, so outputs are bitwise identical.

ScoreTriple score_one(const EmbeddingVector& candidate,
                      const std::vector<EmbeddingVector>& seeds) {
  ScoreTriple t;
  double sum = 0.0;
  double best = -2.0;
  for (const EmbeddingVector& s : seeds) {
    const double c = cosine(candidate, s);
    sum += c;
    if (c > best) best = c;
  }
  t.avg = sum / static_cast<double>(seeds.size());
  t.max = best;
  t.final = (t.avg + t.max) / 2.0;
  return t;
}

double max_cosine_one(const EmbeddingVector& item,
                      const std::vector<EmbeddingVector>& targets) {
  double best = 0.0;
  bool first = true;
  for (const EmbeddingVector& t : targets) {
    const double c = cosine(item, t);
    if (first || c > best) {
      best = c;
      first = false;
    }
  }
  return best;
}

}  // namespace

std::vector<EmbeddingVector> embed_terms(const Embedder& embedder,
                                         const std::vector<std::string>& terms) {
  std::vector<EmbeddingVector> out(terms.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(terms.size()); ++i) {
    out[i] = embedder.embed(terms[i]);
  }
  return out;
}

std::vector<ScoreTriple> score_against_seeds(const std::vector<EmbeddingVector>& candidates,
                                             const std::vector<EmbeddingVector>& seeds) {
  if (seeds.empty()) throw std::invalid_argument("score_against_seeds: empty seed list");
  std::vector<ScoreTriple> out(candidates.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(candidates.size()); ++i) {
    out[i] = score_one(candidates[i], seeds);
  }
  return out;
}

std::vector<double> cosine_to_reference(const std::vector<EmbeddingVector>& vectors,
                                        const EmbeddingVector& reference) {
  std::vector<double> out(vectors.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(vectors.size()); ++i) {
    out[i] = cosine(vectors[i], reference);
  }
  return out;
}

std::vector<double> max_cosine_to_set(const std::vector<EmbeddingVector>& items,
                                      const std::vector<EmbeddingVector>& targets) {
  std::vector<double> out(items.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(items.size()); ++i) {
    out[i] = max_cosine_one(items[i], targets);
  }
  return out;
}

namespace serial {

std::vector<EmbeddingVector> embed_terms(const Embedder& embedder,
                                         const std::vector<std::string>& terms) {
  std::vector<EmbeddingVector> out(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) out[i] = embedder.embed(terms[i]);
  return out;
}

std::vector<ScoreTriple> score_against_seeds(const std::vector<EmbeddingVector>& candidates,
                                             const std::vector<EmbeddingVector>& seeds) {
  if (seeds.empty()) throw std::invalid_argument("score_against_seeds: empty seed list");
  std::vector<ScoreTriple> out(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) out[i] = score_one(candidates[i], seeds);
  return out;
}

std::vector<double> cosine_to_reference(const std::vector<EmbeddingVector>& vectors,
                                        const EmbeddingVector& reference) {
  std::vector<double> out(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) out[i] = cosine(vectors[i], reference);
  return out;
}

std::vector<double> max_cosine_to_set(const std::vector<EmbeddingVector>& items,
                                      const std::vector<EmbeddingVector>& targets) {
  std::vector<double> out(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) out[i] = max_cosine_one(items[i], targets);
  return out;
}

}  // namespace serial

void set_jobs(int jobs) {
#ifdef _OPENMP
  if (jobs > 0) {
    omp_set_num_threads(jobs);
  } else {
    omp_set_num_threads(omp_get_num_procs());
  }
#else
  (void)jobs;
#endif
}

}  // namespace cske::kernels
