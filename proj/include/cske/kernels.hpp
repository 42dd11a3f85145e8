#pragma once

#include <string>
#include <vector>

#include "cske/embedding.hpp"

namespace cske::kernels {

struct ScoreTriple {
  double avg = 0.0;
  double max = 0.0;
  double final = 0.0;
};

// Data-parallel kernels (OpenMP across items). Every kernel writes one
// independent output slot per item, so results are identical for any
// thread count; the serial twins below are the reference the tests and
// the benchmark compare against.

std::vector<EmbeddingVector> embed_terms(const Embedder& embedder,
                                         const std::vector<std::string>& terms);

// Per candidate: mean / max cosine over the seed vectors and their mean.
std::vector<ScoreTriple> score_against_seeds(const std::vector<EmbeddingVector>& candidates,
                                             const std::vector<EmbeddingVector>& seeds);

std::vector<double> cosine_to_reference(const std::vector<EmbeddingVector>& vectors,
                                        const EmbeddingVector& reference);

// Per item: max cosine against any vector of `targets` (0 for empty targets).
std::vector<double> max_cosine_to_set(const std::vector<EmbeddingVector>& items,
                                      const std::vector<EmbeddingVector>& targets);

namespace serial {

std::vector<EmbeddingVector> embed_terms(const Embedder& embedder,
                                         const std::vector<std::string>& terms);
std::vector<ScoreTriple> score_against_seeds(const std::vector<EmbeddingVector>& candidates,
                                             const std::vector<EmbeddingVector>& seeds);
std::vector<double> cosine_to_reference(const std::vector<EmbeddingVector>& vectors,
                                        const EmbeddingVector& reference);
std::vector<double> max_cosine_to_set(const std::vector<EmbeddingVector>& items,
                                      const std::vector<EmbeddingVector>& targets);

}  // namespace serial

// Worker cap for all parallel loops; 0 restores the OpenMP default.
void set_jobs(int jobs);

}  // namespace cske::kernels
