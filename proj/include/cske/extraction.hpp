#pragma once

#include <string>
#include <vector>

#include "cske/corpus.hpp"
#include "cske/embedding.hpp"
#include "cske/seeds.hpp"
#include "cske/text.hpp"

namespace cske {

struct GuidedCandidate {
  std::string term;
  double seed_similarity = 0.0;
  std::string source_doc;
};

struct GuidedOptions {
  std::size_t top_n = 10;
  std::size_t min_len = 2;
  // Weight of the seed centroid when ranking candidates. 1.0 ranks by
  // seed similarity alone (document content has no influence); lower
  // values blend in the document's own embedding. Only 1.0 is part of
  // the tested contract.
  double seed_weight = 1.0;
};

// Ranks a document's candidate terms (seeds excluded) by cosine to the
// seed-keyword centroid. Returns at most top_n candidates, descending
// similarity, ties broken lexicographically. Throws on an empty seed set.
std::vector<GuidedCandidate> guided_extract(const Document& doc, const SeedSet& seeds,
                                            const Embedder& embedder,
                                            const Stopwords& stopwords,
                                            const GuidedOptions& opts = {});

// Union of guided_extract terms over the batch's documents,
// deduplicated; sorted ascending. Documents are processed in parallel.
std::vector<std::string> extract_batch(const Batch& batch, const SeedSet& seeds,
                                       const Embedder& embedder,
                                       const Stopwords& stopwords,
                                       const GuidedOptions& opts = {});

}  // namespace cske
