#include "cske/extraction.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "cske/kernels.hpp"

namespace cske {

std::vector<GuidedCandidate> guided_extract(const Document& doc, const SeedSet& seeds,
                                            const Embedder& embedder,
                                            const Stopwords& stopwords,
                                            const GuidedOptions& opts) {
  if (seeds.empty()) throw std::invalid_argument("guided_extract: empty seed set");
  if (opts.top_n == 0) throw std::invalid_argument("guided_extract: top_n must be >= 1");

  std::vector<std::string> candidates = extract_candidates(doc.text, stopwords, opts.min_len);
  // Seeds never compete for new-seed slots: drop them at extraction time.
  std::erase_if(candidates, [&](const std::string& t) { return seeds.contains(t); });
  if (candidates.empty()) return {};

  const std::vector<EmbeddingVector> seed_vecs =
      kernels::serial::embed_terms(embedder, seeds.all());
  EmbeddingVector reference = centroid(seed_vecs);
  if (opts.seed_weight < 1.0) {
    const EmbeddingVector doc_vec = embedder.embed(doc.text);
    for (std::size_t i = 0; i < reference.values.size(); ++i) {
      reference.values[i] = opts.seed_weight * reference.values[i] +
                            (1.0 - opts.seed_weight) * doc_vec.values[i];
    }
    reference.featureless = reference.norm() == 0.0;
  }

  const std::vector<EmbeddingVector> vecs = kernels::serial::embed_terms(embedder, candidates);
  const std::vector<double> sims = kernels::serial::cosine_to_reference(vecs, reference);

  std::vector<GuidedCandidate> out;
  out.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    out.push_back({candidates[i], sims[i], doc.id});
  }
  std::sort(out.begin(), out.end(), [](const GuidedCandidate& a, const GuidedCandidate& b) {
    if (a.seed_similarity != b.seed_similarity) return a.seed_similarity > b.seed_similarity;
    return a.term < b.term;
  });
  if (out.size() > opts.top_n) out.resize(opts.top_n);
  return out;
}

std::vector<std::string> extract_batch(const Batch& batch, const SeedSet& seeds,
                                       const Embedder& embedder, const Stopwords& stopwords,
                                       const GuidedOptions& opts) {
  std::vector<std::vector<GuidedCandidate>> per_doc(batch.documents.size());

  // Documents fan out; each slot is written independently, so the merge
  // below sees the same data for any thread count.
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(batch.documents.size()); ++i) {
    per_doc[i] = guided_extract(batch.documents[i], seeds, embedder, stopwords, opts);
  }

  std::vector<std::string> terms;
  for (const auto& doc_candidates : per_doc) {
    for (const GuidedCandidate& c : doc_candidates) terms.push_back(c.term);
  }
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  return terms;
}

}  // namespace cske
