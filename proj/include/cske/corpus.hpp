#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cske/text.hpp"

namespace cske {

struct Document {
  std::string id;
  std::string text;  // normalized
};

struct Corpus {
  std::vector<Document> documents;

  bool empty() const { return documents.empty(); }
  std::size_t size() const { return documents.size(); }
};

// Contiguous, order-preserving slice of a corpus.
struct Batch {
  std::size_t index = 0;
  std::span<const Document> documents;
};

// JSON-lines file, one {"id": ..., "text": ...} object per line.
// Text is normalized on load. Throws std::runtime_error naming the
// offending line for malformed records and duplicate ids.
Corpus load_corpus(const std::string& path, const NormalizeOptions& opts = {});

// Splits into min(n_iterations, corpus size) contiguous batches whose
// sizes differ by at most one, larger batches first.
std::vector<Batch> make_batches(const Corpus& corpus, std::size_t n_iterations);

}  // namespace cske
