#pragma once

#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace cske {

struct EmbeddingVector {
  std::vector<double> values;
  // Set when the term produced no features; cosine against such a
  // vector is defined as 0.
  bool featureless = false;

  std::size_t dim() const { return values.size(); }
  double norm() const;
};

enum class EmbedderBackend { hash_ngram, transformer_artifact };

struct EmbedderSpec {
  EmbedderBackend backend = EmbedderBackend::hash_ngram;
  std::size_t dim = 256;
  std::size_t ngram = 3;          // hash-ngram only
  std::string model_path;         // transformer-artifact only

  // Identifies the backend and every setting that affects its output.
  std::string fingerprint() const;
};

EmbedderBackend parse_backend(const std::string& name);
std::string backend_name(EmbedderBackend backend);

// Term embedder. Thread-safe for concurrent embed() calls after
// construction; results are cached per term.
class Embedder {
 public:
  virtual ~Embedder() = default;
  virtual std::size_t dim() const = 0;
  virtual std::string fingerprint() const = 0;

  EmbeddingVector embed(const std::string& term) const;

 protected:
  virtual EmbeddingVector compute(const std::string& term) const = 0;

 private:
  mutable std::shared_mutex cache_mutex_;
  mutable std::unordered_map<std::string, EmbeddingVector> cache_;
};

// Deterministic reference backend: the term is padded as "#term#", its
// character n-grams are hashed (64-bit FNV-1a) into `dim` buckets with
// the sign taken from the top hash bit, counts accumulated and the
// result L2-normalized.
class HashNgramEmbedder : public Embedder {
 public:
  HashNgramEmbedder(std::size_t dim, std::size_t ngram = 3);

  std::size_t dim() const override { return dim_; }
  std::string fingerprint() const override;

 protected:
  EmbeddingVector compute(const std::string& term) const override;

 private:
  std::size_t dim_;
  std::size_t ngram_;
};

// Adapter for a serialized sentence-encoder artifact: a directory with
// meta.json {"dim": D} and vectors.tsv ("token<TAB>v1 v2 ... vD"). A
// term is looked up whole; unknown terms fall back to greedy
// longest-match segmentation over the token vocabulary. Matched token
// vectors are mean-pooled and L2-normalized.
class VectorTableEmbedder : public Embedder {
 public:
  explicit VectorTableEmbedder(const std::string& artifact_dir);

  std::size_t dim() const override { return dim_; }
  std::string fingerprint() const override;

 protected:
  EmbeddingVector compute(const std::string& term) const override;

 private:
  std::size_t dim_ = 0;
  std::size_t max_token_cps_ = 0;
  std::string artifact_dir_;
  std::unordered_map<std::string, std::vector<double>> table_;
};

std::unique_ptr<Embedder> make_embedder(const EmbedderSpec& spec);

// Standard cosine similarity. Throws on dimension mismatch; returns 0
// if either vector has zero norm or is flagged featureless.
double cosine(const EmbeddingVector& a, const EmbeddingVector& b);

// Componentwise arithmetic mean. Not renormalized: cosine against the
// centroid is scale-invariant. Throws on empty input.
EmbeddingVector centroid(const std::vector<EmbeddingVector>& vectors);

// FNV-1a, 64-bit.
std::uint64_t fnv1a64(const void* data, std::size_t len);
std::uint64_t fnv1a64(std::string_view s);

}  // namespace cske
