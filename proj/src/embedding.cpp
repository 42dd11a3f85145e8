#include "cske/embedding.hpp"

#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cske/text.hpp"

namespace cske {

std::uint64_t fnv1a64(const void* data, std::size_t len) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  std::uint64_t h = 14695981039346656037ULL;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= bytes[i];
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t fnv1a64(std::string_view s) { return fnv1a64(s.data(), s.size()); }

double EmbeddingVector::norm() const {
  double sum = 0.0;
  for (double v : values) sum += v * v;
  return std::sqrt(sum);
}

std::string backend_name(EmbedderBackend backend) {
  switch (backend) {
    case EmbedderBackend::hash_ngram: return "hash-ngram";
    case EmbedderBackend::transformer_artifact: return "transformer-artifact";
  }
  throw std::logic_error("unknown embedder backend");
}

EmbedderBackend parse_backend(const std::string& name) {
  if (name == "hash-ngram") return EmbedderBackend::hash_ngram;
  if (name == "transformer-artifact") return EmbedderBackend::transformer_artifact;
  throw std::invalid_argument("unknown embedder backend '" + name +
                              "' (expected hash-ngram or transformer-artifact)");
}

std::string EmbedderSpec::fingerprint() const {
  std::ostringstream out;
  out << backend_name(backend);
  if (backend == EmbedderBackend::hash_ngram) {
    out << "/dim=" << dim << "/ngram=" << ngram;
  } else {
    out << "/path=" << model_path;
  }
  return out.str();
}

EmbeddingVector Embedder::embed(const std::string& term) const {
  {
    std::shared_lock lock(cache_mutex_);
    if (auto it = cache_.find(term); it != cache_.end()) return it->second;
  }
  EmbeddingVector vec = compute(term);
  {
    std::unique_lock lock(cache_mutex_);
    cache_.emplace(term, vec);
  }
  return vec;
}

HashNgramEmbedder::HashNgramEmbedder(std::size_t dim, std::size_t ngram)
    : dim_(dim), ngram_(ngram) {
  if (dim < 2) throw std::invalid_argument("embedder dim must be >= 2");
  if (ngram < 1) throw std::invalid_argument("n-gram size must be >= 1");
}

std::string HashNgramEmbedder::fingerprint() const {
  EmbedderSpec spec;
  spec.backend = EmbedderBackend::hash_ngram;
  spec.dim = dim_;
  spec.ngram = ngram_;
  return spec.fingerprint();
}

EmbeddingVector HashNgramEmbedder::compute(const std::string& term) const {
  if (term.empty()) throw std::invalid_argument("embed_term: empty term");

  const std::vector<char32_t> cps = utf8::decode("#" + term + "#");
  EmbeddingVector vec;
  vec.values.assign(dim_, 0.0);

  if (cps.size() >= ngram_) {
    for (std::size_t i = 0; i + ngram_ <= cps.size(); ++i) {
      std::string gram;
      for (std::size_t j = 0; j < ngram_; ++j) utf8::append(gram, cps[i + j]);
      const std::uint64_t h = fnv1a64(gram);
      const double sign = (h >> 63) ? -1.0 : 1.0;
      vec.values[h % dim_] += sign;
    }
  }

  const double norm = vec.norm();
  if (norm == 0.0) {
    vec.featureless = true;
    return vec;
  }
  for (double& v : vec.values) v /= norm;
  return vec;
}

VectorTableEmbedder::VectorTableEmbedder(const std::string& artifact_dir)
    : artifact_dir_(artifact_dir) {
  std::ifstream meta_in(artifact_dir + "/meta.json");
  if (!meta_in) {
    throw std::runtime_error("model artifact missing: " + artifact_dir + "/meta.json");
  }
  nlohmann::json meta = nlohmann::json::parse(meta_in);
  if (!meta.contains("dim") || !meta["dim"].is_number_unsigned()) {
    throw std::runtime_error(artifact_dir + "/meta.json: missing numeric 'dim'");
  }
  dim_ = meta["dim"].get<std::size_t>();
  if (dim_ < 2) throw std::runtime_error(artifact_dir + ": artifact dim must be >= 2");

  const std::string vec_path = artifact_dir + "/vectors.tsv";
  std::ifstream in(vec_path);
  if (!in) throw std::runtime_error("model artifact missing: " + vec_path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw std::runtime_error(vec_path + ":" + std::to_string(line_no) + ": missing tab");
    }
    std::string token = line.substr(0, tab);
    std::istringstream values(line.substr(tab + 1));
    std::vector<double> vec;
    vec.reserve(dim_);
    double v;
    while (values >> v) vec.push_back(v);
    if (vec.size() != dim_) {
      throw std::runtime_error(vec_path + ":" + std::to_string(line_no) +
                               ": dimension mismatch: got " + std::to_string(vec.size()) +
                               ", expected " + std::to_string(dim_));
    }
    const std::size_t cps = utf8::decode(token).size();
    max_token_cps_ = std::max(max_token_cps_, cps);
    table_.emplace(std::move(token), std::move(vec));
  }
  if (table_.empty()) throw std::runtime_error(vec_path + ": empty vector table");
}

std::string VectorTableEmbedder::fingerprint() const {
  EmbedderSpec spec;
  spec.backend = EmbedderBackend::transformer_artifact;
  spec.model_path = artifact_dir_;
  return spec.fingerprint();
}

EmbeddingVector VectorTableEmbedder::compute(const std::string& term) const {
  if (term.empty()) throw std::invalid_argument("embed_term: empty term");

  EmbeddingVector vec;
  vec.values.assign(dim_, 0.0);
  std::size_t pooled = 0;

  if (auto it = table_.find(term); it != table_.end()) {
    vec.values = it->second;
    pooled = 1;
  } else {
    // Greedy longest-match segmentation over the token vocabulary;
    // codepoints not covered by any token are skipped.
    const std::vector<char32_t> cps = utf8::decode(term);
    std::size_t pos = 0;
    while (pos < cps.size()) {
      std::size_t best_len = 0;
      const std::unordered_map<std::string, std::vector<double>>::const_iterator end =
          table_.end();
      auto best = end;
      const std::size_t longest = std::min(max_token_cps_, cps.size() - pos);
      std::string piece;
      for (std::size_t len = 1; len <= longest; ++len) {
        utf8::append(piece, cps[pos + len - 1]);
        if (auto it = table_.find(piece); it != end) {
          best = it;
          best_len = len;
        }
      }
      if (best != end) {
        for (std::size_t d = 0; d < dim_; ++d) vec.values[d] += best->second[d];
        ++pooled;
        pos += best_len;
      } else {
        ++pos;
      }
    }
  }

  if (pooled == 0) {
    vec.featureless = true;
    return vec;
  }
  for (double& v : vec.values) v /= static_cast<double>(pooled);
  const double norm = vec.norm();
  if (norm == 0.0) {
    vec.featureless = true;
    std::fill(vec.values.begin(), vec.values.end(), 0.0);
    return vec;
  }
  for (double& v : vec.values) v /= norm;
  return vec;
}

std::unique_ptr<Embedder> make_embedder(const EmbedderSpec& spec) {
  switch (spec.backend) {
    case EmbedderBackend::hash_ngram:
      return std::make_unique<HashNgramEmbedder>(spec.dim, spec.ngram);
    case EmbedderBackend::transformer_artifact:
      if (spec.model_path.empty()) {
        throw std::runtime_error("transformer-artifact backend requires a model path");
      }
      return std::make_unique<VectorTableEmbedder>(spec.model_path);
  }
  throw std::logic_error("unknown embedder backend");
}

double cosine(const EmbeddingVector& a, const EmbeddingVector& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("cosine: dimension mismatch (" + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()) + ")");
  }
  if (a.featureless || b.featureless) return 0.0;
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    dot += a.values[i] * b.values[i];
    na += a.values[i] * a.values[i];
    nb += b.values[i] * b.values[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

EmbeddingVector centroid(const std::vector<EmbeddingVector>& vectors) {
  if (vectors.empty()) throw std::invalid_argument("centroid: empty input");
  const std::size_t dim = vectors.front().dim();
  EmbeddingVector mean;
  mean.values.assign(dim, 0.0);
  for (const EmbeddingVector& v : vectors) {
    if (v.dim() != dim) throw std::invalid_argument("centroid: dimension mismatch");
    for (std::size_t i = 0; i < dim; ++i) mean.values[i] += v.values[i];
  }
  for (double& v : mean.values) v /= static_cast<double>(vectors.size());
  if (mean.norm() == 0.0) mean.featureless = true;
  return mean;
}

}  // namespace cske
