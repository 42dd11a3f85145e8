#include "cske/corpus.hpp"

#include <fstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace cske {

namespace {

bool blank_line(const std::string& line) {
  return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

Corpus load_corpus(const std::string& path, const NormalizeOptions& opts) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);

  Corpus corpus;
  std::unordered_map<std::string, std::size_t> seen;  // id -> first line
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank_line(line)) continue;
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": malformed record: " + e.what());
    }
    if (!record.is_object() || !record.contains("id") || !record["id"].is_string()) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": malformed record: missing string field 'id'");
    }
    if (!record.contains("text") || !record["text"].is_string()) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": malformed record: missing string field 'text'");
    }
    std::string id = record["id"].get<std::string>();
    if (id.empty()) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": malformed record: empty 'id'");
    }
    if (auto [it, inserted] = seen.emplace(id, line_no); !inserted) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": duplicate id '" +
                               id + "' (first seen at line " + std::to_string(it->second) +
                               ")");
    }
    corpus.documents.push_back(
        {std::move(id), normalize_text(record["text"].get<std::string>(), opts)});
  }
  return corpus;
}

std::vector<Batch> make_batches(const Corpus& corpus, std::size_t n_iterations) {
  if (corpus.empty()) throw std::invalid_argument("make_batches: empty corpus");
  if (n_iterations == 0) throw std::invalid_argument("make_batches: n_iterations must be >= 1");

  const std::size_t n = corpus.size();
  const std::size_t k = std::min(n_iterations, n);
  const std::size_t base = n / k;
  const std::size_t remainder = n % k;

  std::vector<Batch> batches;
  batches.reserve(k);
  std::size_t offset = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t size = base + (i < remainder ? 1 : 0);
    batches.push_back(
        {i, std::span<const Document>(corpus.documents.data() + offset, size)});
    offset += size;
  }
  return batches;
}

}  // namespace cske
