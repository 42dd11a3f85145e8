#include "cske/seeds.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

#include "cske/embedding.hpp"
#include "cske/rng.hpp"

namespace cske {

bool SeedSet::contains(std::string_view term) const {
  auto match = [&](const std::vector<std::string>& v) {
    return std::find(v.begin(), v.end(), term) != v.end();
  };
  return match(original) || match(augmented);
}

std::vector<std::string> SeedSet::all() const {
  std::vector<std::string> out = original;
  out.insert(out.end(), augmented.begin(), augmented.end());
  return out;
}

bool GoldSet::contains(std::string_view term) const {
  return std::find(keywords.begin(), keywords.end(), term) != keywords.end();
}

namespace {

std::string first_word(const std::string& entry) {
  std::size_t start = entry.find_first_not_of(" \t");
  if (start == std::string::npos) return "";
  std::size_t end = entry.find_first_of(" \t", start);
  return entry.substr(start, end == std::string::npos ? std::string::npos : end - start);
}

std::vector<std::string> normalized_unique(const std::vector<std::string>& terms,
                                           const NormalizeOptions& opts,
                                           bool truncate_to_first_word) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (const std::string& raw : terms) {
    std::string term = truncate_to_first_word ? first_word(raw) : raw;
    term = normalize_text(term, opts);
    if (term.empty()) continue;
    if (seen.insert(term).second) out.push_back(std::move(term));
  }
  return out;
}

}  // namespace

SeedSplit prepare_seeds(const std::map<std::string, std::vector<std::string>>& gold_pool,
                        std::size_t per_class, std::uint64_t rng_seed,
                        const NormalizeOptions& opts) {
  SeedSplit split;
  for (const auto& [class_id, pool] : gold_pool) {
    const std::vector<std::string> candidates = normalized_unique(pool, opts, true);
    if (candidates.size() < per_class) {
      throw std::runtime_error("class '" + class_id + "' has only " +
                               std::to_string(candidates.size()) +
                               " distinct truncated keywords, need " +
                               std::to_string(per_class));
    }
    // Per-class stream keyed on (rng_seed, class id) so one class's draw
    // never depends on which other classes are present.
    DeterministicRng rng(splitmix64(rng_seed ^ fnv1a64(class_id)));
    const std::vector<std::size_t> picks = rng.sample_indices(candidates.size(), per_class);

    SeedSet seeds;
    seeds.class_id = class_id;
    std::unordered_set<std::size_t> picked(picks.begin(), picks.end());
    for (std::size_t i : picks) seeds.original.push_back(candidates[i]);

    GoldSet gold;
    gold.class_id = class_id;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (!picked.count(i)) gold.keywords.push_back(candidates[i]);
    }
    split.seeds.emplace(class_id, std::move(seeds));
    split.gold.emplace(class_id, std::move(gold));
  }
  return split;
}

std::map<std::string, std::vector<std::string>> load_keyword_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open keyword file: " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(path + ": invalid JSON: " + e.what());
  }
  if (!doc.is_object()) {
    throw std::runtime_error(path + ": expected a JSON object mapping class -> keywords");
  }
  std::map<std::string, std::vector<std::string>> out;
  for (const auto& [class_id, value] : doc.items()) {
    if (!value.is_array()) {
      throw std::runtime_error(path + ": class '" + class_id + "' is not an array");
    }
    std::vector<std::string> keywords;
    for (const auto& item : value) {
      if (!item.is_string()) {
        throw std::runtime_error(path + ": class '" + class_id +
                                 "' contains a non-string keyword");
      }
      keywords.push_back(item.get<std::string>());
    }
    out.emplace(class_id, std::move(keywords));
  }
  return out;
}

std::map<std::string, SeedSet> load_seed_sets(const std::string& path,
                                              const NormalizeOptions& opts) {
  std::map<std::string, SeedSet> out;
  for (const auto& [class_id, terms] : load_keyword_file(path)) {
    SeedSet seeds;
    seeds.class_id = class_id;
    seeds.original = normalized_unique(terms, opts, false);
    out.emplace(class_id, std::move(seeds));
  }
  return out;
}

std::map<std::string, GoldSet> load_gold_sets(const std::string& path,
                                              const NormalizeOptions& opts) {
  std::map<std::string, GoldSet> out;
  for (const auto& [class_id, terms] : load_keyword_file(path)) {
    GoldSet gold;
    gold.class_id = class_id;
    gold.keywords = normalized_unique(terms, opts, false);
    out.emplace(class_id, std::move(gold));
  }
  return out;
}

void save_keyword_file(const std::string& path,
                       const std::map<std::string, std::vector<std::string>>& keywords) {
  nlohmann::json doc = nlohmann::json::object();
  for (const auto& [class_id, terms] : keywords) doc[class_id] = terms;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write keyword file: " + path);
  out << doc.dump(2) << "\n";
}

}  // namespace cske
