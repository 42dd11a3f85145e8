#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cske/text.hpp"

namespace cske {

// Ordered, duplicate-free seed keywords for one class. `original` holds
// the user-provided seeds, `augmented` the terms promoted by iterations.
struct SeedSet {
  std::string class_id;
  std::vector<std::string> original;
  std::vector<std::string> augmented;

  std::size_t size() const { return original.size() + augmented.size(); }
  bool empty() const { return original.empty() && augmented.empty(); }
  bool contains(std::string_view term) const;
  // original followed by augmented, in addition order.
  std::vector<std::string> all() const;
};

struct GoldSet {
  std::string class_id;
  std::vector<std::string> keywords;

  bool contains(std::string_view term) const;
};

struct SeedSplit {
  std::map<std::string, SeedSet> seeds;
  std::map<std::string, GoldSet> gold;
};

// Truncates every pool entry to its first whitespace-delimited word,
// normalizes, deduplicates (first occurrence wins), then samples
// `per_class` seeds per class without replacement. The remainder of the
// pool becomes the gold set. Deterministic for a fixed rng_seed.
SeedSplit prepare_seeds(const std::map<std::string, std::vector<std::string>>& gold_pool,
                        std::size_t per_class, std::uint64_t rng_seed,
                        const NormalizeOptions& opts = {});

// JSON object mapping class-id -> array of keyword strings.
std::map<std::string, std::vector<std::string>> load_keyword_file(const std::string& path);

// Loads a keyword file as per-class seed sets (terms normalized and
// deduplicated, order preserved).
std::map<std::string, SeedSet> load_seed_sets(const std::string& path,
                                              const NormalizeOptions& opts = {});

std::map<std::string, GoldSet> load_gold_sets(const std::string& path,
                                              const NormalizeOptions& opts = {});

void save_keyword_file(const std::string& path,
                       const std::map<std::string, std::vector<std::string>>& keywords);

}  // namespace cske
