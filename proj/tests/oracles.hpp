// Brute-force reference implementations used only by tests. Each oracle
// is coded independently of the library path it checks so that a bug in
// the implementation cannot hide in its own oracle.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "cske/embedding.hpp"
#include "cske/rng.hpp"

namespace oracle {

// --- signed trigram hashing, reimplemented from the embedding contract ---

inline std::uint64_t fnv1a64_bytes(const std::string& s) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (char c : s) {
    hash = (hash ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
  }
  return hash;
}

// ASCII-only variant (fixture terms are normalized ASCII): pad, slide a
// window of `n` characters, bucket by hash mod dim, sign from bit 63.
inline std::vector<double> hash_embed(const std::string& term, std::size_t dim,
                                      std::size_t n = 3) {
  const std::string padded = "#" + term + "#";
  std::vector<double> vec(dim, 0.0);
  if (padded.size() >= n) {
    for (std::size_t i = 0; i + n <= padded.size(); ++i) {
      const std::uint64_t h = fnv1a64_bytes(padded.substr(i, n));
      vec[h % dim] += (h & 0x8000000000000000ULL) ? -1.0 : 1.0;
    }
  }
  const double norm = std::sqrt(std::inner_product(vec.begin(), vec.end(), vec.begin(), 0.0));
  if (norm > 0.0) {
    for (double& v : vec) v /= norm;
  }
  return vec;
}

inline std::set<std::string> char_trigrams(const std::string& term) {
  const std::string padded = "#" + term + "#";
  std::set<std::string> grams;
  for (std::size_t i = 0; i + 3 <= padded.size(); ++i) grams.insert(padded.substr(i, 3));
  return grams;
}

inline std::size_t trigram_overlap(const std::string& a, const std::string& b) {
  const std::set<std::string> ga = char_trigrams(a);
  const std::set<std::string> gb = char_trigrams(b);
  std::size_t shared = 0;
  for (const std::string& g : ga) shared += gb.count(g);
  return shared;
}

// --- scoring ---

inline double cosine(const std::vector<double>& a, const std::vector<double>& b) {
  const double dot = std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
  const double na = std::sqrt(std::inner_product(a.begin(), a.end(), a.begin(), 0.0));
  const double nb = std::sqrt(std::inner_product(b.begin(), b.end(), b.begin(), 0.0));
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (na * nb);
}

struct Scored {
  std::string term;
  double avg = 0.0;
  double max = 0.0;
  double final = 0.0;
};

inline Scored score_term(const std::string& term, const std::vector<double>& vec,
                         const std::vector<std::vector<double>>& seed_vecs) {
  Scored s;
  s.term = term;
  double sum = 0.0;
  double best = -std::numeric_limits<double>::infinity();
  for (const std::vector<double>& sv : seed_vecs) {
    const double c = cosine(vec, sv);
    sum += c;
    best = std::max(best, c);
  }
  s.avg = sum / static_cast<double>(seed_vecs.size());
  s.max = best;
  s.final = 0.5 * (s.avg + s.max);
  return s;
}

// Score every term against every seed and sort (final desc, term asc).
inline std::vector<Scored> rank(const std::vector<std::string>& terms,
                                const std::vector<std::vector<double>>& term_vecs,
                                const std::vector<std::vector<double>>& seed_vecs) {
  std::vector<Scored> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    out.push_back(score_term(terms[i], term_vecs[i], seed_vecs));
  }
  std::stable_sort(out.begin(), out.end(), [](const Scored& a, const Scored& b) {
    return a.final > b.final || (a.final == b.final && a.term < b.term);
  });
  return out;
}

// --- nearest-rank percentile selection ---

inline std::vector<std::string> select_new_seeds(const std::vector<Scored>& ranked,
                                                 double percentile, std::size_t n,
                                                 const std::set<std::string>& existing) {
  if (ranked.empty() || n == 0) return {};
  std::vector<double> ascending;
  for (const Scored& s : ranked) ascending.push_back(s.final);
  std::sort(ascending.begin(), ascending.end());
  std::size_t rank_pos = static_cast<std::size_t>(
      std::ceil(percentile / 100.0 * static_cast<double>(ascending.size())));
  if (rank_pos < 1) rank_pos = 1;
  if (rank_pos > ascending.size()) rank_pos = ascending.size();
  const double threshold = ascending[rank_pos - 1];

  std::vector<std::string> picks;
  for (const Scored& s : ranked) {
    if (picks.size() == n) break;
    if (s.final < threshold) continue;
    if (existing.count(s.term)) continue;
    picks.push_back(s.term);
  }
  return picks;
}

// --- longest common subsequence, full-table DP ---

inline std::size_t lcs_length(const std::string& a, const std::string& b) {
  std::vector<std::vector<std::size_t>> table(a.size() + 1,
                                              std::vector<std::size_t>(b.size() + 1, 0));
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      if (a[i - 1] == b[j - 1]) {
        table[i][j] = table[i - 1][j - 1] + 1;
      } else {
        table[i][j] = std::max(table[i - 1][j], table[i][j - 1]);
      }
    }
  }
  return table[a.size()][b.size()];
}

inline double fuzzy_ratio(const std::string& a, const std::string& b) {
  if (a.empty() && b.empty()) return 100.0;
  return 200.0 * static_cast<double>(lcs_length(a, b)) /
         static_cast<double>(a.size() + b.size());
}

// --- random instance helpers ---

inline std::string random_word(cske::DeterministicRng& rng, std::size_t min_len,
                               std::size_t max_len, std::size_t alphabet = 26) {
  const std::size_t len = min_len + rng.next_below(max_len - min_len + 1);
  std::string word;
  for (std::size_t i = 0; i < len; ++i) {
    word.push_back(static_cast<char>('a' + rng.next_below(alphabet)));
  }
  return word;
}

inline std::vector<std::string> random_vocab(cske::DeterministicRng& rng, std::size_t count,
                                             std::size_t min_len = 3,
                                             std::size_t max_len = 12,
                                             std::size_t alphabet = 26) {
  std::set<std::string> words;
  while (words.size() < count) words.insert(random_word(rng, min_len, max_len, alphabet));
  return {words.begin(), words.end()};
}

inline std::vector<double> random_unit_vector(cske::DeterministicRng& rng, std::size_t dim) {
  std::vector<double> v(dim);
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (double& x : v) {
      // Uniform in [-1, 1) from the top 53 bits.
      x = static_cast<double>(rng.next() >> 11) / 4503599627370496.0 - 1.0;
      norm2 += x * x;
    }
  } while (norm2 == 0.0);
  const double norm = std::sqrt(norm2);
  for (double& x : v) x /= norm;
  return v;
}

}  // namespace oracle
