#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace cske {

using Stopwords = std::unordered_set<std::string>;

struct NormalizeOptions {
  // German registry corpora are conventionally transliterated
  // (ae/oe/ue/ss); disable for corpora where umlauts must survive.
  bool transliterate = true;
};

// Lowercases, composes decomposed umlaut sequences (a/o/u + combining
// diaeresis) and transliterates ä→ae, ö→oe, ü→ue, ß→ss. Idempotent.
std::string normalize_text(std::string_view raw, const NormalizeOptions& opts = {});

// Distinct tokens of `text`: maximal runs of letters/digits, at least
// min_len codepoints long, not pure-digit, not in `stopwords`.
// Returned sorted ascending.
std::vector<std::string> extract_candidates(std::string_view text,
                                            const Stopwords& stopwords,
                                            std::size_t min_len = 2);

// One token per line, normalized; '#' lines and blank lines skipped.
Stopwords load_stopwords(const std::string& path);

// Built-in German function-word list (mirrors data/stopwords_de.txt).
const Stopwords& default_german_stopwords();

namespace utf8 {

std::vector<char32_t> decode(std::string_view s);
void append(std::string& out, char32_t cp);
std::string encode(const std::vector<char32_t>& cps);

}  // namespace utf8

}  // namespace cske
