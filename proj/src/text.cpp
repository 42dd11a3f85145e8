#include "cske/text.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace cske {

namespace utf8 {

std::vector<char32_t> decode(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char b0 = static_cast<unsigned char>(s[i]);
    char32_t cp = 0xFFFD;
    std::size_t len = 1;
    if (b0 < 0x80) {
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0 && i + 1 < s.size()) {
      unsigned char b1 = static_cast<unsigned char>(s[i + 1]);
      if ((b1 & 0xC0) == 0x80) {
        cp = (char32_t(b0 & 0x1F) << 6) | (b1 & 0x3F);
        len = 2;
      }
    } else if ((b0 & 0xF0) == 0xE0 && i + 2 < s.size()) {
      unsigned char b1 = static_cast<unsigned char>(s[i + 1]);
      unsigned char b2 = static_cast<unsigned char>(s[i + 2]);
      if ((b1 & 0xC0) == 0x80 && (b2 & 0xC0) == 0x80) {
        cp = (char32_t(b0 & 0x0F) << 12) | (char32_t(b1 & 0x3F) << 6) | (b2 & 0x3F);
        len = 3;
      }
    } else if ((b0 & 0xF8) == 0xF0 && i + 3 < s.size()) {
      unsigned char b1 = static_cast<unsigned char>(s[i + 1]);
      unsigned char b2 = static_cast<unsigned char>(s[i + 2]);
      unsigned char b3 = static_cast<unsigned char>(s[i + 3]);
      if ((b1 & 0xC0) == 0x80 && (b2 & 0xC0) == 0x80 && (b3 & 0xC0) == 0x80) {
        cp = (char32_t(b0 & 0x07) << 18) | (char32_t(b1 & 0x3F) << 12) |
             (char32_t(b2 & 0x3F) << 6) | (b3 & 0x3F);
        len = 4;
      }
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) append(out, cp);
  return out;
}

}  // namespace utf8

namespace {

constexpr char32_t kCombiningDiaeresis = 0x0308;

char32_t compose_umlaut(char32_t base) {
  switch (base) {
    case U'a': case U'A': return 0x00E4;
    case U'o': case U'O': return 0x00F6;
    case U'u': case U'U': return 0x00FC;
    default: return 0;
  }
}

char32_t to_lower_cp(char32_t c) {
  if (c >= U'A' && c <= U'Z') return c + 0x20;
  // Latin-1 supplement capitals (multiplication sign excluded).
  if (c >= 0x00C0 && c <= 0x00DE && c != 0x00D7) return c + 0x20;
  if (c == 0x1E9E) return 0x00DF;  // capital sharp s
  return c;
}

}  // namespace

std::string normalize_text(std::string_view raw, const NormalizeOptions& opts) {
  const std::vector<char32_t> cps = utf8::decode(raw);
  std::string out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < cps.size(); ++i) {
    char32_t c = cps[i];
    if (i + 1 < cps.size() && cps[i + 1] == kCombiningDiaeresis) {
      if (char32_t composed = compose_umlaut(c); composed != 0) {
        c = composed;
        ++i;
      }
    }
    c = to_lower_cp(c);
    if (opts.transliterate) {
      switch (c) {
        case 0x00E4: out += "ae"; continue;
        case 0x00F6: out += "oe"; continue;
        case 0x00FC: out += "ue"; continue;
        case 0x00DF: out += "ss"; continue;
        default: break;
      }
    }
    utf8::append(out, c);
  }
  return out;
}

namespace {

bool is_token_cp(char32_t c) {
  return (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z') ||
         (c >= U'0' && c <= U'9') || c >= 0x80;
}

bool is_digit_cp(char32_t c) { return c >= U'0' && c <= U'9'; }

}  // namespace

std::vector<std::string> extract_candidates(std::string_view text, const Stopwords& stopwords,
                                            std::size_t min_len) {
  const std::vector<char32_t> cps = utf8::decode(text);
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < cps.size()) {
    if (!is_token_cp(cps[i])) {
      ++i;
      continue;
    }
    std::size_t start = i;
    bool pure_digit = true;
    while (i < cps.size() && is_token_cp(cps[i])) {
      pure_digit = pure_digit && is_digit_cp(cps[i]);
      ++i;
    }
    const std::size_t len = i - start;
    if (len < min_len || pure_digit) continue;
    std::string token;
    for (std::size_t j = start; j < i; ++j) utf8::append(token, cps[j]);
    if (stopwords.count(token)) continue;
    out.push_back(std::move(token));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Stopwords load_stopwords(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open stopword file: " + path);
  Stopwords words;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n' ||
                             line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    std::size_t begin = line.find_first_not_of(" \t");
    if (begin == std::string::npos) continue;
    line = line.substr(begin);
    if (line.empty() || line[0] == '#') continue;
    words.insert(normalize_text(line));
  }
  return words;
}

const Stopwords& default_german_stopwords() {
  // Function words plus registry boilerplate abbreviations; the shipped
  // data/stopwords_de.txt holds the same list.
  static const Stopwords words = [] {
    static constexpr const char* kList[] = {
        "ab",    "aber",  "alle",  "allem", "allen", "aller", "alles", "als",
        "also",  "am",    "an",    "andere", "anderen", "anderer", "anderes",
        "auch",  "auf",   "aus",   "bei",   "beim",  "bis",   "bzw",   "co",
        "da",    "dabei", "damit", "dann",  "das",   "dass",  "dem",   "den",
        "denen", "der",   "deren", "des",   "dessen", "die",  "dies",  "diese",
        "diesem", "diesen", "dieser", "dieses", "doch", "dort", "du",   "durch",
        "eigene", "eigenem", "eigenen", "eigener", "eigenes", "ein",   "eine",
        "einem", "einen", "einer", "eines", "er",    "es",    "etc",   "etwa",
        "ferner", "fuer",  "gegen", "gmbh",  "hat",   "haben", "hier",
        "ihm",   "ihn",   "ihr",   "ihre",  "ihrem", "ihren", "ihrer", "im",
        "in",    "ins",   "insbesondere",   "ist",   "ja",    "je",    "jede",
        "jedem", "jeden", "jeder", "jedes", "kann",  "kein",  "keine", "kg",
        "koennen", "man", "mehr",  "mit",   "nach",  "nebst", "nicht", "noch",
        "nur",   "ob",    "oder",  "ohne",  "saemtliche", "saemtlicher", "sein",
        "seine", "seinem", "seinen", "seiner", "sich", "sie",  "sind",  "so",
        "sonstige", "sonstigen", "sonstiger", "sowie", "sowohl", "ueber", "ug",
        "um",    "und",   "uns",   "unter", "usw",   "vom",   "von",   "vor",
        "war",   "waren", "was",   "welche", "welchem", "welchen", "welcher",
        "welches", "wem", "wen",   "wenn",  "wer",   "werden", "wie",  "wir",
        "wird",  "wurde", "wurden", "zu",   "zum",   "zur",   "zwecks",
    };
    Stopwords set;
    for (const char* w : kList) set.insert(w);
    return set;
  }();
  return words;
}

}  // namespace cske
