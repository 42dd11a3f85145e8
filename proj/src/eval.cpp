#include "cske/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "cske/kernels.hpp"

namespace cske {

std::string_view method_name(MatchMethod method) {
  switch (method) {
    case MatchMethod::exact: return "exact";
    case MatchMethod::lemma: return "lemma";
    case MatchMethod::fuzzy: return "fuzzy";
    case MatchMethod::cosine: return "cosine";
  }
  throw std::logic_error("unknown match method");
}

Lemmatizer Lemmatizer::from_tsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lemma table: " + path);
  Lemmatizer lem;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": expected 'surface<TAB>lemma'");
    }
    lem.table_.emplace(normalize_text(line.substr(0, tab)),
                       normalize_text(line.substr(tab + 1)));
  }
  return lem;
}

std::string Lemmatizer::lemma(const std::string& surface) const {
  if (auto it = table_.find(surface); it != table_.end()) return it->second;
  return surface;
}

std::set<std::string> corpus_vocabulary(const Corpus& corpus, std::size_t min_len) {
  static const Stopwords kNone;
  std::set<std::string> vocab;
  for (const Document& doc : corpus.documents) {
    for (std::string& token : extract_candidates(doc.text, kNone, min_len)) {
      vocab.insert(std::move(token));
    }
  }
  return vocab;
}

FilteredGold filter_gold(const GoldSet& gold, const std::set<std::string>& corpus_vocab,
                         const Lemmatizer& lemmatizer) {
  std::unordered_set<std::string> lemma_vocab;
  lemma_vocab.reserve(corpus_vocab.size());
  for (const std::string& token : corpus_vocab) lemma_vocab.insert(lemmatizer.lemma(token));

  FilteredGold out;
  for (const std::string& term : gold.keywords) {
    const std::string normalized = normalize_text(term);
    if (corpus_vocab.count(normalized)) out.surface.push_back(normalized);
    if (lemma_vocab.count(lemmatizer.lemma(normalized))) out.lemma.push_back(normalized);
  }
  return out;
}

double precision_at_k_exact(const std::vector<std::string>& extracted,
                            const std::vector<std::string>& gold, std::size_t k) {
  if (k == 0) throw std::invalid_argument("precision_at_k: k must be >= 1");
  const std::unordered_set<std::string> gold_set(gold.begin(), gold.end());
  std::size_t hits = 0;
  for (std::size_t i = 0; i < std::min(k, extracted.size()); ++i) {
    if (gold_set.count(extracted[i])) ++hits;
  }
  return 100.0 * static_cast<double>(hits) / static_cast<double>(k);
}

double precision_at_k_lemma(const std::vector<std::string>& extracted,
                            const std::vector<std::string>& gold, std::size_t k,
                            const Lemmatizer& lemmatizer) {
  if (k == 0) throw std::invalid_argument("precision_at_k: k must be >= 1");
  std::unordered_set<std::string> gold_lemmas;
  for (const std::string& g : gold) gold_lemmas.insert(lemmatizer.lemma(g));
  std::size_t hits = 0;
  for (std::size_t i = 0; i < std::min(k, extracted.size()); ++i) {
    if (gold_lemmas.count(lemmatizer.lemma(extracted[i]))) ++hits;
  }
  return 100.0 * static_cast<double>(hits) / static_cast<double>(k);
}

double fuzzy_ratio(std::string_view a, std::string_view b) {
  const std::vector<char32_t> ca = utf8::decode(a);
  const std::vector<char32_t> cb = utf8::decode(b);
  if (ca.empty() && cb.empty()) return 100.0;
  if (ca.empty() || cb.empty()) return 0.0;

  // LCS length, two-row DP.
  std::vector<std::size_t> prev(cb.size() + 1, 0), cur(cb.size() + 1, 0);
  for (std::size_t i = 1; i <= ca.size(); ++i) {
    for (std::size_t j = 1; j <= cb.size(); ++j) {
      cur[j] = ca[i - 1] == cb[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  const double lcs = static_cast<double>(prev[cb.size()]);
  return 100.0 * 2.0 * lcs / static_cast<double>(ca.size() + cb.size());
}

double fuzzy_match_score(const std::vector<std::string>& extracted,
                         const std::vector<std::string>& gold, std::size_t k) {
  if (k == 0) throw std::invalid_argument("fuzzy_match_score: k must be >= 1");
  if (gold.empty()) throw std::invalid_argument("fuzzy_match_score: empty gold set");
  const std::size_t slots = std::min(k, extracted.size());
  std::vector<double> best(slots, 0.0);
  // Per-slot maxima in parallel, summed serially in slot order so the
  // result does not depend on thread count.
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(slots); ++i) {
    for (const std::string& g : gold) {
      best[i] = std::max(best[i], fuzzy_ratio(extracted[i], g));
    }
  }
  double sum = 0.0;
  for (double b : best) sum += b;
  return sum / static_cast<double>(k);
}

double cosine_match_score(const std::vector<std::string>& extracted,
                          const std::vector<std::string>& gold, std::size_t k,
                          const Embedder& eval_embedder) {
  if (k == 0) throw std::invalid_argument("cosine_match_score: k must be >= 1");
  if (gold.empty()) throw std::invalid_argument("cosine_match_score: empty gold set");

  std::vector<std::string> top(extracted.begin(),
                               extracted.begin() +
                                   static_cast<std::ptrdiff_t>(std::min(k, extracted.size())));
  const std::vector<EmbeddingVector> top_vecs = kernels::embed_terms(eval_embedder, top);
  const std::vector<EmbeddingVector> gold_vecs = kernels::embed_terms(eval_embedder, gold);
  const std::vector<double> best = kernels::max_cosine_to_set(top_vecs, gold_vecs);

  double sum = 0.0;
  for (double b : best) sum += 100.0 * std::clamp(b, 0.0, 1.0);
  return sum / static_cast<double>(k);
}

namespace {

std::vector<std::string> keywords_for_eval(const ClassResult& result, bool exclude_seeds) {
  if (!exclude_seeds) return result.final_keywords;
  const std::unordered_set<std::string> seeds(result.final_seeds.begin(),
                                              result.final_seeds.end());
  std::vector<std::string> out;
  out.reserve(result.final_keywords.size());
  for (const std::string& term : result.final_keywords) {
    if (!seeds.count(term)) out.push_back(term);
  }
  return out;
}

}  // namespace

EvaluationReport evaluate_all(const std::map<std::string, ClassResult>& results,
                              const std::map<std::string, GoldSet>& gold,
                              const std::set<std::string>& corpus_vocab,
                              const Lemmatizer& lemmatizer, const Embedder& eval_embedder,
                              const EvalOptions& opts) {
  if (opts.ks.empty()) throw std::invalid_argument("evaluate_all: no k values");
  for (const auto& [class_id, _] : results) {
    if (!gold.count(class_id)) {
      throw std::runtime_error("no gold set for class '" + class_id + "'");
    }
  }

  EvaluationReport report;
  report.ks = opts.ks;

  for (const auto& [class_id, result] : results) {
    const std::vector<std::string> extracted = keywords_for_eval(result, opts.exclude_seeds);
    const FilteredGold filtered = filter_gold(gold.at(class_id), corpus_vocab, lemmatizer);
    auto& class_cells = report.cells[class_id];
    for (std::size_t k : opts.ks) {
      class_cells[MatchMethod::exact][k] = precision_at_k_exact(extracted, filtered.surface, k);
      class_cells[MatchMethod::lemma][k] =
          precision_at_k_lemma(extracted, filtered.lemma, k, lemmatizer);
      class_cells[MatchMethod::fuzzy][k] = fuzzy_match_score(extracted, filtered.surface, k);
      class_cells[MatchMethod::cosine][k] =
          cosine_match_score(extracted, filtered.surface, k, eval_embedder);
    }
  }

  const double n_classes = static_cast<double>(results.size());
  for (MatchMethod method : kAllMatchMethods) {
    double method_sum = 0.0;
    for (std::size_t k : opts.ks) {
      double sum = 0.0;
      for (const auto& [class_id, class_cells] : report.cells) {
        sum += class_cells.at(method).at(k);
      }
      const double avg = sum / n_classes;
      report.average_over_classes[method][k] = avg;
      method_sum += avg;
    }
    report.average_over_k[method] = method_sum / static_cast<double>(opts.ks.size());
  }

  double overall = 0.0;
  for (std::size_t k : opts.ks) {
    double sum = 0.0;
    for (MatchMethod method : kAllMatchMethods) sum += report.average_over_classes[method][k];
    report.average_match[k] = sum / static_cast<double>(kAllMatchMethods.size());
    overall += report.average_match[k];
  }
  report.average_match_overall = overall / static_cast<double>(opts.ks.size());
  return report;
}

std::string EvaluationReport::text_table() const {
  std::ostringstream out;
  char buf[32];

  auto cell = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%8.2f", v);
    out << buf;
  };

  out << "                ";
  for (std::size_t k : ks) {
    std::snprintf(buf, sizeof(buf), "    P@%-3zu", k);
    out << buf;
  }
  out << "   Average\n";

  auto row = [&](std::string_view label, const std::map<std::size_t, double>& by_k,
                 double avg) {
    std::snprintf(buf, sizeof(buf), "%-16.16s", std::string(label).c_str());
    out << buf;
    for (std::size_t k : ks) {
      out << " ";
      cell(by_k.at(k));
    }
    out << "  ";
    cell(avg);
    out << "\n";
  };

  static constexpr std::pair<MatchMethod, std::string_view> kRows[] = {
      {MatchMethod::exact, "Exact Match"},
      {MatchMethod::lemma, "Lemma Match"},
      {MatchMethod::fuzzy, "Fuzzy Match"},
      {MatchMethod::cosine, "CS Match"},
  };
  for (const auto& [method, label] : kRows) {
    row(label, average_over_classes.at(method), average_over_k.at(method));
  }
  row("Average Match", average_match, average_match_overall);
  return out.str();
}

}  // namespace cske
