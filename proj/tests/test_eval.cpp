#include <doctest.h>

#include <cmath>

#include "cske/eval.hpp"
#include "cske/rng.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace cske;

namespace {

GoldSet gold_of(std::vector<std::string> keywords) {
  GoldSet g;
  g.class_id = "test";
  g.keywords = std::move(keywords);
  return g;
}

}  // namespace

TEST_CASE("filter_gold keeps only corpus-present terms") {
  const std::set<std::string> vocab = {"tabak", "handel", "zucht"};
  const Lemmatizer identity;

  SUBCASE("surface filtering") {
    const FilteredGold filtered = filter_gold(gold_of({"Tabak", "Kassava"}), vocab, identity);
    CHECK(filtered.surface == std::vector<std::string>{"tabak"});
  }
  SUBCASE("empty vocabulary keeps nothing") {
    const FilteredGold filtered = filter_gold(gold_of({"Tabak"}), {}, identity);
    CHECK(filtered.surface.empty());
    CHECK(filtered.lemma.empty());
  }
  SUBCASE("lemma match can keep terms the surface filter drops") {
    testutil::TempFile table("windparks\twindpark\n", ".tsv");
    const Lemmatizer lem = Lemmatizer::from_tsv(table.path());
    // Corpus contains the plural; the gold set the singular.
    const std::set<std::string> plural_vocab = {"windparks"};
    const FilteredGold filtered = filter_gold(gold_of({"windpark"}), plural_vocab, lem);
    CHECK(filtered.surface.empty());
    CHECK(filtered.lemma == std::vector<std::string>{"windpark"});
  }
}

TEST_CASE("precision_at_k_exact counts hits against k slots") {
  const std::vector<std::string> gold = {"a", "b", "c"};
  SUBCASE("3 of top-10") {
    std::vector<std::string> extracted = {"a", "x1", "b", "x2", "x3",
                                          "c", "x4", "x5", "x6", "x7"};
    CHECK(precision_at_k_exact(extracted, gold, 10) == 30.0);
  }
  SUBCASE("short lists keep the k denominator") {
    CHECK(precision_at_k_exact({"a", "b", "c"}, {"a", "b", "c", "d", "e"}, 10) == 30.0);
    std::vector<std::string> five_hits = {"a", "b", "c", "d", "e"};
    CHECK(precision_at_k_exact(five_hits, five_hits, 10) == 50.0);
  }
  SUBCASE("empty extraction scores zero") {
    CHECK(precision_at_k_exact({}, gold, 10) == 0.0);
  }
}

TEST_CASE("precision_at_k_lemma maps both sides through the lemmatizer") {
  testutil::TempFile table("windparks\twindpark\nenergieanlagen\tenergieanlage\n", ".tsv");
  const Lemmatizer lem = Lemmatizer::from_tsv(table.path());

  SUBCASE("plural extraction matches singular gold") {
    CHECK(precision_at_k_lemma({"windparks"}, {"windpark"}, 1, lem) == 100.0);
  }
  SUBCASE("identity lemmatizer reduces to exact match") {
    const Lemmatizer identity;
    const std::vector<std::string> extracted = {"a", "b", "x"};
    const std::vector<std::string> gold = {"a", "b"};
    CHECK(precision_at_k_lemma(extracted, gold, 3, identity) ==
          precision_at_k_exact(extracted, gold, 3));
  }
  SUBCASE("hand-built table, 3 hits in top-10") {
    std::vector<std::string> extracted = {"windparks", "x1", "energieanlagen", "x2", "x3",
                                          "windpark", "x4", "x5", "x6", "x7"};
    std::vector<std::string> gold = {"windpark", "energieanlage"};
    CHECK(precision_at_k_lemma(extracted, gold, 10, lem) == 30.0);
  }
}

TEST_CASE("fuzzy_ratio is the LCS indel similarity") {
  CHECK(fuzzy_ratio("abc", "abc") == 100.0);
  CHECK(fuzzy_ratio("abcd", "abce") == 75.0);
  CHECK(fuzzy_ratio("a", "b") == 0.0);
  CHECK(fuzzy_ratio("", "") == 100.0);
  CHECK(fuzzy_ratio("", "abc") == 0.0);
}

TEST_CASE("fuzzy_ratio is symmetric with fixed point 100") {
  DeterministicRng rng(71);
  for (int round = 0; round < 100; ++round) {
    const std::string a = oracle::random_word(rng, 0 + 1, 12, 6);
    const std::string b = oracle::random_word(rng, 1, 12, 6);
    CHECK(fuzzy_ratio(a, b) == fuzzy_ratio(b, a));
    CHECK(fuzzy_ratio(a, a) == 100.0);
  }
}

TEST_CASE("fuzzy_ratio agrees with the brute-force LCS oracle") {
  DeterministicRng rng(72);
  for (int round = 0; round < 500; ++round) {
    const std::string a = oracle::random_word(rng, 1, 12, 8);
    const std::string b = oracle::random_word(rng, 1, 12, 8);
    CHECK(fuzzy_ratio(a, b) == doctest::Approx(oracle::fuzzy_ratio(a, b)).epsilon(1e-12));
  }
}

TEST_CASE("fuzzy_match_score averages best ratios over k slots") {
  SUBCASE("gold terms themselves score 100") {
    CHECK(fuzzy_match_score({"a", "b"}, {"a", "b"}, 2) == 100.0);
  }
  SUBCASE("single near miss") {
    CHECK(fuzzy_match_score({"abcd"}, {"abce"}, 1) == 75.0);
  }
  SUBCASE("missing slots contribute zero") {
    CHECK(fuzzy_match_score({"abcd"}, {"abcd"}, 2) == 50.0);
    CHECK(fuzzy_match_score({}, {"abcd"}, 4) == 0.0);
  }
  SUBCASE("empty gold set is an error") {
    CHECK_THROWS_AS(fuzzy_match_score({"a"}, {}, 1), std::invalid_argument);
  }
}

TEST_CASE("per-slot fuzzy score dominates exact score") {
  DeterministicRng rng(73);
  for (int round = 0; round < 50; ++round) {
    std::vector<std::string> extracted = oracle::random_vocab(rng, 8, 2, 6, 4);
    std::vector<std::string> gold = oracle::random_vocab(rng, 5, 2, 6, 4);
    for (std::size_t k : {1u, 5u, 10u}) {
      CHECK(fuzzy_match_score(extracted, gold, k) >=
            precision_at_k_exact(extracted, gold, k) - 1e-9);
    }
  }
}

TEST_CASE("cosine_match_score basics") {
  HashNgramEmbedder embedder(64);
  SUBCASE("identical term contributes 100") {
    CHECK(cosine_match_score({"energie"}, {"energie"}, 1, embedder) ==
          doctest::Approx(100.0).epsilon(1e-9));
  }
  SUBCASE("missing slots contribute zero") {
    CHECK(cosine_match_score({"energie"}, {"energie"}, 2, embedder) ==
          doctest::Approx(50.0).epsilon(1e-9));
  }
  SUBCASE("empty gold set is an error") {
    CHECK_THROWS_AS(cosine_match_score({"a"}, {}, 1, embedder), std::invalid_argument);
  }
}

TEST_CASE("cosine_match_score equals the all-pairs oracle") {
  DeterministicRng rng(74);
  const std::size_t dim = 64;
  HashNgramEmbedder embedder(dim);
  for (int round = 0; round < 20; ++round) {
    const std::vector<std::string> extracted = oracle::random_vocab(rng, 12, 3, 9, 8);
    const std::vector<std::string> gold = oracle::random_vocab(rng, 6, 3, 9, 8);
    const std::size_t k = 10;

    double expected = 0.0;
    for (std::size_t i = 0; i < std::min(k, extracted.size()); ++i) {
      const std::vector<double> e = oracle::hash_embed(extracted[i], dim);
      double best = 0.0;
      for (const std::string& g : gold) {
        best = std::max(best, oracle::cosine(e, oracle::hash_embed(g, dim)));
      }
      expected += 100.0 * std::clamp(best, 0.0, 1.0);
    }
    expected /= static_cast<double>(k);

    CHECK(cosine_match_score(extracted, gold, k, embedder) ==
          doctest::Approx(expected).epsilon(1e-6));
  }
}

TEST_CASE("featureless embeddings contribute zero") {
  // The table backend with no coverage yields flagged zero vectors.
  testutil::TempFile anchor("x", ".d");
  const std::string dir = anchor.path() + ".dir";
  std::filesystem::create_directory(dir);
  {
    std::ofstream m(dir + "/meta.json");
    m << "{\"dim\": 2}\n";
    std::ofstream v(dir + "/vectors.tsv");
    v << "gold\t1 0\n";
  }
  VectorTableEmbedder embedder(dir);
  CHECK(cosine_match_score({"xyz"}, {"gold"}, 1, embedder) == 0.0);
  std::filesystem::remove_all(dir);
}

namespace {

std::map<std::string, ClassResult> results_fixture() {
  ClassResult a;
  a.class_id = "a";
  a.final_keywords = {"tabak", "zucht", "acker", "wiese"};
  ClassResult b;
  b.class_id = "b";
  b.final_keywords = {"energie", "strom", "netz", "kraft"};
  return {{"a", a}, {"b", b}};
}

std::set<std::string> vocab_fixture() {
  return {"tabak", "zucht", "acker", "wiese", "energie", "strom", "netz", "kraft"};
}

}  // namespace

TEST_CASE("evaluate_all fills the grid and averages") {
  HashNgramEmbedder eval_embedder(32);
  const Lemmatizer identity;

  SUBCASE("perfect extraction scores 100 under every method") {
    std::map<std::string, ClassResult> results;
    ClassResult r;
    r.class_id = "a";
    r.final_keywords = {"tabak", "zucht"};
    results["a"] = r;
    std::map<std::string, GoldSet> gold = {{"a", gold_of({"tabak", "zucht"})}};

    EvalOptions opts;
    opts.ks = {2};
    const EvaluationReport report = evaluate_all(results, gold, vocab_fixture(), identity,
                                                 eval_embedder, opts);
    for (MatchMethod m : kAllMatchMethods) {
      CHECK(report.cells.at("a").at(m).at(2) == doctest::Approx(100.0).epsilon(1e-9));
    }
  }

  SUBCASE("class averages are arithmetic means") {
    // Class a: 1 of 5 gold hits in top-5; class b: 2 of 5.
    auto results = results_fixture();
    std::map<std::string, GoldSet> gold = {
        {"a", gold_of({"tabak"})},
        {"b", gold_of({"energie", "strom"})},
    };
    EvalOptions opts;
    opts.ks = {5};
    const EvaluationReport report = evaluate_all(results, gold, vocab_fixture(), identity,
                                                 eval_embedder, opts);
    CHECK(report.cells.at("a").at(MatchMethod::exact).at(5) == 20.0);
    CHECK(report.cells.at("b").at(MatchMethod::exact).at(5) == 40.0);
    CHECK(report.average_over_classes.at(MatchMethod::exact).at(5) == 30.0);
    CHECK(report.average_over_k.at(MatchMethod::exact) == 30.0);

    // Report arithmetic: every average is the mean of its cells.
    for (MatchMethod m : kAllMatchMethods) {
      double sum = 0.0;
      for (const auto& [class_id, cells] : report.cells) sum += cells.at(m).at(5);
      CHECK(report.average_over_classes.at(m).at(5) ==
            doctest::Approx(sum / 2.0).epsilon(1e-9));
    }
    double method_sum = 0.0;
    for (MatchMethod m : kAllMatchMethods) {
      method_sum += report.average_over_classes.at(m).at(5);
    }
    CHECK(report.average_match.at(5) == doctest::Approx(method_sum / 4.0).epsilon(1e-9));
  }

  SUBCASE("class mismatch is an error") {
    auto results = results_fixture();
    std::map<std::string, GoldSet> gold = {{"a", gold_of({"tabak"})}};
    CHECK_THROWS_WITH_AS(evaluate_all(results, gold, vocab_fixture(), identity,
                                      eval_embedder, {}),
                         doctest::Contains("class 'b'"), std::runtime_error);
  }
}

TEST_CASE("adding a gold term never lowers any score") {
  HashNgramEmbedder eval_embedder(32);
  const Lemmatizer identity;
  DeterministicRng rng(75);

  for (int round = 0; round < 10; ++round) {
    const std::vector<std::string> extracted = oracle::random_vocab(rng, 10, 3, 7, 6);
    std::vector<std::string> gold = oracle::random_vocab(rng, 4, 3, 7, 6);
    const std::string extra = extracted[rng.next_below(extracted.size())];
    std::vector<std::string> bigger = gold;
    if (std::find(bigger.begin(), bigger.end(), extra) == bigger.end()) {
      bigger.push_back(extra);
    }
    const std::size_t k = 10;
    CHECK(precision_at_k_exact(extracted, bigger, k) >=
          precision_at_k_exact(extracted, gold, k));
    CHECK(precision_at_k_lemma(extracted, bigger, k, identity) >=
          precision_at_k_lemma(extracted, gold, k, identity));
    CHECK(fuzzy_match_score(extracted, bigger, k) >= fuzzy_match_score(extracted, gold, k));
    CHECK(cosine_match_score(extracted, bigger, k, eval_embedder) >=
          cosine_match_score(extracted, gold, k, eval_embedder) - 1e-12);
  }
}

TEST_CASE("exclude_seeds drops the head before scoring") {
  HashNgramEmbedder eval_embedder(32);
  const Lemmatizer identity;

  ClassResult r;
  r.class_id = "a";
  r.final_keywords = {"seed1", "tabak", "zucht"};
  r.final_seeds = {"seed1"};
  std::map<std::string, ClassResult> results = {{"a", r}};
  std::map<std::string, GoldSet> gold = {{"a", gold_of({"tabak", "zucht"})}};
  std::set<std::string> vocab = {"seed1", "tabak", "zucht"};

  EvalOptions with_seeds;
  with_seeds.ks = {2};
  EvalOptions without_seeds = with_seeds;
  without_seeds.exclude_seeds = true;

  const auto kept = evaluate_all(results, gold, vocab, identity, eval_embedder, with_seeds);
  const auto dropped =
      evaluate_all(results, gold, vocab, identity, eval_embedder, without_seeds);
  CHECK(kept.cells.at("a").at(MatchMethod::exact).at(2) == 50.0);
  CHECK(dropped.cells.at("a").at(MatchMethod::exact).at(2) == 100.0);
}

TEST_CASE("lemmatizer falls back to identity and rejects bad tables") {
  const Lemmatizer identity;
  CHECK(identity.lemma("unbekannt") == "unbekannt");

  testutil::TempFile bad("no_tab_here\n", ".tsv");
  CHECK_THROWS_AS(Lemmatizer::from_tsv(bad.path()), std::runtime_error);
  CHECK_THROWS_AS(Lemmatizer::from_tsv("/nonexistent/lemmas.tsv"), std::runtime_error);

  testutil::TempFile ok("# comment\nWindparks\tWindpark\n", ".tsv");
  const Lemmatizer lem = Lemmatizer::from_tsv(ok.path());
  CHECK(lem.lemma("windparks") == "windpark");  // normalized on load
}

TEST_CASE("corpus_vocabulary is the raw token set without stopwords") {
  Corpus corpus;
  corpus.documents = {{"a", "handel mit tabak"}, {"b", "tabak und zucht"}};
  const std::set<std::string> vocab = corpus_vocabulary(corpus, 2);
  CHECK(vocab == std::set<std::string>{"handel", "mit", "tabak", "und", "zucht"});
}

TEST_CASE("report text table lists methods and averages") {
  HashNgramEmbedder eval_embedder(32);
  const Lemmatizer identity;
  auto results = results_fixture();
  std::map<std::string, GoldSet> gold = {
      {"a", gold_of({"tabak"})},
      {"b", gold_of({"energie"})},
  };
  EvalOptions opts;
  opts.ks = {5, 10};
  const EvaluationReport report =
      evaluate_all(results, gold, vocab_fixture(), identity, eval_embedder, opts);
  const std::string table = report.text_table();
  CHECK(table.find("Exact Match") != std::string::npos);
  CHECK(table.find("Lemma Match") != std::string::npos);
  CHECK(table.find("Fuzzy Match") != std::string::npos);
  CHECK(table.find("CS Match") != std::string::npos);
  CHECK(table.find("Average Match") != std::string::npos);
  CHECK(table.find("P@5") != std::string::npos);
  CHECK(table.find("P@10") != std::string::npos);
}
