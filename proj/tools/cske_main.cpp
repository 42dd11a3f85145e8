#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cske/corpus.hpp"
#include "cske/eval.hpp"
#include "cske/kernels.hpp"
#include "cske/manifest.hpp"
#include "cske/pipeline.hpp"
#include "cske/results_io.hpp"
#include "cske/seeds.hpp"

namespace {

struct EmbedderFlags {
  std::string backend = "hash-ngram";
  std::size_t dim = 256;
  std::size_t ngram = 3;
  std::string model_path;

  void attach(CLI::App* cmd) {
    cmd->add_option("--embedder", backend, "Embedder backend")
        ->check(CLI::IsMember({"hash-ngram", "transformer-artifact"}))
        ->capture_default_str();
    cmd->add_option("--dim", dim, "Embedding dimension (hash-ngram)")
        ->capture_default_str();
    cmd->add_option("--ngram", ngram, "Character n-gram size (hash-ngram)")
        ->capture_default_str();
    cmd->add_option("--model-path", model_path, "Model artifact directory")
        ->envname("CSKE_MODEL_DIR");
  }

  cske::EmbedderSpec spec() const {
    cske::EmbedderSpec s;
    s.backend = cske::parse_backend(backend);
    s.dim = dim;
    s.ngram = ngram;
    s.model_path = model_path;
    return s;
  }
};

std::string default_manifest_path(const std::string& output) {
  return output + ".manifest.json";
}

nlohmann::json embedder_json(const cske::EmbedderSpec& spec) {
  nlohmann::json j;
  j["backend"] = cske::backend_name(spec.backend);
  j["dim"] = spec.dim;
  j["ngram"] = spec.ngram;
  j["model_path"] = spec.model_path;
  j["fingerprint"] = spec.fingerprint();
  return j;
}

struct PrepareSeedsArgs {
  std::string pool_path;
  std::string seeds_out;
  std::string gold_out;
  std::string manifest_path;
  std::size_t per_class = 10;
  std::uint64_t rng_seed = 0;
  bool no_transliterate = false;
};

int run_prepare_seeds(const PrepareSeedsArgs& args) {
  cske::NormalizeOptions norm;
  norm.transliterate = !args.no_transliterate;

  const auto pool = cske::load_keyword_file(args.pool_path);
  const cske::SeedSplit split =
      cske::prepare_seeds(pool, args.per_class, args.rng_seed, norm);

  nlohmann::json config;
  config["per_class"] = args.per_class;
  config["rng_seed"] = args.rng_seed;
  config["transliterate"] = !args.no_transliterate;
  cske::RunManifest manifest = cske::RunManifest::create("prepare-seeds", config);
  manifest.add_input("pool", args.pool_path);
  manifest.add_output("seeds", args.seeds_out);
  manifest.add_output("gold", args.gold_out);
  const std::string manifest_path = args.manifest_path.empty()
                                        ? default_manifest_path(args.seeds_out)
                                        : args.manifest_path;
  manifest.write(manifest_path);

  std::map<std::string, std::vector<std::string>> seeds_doc;
  std::map<std::string, std::vector<std::string>> gold_doc;
  for (const auto& [class_id, seeds] : split.seeds) seeds_doc[class_id] = seeds.original;
  for (const auto& [class_id, gold] : split.gold) gold_doc[class_id] = gold.keywords;
  cske::save_keyword_file(args.seeds_out, seeds_doc);
  cske::save_keyword_file(args.gold_out, gold_doc);

  std::cerr << "prepare-seeds: " << split.seeds.size() << " classes, " << args.per_class
            << " seeds each -> " << args.seeds_out << ", " << args.gold_out << "\n";
  return 0;
}

struct ExtractArgs {
  std::string corpus_path;
  std::string seeds_path;
  std::string output;
  std::string manifest_path;
  cske::PipelineConfig config;
  EmbedderFlags embedder;
  std::uint64_t shuffle_seed = 0;
  bool shuffle_given = false;
  bool no_transliterate = false;
};

int run_extract(ExtractArgs& args) {
  args.config.embedder = args.embedder.spec();
  args.config.transliterate = !args.no_transliterate;
  if (args.shuffle_given) args.config.shuffle_seed = args.shuffle_seed;
  args.config.validate();

  cske::NormalizeOptions norm;
  norm.transliterate = args.config.transliterate;

  const cske::Corpus corpus = cske::load_corpus(args.corpus_path, norm);
  const auto class_seeds = cske::load_seed_sets(args.seeds_path, norm);
  if (class_seeds.empty()) {
    throw std::runtime_error(args.seeds_path + ": no classes in seed file");
  }

  nlohmann::json config;
  config["n_iterations"] = args.config.n_iterations;
  config["percentile_newseed"] = args.config.percentile_newseed;
  config["number_newseed"] = args.config.number_newseed;
  config["topk"] = args.config.topk;
  config["top_n_per_doc"] = args.config.top_n_per_doc;
  config["min_token_len"] = args.config.min_token_len;
  config["seed_weight"] = args.config.seed_weight;
  config["seed_head_original_only"] = args.config.seed_head_original_only;
  config["transliterate"] = args.config.transliterate;
  config["embedder"] = embedder_json(args.config.embedder);
  config["stopwords"] = args.config.stopword_path.empty() ? "<builtin:de>"
                                                          : args.config.stopword_path;
  if (args.config.shuffle_seed) {
    config["shuffle_seed"] = *args.config.shuffle_seed;
  } else {
    config["shuffle_seed"] = nullptr;
  }
  config["jobs"] = args.config.jobs;

  cske::RunManifest manifest = cske::RunManifest::create("extract", config);
  manifest.add_input("corpus", args.corpus_path);
  manifest.add_input("seeds", args.seeds_path);
  if (!args.config.stopword_path.empty()) {
    manifest.add_input("stopwords", args.config.stopword_path);
  }
  manifest.add_output("results", args.output);
  const std::string manifest_path = args.manifest_path.empty()
                                        ? default_manifest_path(args.output)
                                        : args.manifest_path;
  // Manifest first: a crash mid-run still leaves an auditable record.
  manifest.write(manifest_path);

  const auto results = cske::run_pipeline(corpus, class_seeds, args.config);
  cske::save_results(args.output, results);

  std::cerr << "extract: " << results.size() << " classes over " << corpus.size()
            << " documents -> " << args.output << "\n";
  return 0;
}

struct EvaluateArgs {
  std::string results_path;
  std::string gold_path;
  std::string corpus_path;
  std::string lemma_path;
  std::string output;
  std::string manifest_path;
  std::string extract_manifest;
  std::string table_path;
  std::vector<std::size_t> ks = {10, 25, 50, 100};
  EmbedderFlags embedder;
  std::size_t min_token_len = 2;
  bool exclude_seeds = false;
  bool allow_same_embedder = false;
  bool print_table = false;
  bool no_transliterate = false;
  int jobs = 0;
};

// The eval embedder must differ from the extraction embedder (the
// extraction manifest records its fingerprint) unless explicitly waived.
void check_embedder_identity(const EvaluateArgs& args, const cske::EmbedderSpec& eval_spec) {
  const std::string manifest_path = args.extract_manifest.empty()
                                        ? default_manifest_path(args.results_path)
                                        : args.extract_manifest;
  std::ifstream in(manifest_path);
  if (!in) {
    if (args.allow_same_embedder) return;
    throw std::runtime_error(
        "cannot open extraction manifest '" + manifest_path +
        "' to verify the eval embedder differs from the extraction embedder; "
        "pass --extract-manifest or override with --allow-same-embedder");
  }
  nlohmann::json manifest = nlohmann::json::parse(in, nullptr, false);
  if (manifest.is_discarded()) {
    throw std::runtime_error(manifest_path + ": invalid manifest JSON");
  }
  const auto& config = manifest.value("config", nlohmann::json::object());
  const auto& embedder = config.value("embedder", nlohmann::json::object());
  const std::string extraction_fp = embedder.value("fingerprint", "");
  if (!extraction_fp.empty() && extraction_fp == eval_spec.fingerprint() &&
      !args.allow_same_embedder) {
    throw std::runtime_error(
        "eval embedder '" + eval_spec.fingerprint() +
        "' is identical to the extraction embedder; evaluation must use a different "
        "model (override with --allow-same-embedder)");
  }
}

int run_evaluate(const EvaluateArgs& args) {
  const cske::EmbedderSpec eval_spec = args.embedder.spec();
  check_embedder_identity(args, eval_spec);
  cske::kernels::set_jobs(args.jobs);

  cske::NormalizeOptions norm;
  norm.transliterate = !args.no_transliterate;

  const auto results = cske::load_results(args.results_path);
  const auto gold = cske::load_gold_sets(args.gold_path, norm);
  const cske::Corpus corpus = cske::load_corpus(args.corpus_path, norm);
  const std::set<std::string> vocab = cske::corpus_vocabulary(corpus, args.min_token_len);
  const cske::Lemmatizer lemmatizer = args.lemma_path.empty()
                                          ? cske::Lemmatizer()
                                          : cske::Lemmatizer::from_tsv(args.lemma_path);
  const std::unique_ptr<cske::Embedder> eval_embedder = cske::make_embedder(eval_spec);

  nlohmann::json config;
  config["ks"] = args.ks;
  config["exclude_seeds"] = args.exclude_seeds;
  config["min_token_len"] = args.min_token_len;
  config["eval_embedder"] = embedder_json(eval_spec);
  config["lemmas"] = args.lemma_path.empty() ? "<identity>" : args.lemma_path;
  config["transliterate"] = !args.no_transliterate;
  cske::RunManifest manifest = cske::RunManifest::create("evaluate", config);
  manifest.add_input("results", args.results_path);
  manifest.add_input("gold", args.gold_path);
  manifest.add_input("corpus", args.corpus_path);
  if (!args.lemma_path.empty()) manifest.add_input("lemmas", args.lemma_path);
  if (!args.output.empty()) manifest.add_output("report", args.output);

  cske::EvalOptions opts;
  opts.ks = args.ks;
  opts.exclude_seeds = args.exclude_seeds;

  if (!args.output.empty()) {
    const std::string manifest_path = args.manifest_path.empty()
                                          ? default_manifest_path(args.output)
                                          : args.manifest_path;
    manifest.write(manifest_path);
  }

  const cske::EvaluationReport report =
      cske::evaluate_all(results, gold, vocab, lemmatizer, *eval_embedder, opts);

  nlohmann::json doc;
  doc["ks"] = report.ks;
  nlohmann::json cells = nlohmann::json::object();
  for (const auto& [class_id, class_cells] : report.cells) {
    nlohmann::json methods = nlohmann::json::object();
    for (const auto& [method, by_k] : class_cells) {
      nlohmann::json per_k = nlohmann::json::object();
      for (const auto& [k, score] : by_k) per_k[std::to_string(k)] = score;
      methods[std::string(cske::method_name(method))] = std::move(per_k);
    }
    cells[class_id] = std::move(methods);
  }
  doc["cells"] = std::move(cells);
  nlohmann::json averages = nlohmann::json::object();
  for (const auto& [method, by_k] : report.average_over_classes) {
    nlohmann::json per_k = nlohmann::json::object();
    for (const auto& [k, score] : by_k) per_k[std::to_string(k)] = score;
    averages[std::string(cske::method_name(method))] = std::move(per_k);
  }
  doc["averages"] = std::move(averages);
  nlohmann::json method_avg = nlohmann::json::object();
  for (const auto& [method, score] : report.average_over_k) {
    method_avg[std::string(cske::method_name(method))] = score;
  }
  doc["method_average"] = std::move(method_avg);
  nlohmann::json avg_match = nlohmann::json::object();
  for (const auto& [k, score] : report.average_match) {
    avg_match[std::to_string(k)] = score;
  }
  avg_match["overall"] = report.average_match_overall;
  doc["average_match"] = std::move(avg_match);

  if (!args.output.empty()) {
    std::ofstream out(args.output);
    if (!out) throw std::runtime_error("cannot write report: " + args.output);
    out << doc.dump(2) << "\n";
  } else {
    std::cout << doc.dump(2) << "\n";
  }

  if (!args.table_path.empty()) {
    std::ofstream table(args.table_path);
    if (!table) throw std::runtime_error("cannot write table: " + args.table_path);
    table << report.text_table();
  }
  if (args.print_table) std::cout << report.text_table();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Class-specific keyword extraction"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from an INI/TOML file");

  PrepareSeedsArgs prep;
  CLI::App* prep_cmd = app.add_subcommand(
      "prepare-seeds", "Sample per-class seed keywords from a gold pool");
  prep_cmd->add_option("--pool", prep.pool_path, "Gold pool JSON (class -> keywords)")
      ->required()
      ->check(CLI::ExistingFile);
  prep_cmd->add_option("--per-class", prep.per_class, "Seeds per class")
      ->capture_default_str();
  prep_cmd->add_option("--rng-seed", prep.rng_seed, "Sampling seed")->capture_default_str();
  prep_cmd->add_option("--seeds-out", prep.seeds_out, "Seed file to write")->required();
  prep_cmd->add_option("--gold-out", prep.gold_out, "Evaluation gold file to write")
      ->required();
  prep_cmd->add_option("--manifest", prep.manifest_path,
                       "Manifest path (default: <seeds-out>.manifest.json)");
  prep_cmd->add_flag("--no-transliterate", prep.no_transliterate,
                     "Keep umlauts instead of ae/oe/ue/ss");

  ExtractArgs ext;
  CLI::App* ext_cmd =
      app.add_subcommand("extract", "Run the iterative keyword extraction pipeline");
  ext_cmd->add_option("--corpus", ext.corpus_path, "Corpus JSONL file")
      ->required()
      ->check(CLI::ExistingFile);
  ext_cmd->add_option("--seeds", ext.seeds_path, "Seed file (class -> keywords)")
      ->required()
      ->check(CLI::ExistingFile);
  ext_cmd->add_option("--output", ext.output, "Results JSON to write")->required();
  ext_cmd->add_option("--manifest", ext.manifest_path,
                      "Manifest path (default: <output>.manifest.json)");
  ext_cmd->add_option("--n-iterations", ext.config.n_iterations, "Number of batches")
      ->capture_default_str();
  ext_cmd->add_option("--percentile-newseed", ext.config.percentile_newseed,
                      "Score percentile new seeds must clear")
      ->capture_default_str();
  ext_cmd->add_option("--number-newseed", ext.config.number_newseed,
                      "Max seeds added per iteration (0 disables)")
      ->capture_default_str();
  ext_cmd->add_option("--topk", ext.config.topk, "Keywords returned per class")
      ->capture_default_str();
  ext_cmd->add_option("--top-n-per-doc", ext.config.top_n_per_doc,
                      "Guided candidates kept per document")
      ->capture_default_str();
  ext_cmd->add_option("--min-token-len", ext.config.min_token_len,
                      "Minimum token length in codepoints")
      ->capture_default_str();
  ext_cmd->add_option("--stopwords", ext.config.stopword_path,
                      "Stopword file (default: built-in German list)")
      ->check(CLI::ExistingFile);
  ext_cmd->add_option("--seed-weight", ext.config.seed_weight,
                      "Seed-centroid weight in guided ranking")
      ->capture_default_str();
  ext_cmd
      ->add_option("--shuffle-seed", ext.shuffle_seed,
                   "Shuffle the corpus before batching with this RNG seed")
      ->trigger_on_parse()
      ->each([&ext](const std::string&) { ext.shuffle_given = true; });
  ext_cmd->add_flag("--seed-head-original-only", ext.config.seed_head_original_only,
                    "Head the output with original seeds only");
  ext_cmd->add_flag("--no-transliterate", ext.no_transliterate,
                    "Keep umlauts instead of ae/oe/ue/ss");
  ext_cmd->add_option("--jobs", ext.config.jobs, "Worker cap (0 = all cores)")
      ->capture_default_str();
  ext.embedder.attach(ext_cmd);

  EvaluateArgs ev;
  CLI::App* ev_cmd =
      app.add_subcommand("evaluate", "Score extracted keywords against a gold set");
  ev_cmd->add_option("--results", ev.results_path, "Results JSON from extract")
      ->required()
      ->check(CLI::ExistingFile);
  ev_cmd->add_option("--gold", ev.gold_path, "Gold keyword JSON")
      ->required()
      ->check(CLI::ExistingFile);
  ev_cmd->add_option("--corpus", ev.corpus_path, "Corpus JSONL (for gold filtering)")
      ->required()
      ->check(CLI::ExistingFile);
  ev_cmd->add_option("--lemmas", ev.lemma_path, "Lemma table TSV (surface<TAB>lemma)")
      ->check(CLI::ExistingFile);
  ev_cmd->add_option("--ks", ev.ks, "Precision@K cutoffs")
      ->delimiter(',')
      ->capture_default_str();
  ev_cmd->add_option("--output", ev.output, "Report JSON to write (default: stdout)");
  ev_cmd->add_option("--manifest", ev.manifest_path,
                     "Manifest path (default: <output>.manifest.json)");
  ev_cmd->add_option("--extract-manifest", ev.extract_manifest,
                     "Extraction manifest (default: <results>.manifest.json)");
  ev_cmd->add_option("--table", ev.table_path, "Write an aligned text table here");
  ev_cmd->add_flag("--print-table", ev.print_table, "Print the text table to stdout");
  ev_cmd->add_flag("--exclude-seeds", ev.exclude_seeds,
                   "Skip the seed head of each keyword list");
  ev_cmd->add_flag("--allow-same-embedder", ev.allow_same_embedder,
                   "Permit evaluating with the extraction embedder");
  ev_cmd->add_option("--min-token-len", ev.min_token_len,
                     "Minimum token length for the corpus vocabulary")
      ->capture_default_str();
  ev_cmd->add_flag("--no-transliterate", ev.no_transliterate,
                   "Keep umlauts instead of ae/oe/ue/ss");
  ev_cmd->add_option("--jobs", ev.jobs, "Worker cap (0 = all cores)")
      ->capture_default_str();
  ev.embedder.attach(ev_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (prep_cmd->parsed()) return run_prepare_seeds(prep);
    if (ext_cmd->parsed()) return run_extract(ext);
    if (ev_cmd->parsed()) return run_evaluate(ev);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
