#include "cske/results_io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace cske {

void save_results(const std::string& path, const std::map<std::string, ClassResult>& results) {
  nlohmann::json doc = nlohmann::json::object();
  for (const auto& [class_id, result] : results) {
    nlohmann::json entry;
    entry["keywords"] = result.final_keywords;
    entry["scores"] = result.scores;
    entry["seed_history"] = result.seed_history;
    entry["seeds"] = result.final_seeds;
    doc[class_id] = std::move(entry);
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write results file: " + path);
  out << doc.dump(2) << "\n";
}

std::map<std::string, ClassResult> load_results(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open results file: " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(path + ": invalid JSON: " + e.what());
  }
  if (!doc.is_object()) throw std::runtime_error(path + ": expected a JSON object");

  std::map<std::string, ClassResult> results;
  for (const auto& [class_id, entry] : doc.items()) {
    ClassResult result;
    result.class_id = class_id;
    if (!entry.is_object() || !entry.contains("keywords")) {
      throw std::runtime_error(path + ": class '" + class_id + "': missing 'keywords'");
    }
    result.final_keywords = entry["keywords"].get<std::vector<std::string>>();
    if (entry.contains("scores")) {
      result.scores = entry["scores"].get<std::map<std::string, double>>();
    }
    if (entry.contains("seed_history")) {
      result.seed_history = entry["seed_history"].get<std::vector<std::vector<std::string>>>();
    }
    if (entry.contains("seeds")) {
      result.final_seeds = entry["seeds"].get<std::vector<std::string>>();
    }
    results.emplace(class_id, std::move(result));
  }
  return results;
}

}  // namespace cske
