#pragma once

#include <map>
#include <string>

#include "cske/pipeline.hpp"

namespace cske {

// Results file: JSON object mapping class-id -> {keywords, scores,
// seed_history, seeds}. Pretty-printed with sorted keys so identical
// runs produce byte-identical files.
void save_results(const std::string& path, const std::map<std::string, ClassResult>& results);

std::map<std::string, ClassResult> load_results(const std::string& path);

}  // namespace cske
