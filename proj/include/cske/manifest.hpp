#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

namespace cske {

inline constexpr const char* kToolVersion = "0.1.0";

// Reproducibility record written before any result file: config
// snapshot, input digests, tool version and timestamps. Two runs with
// identical inputs differ only in created_at.
struct RunManifest {
  std::string command;
  nlohmann::json config;
  std::map<std::string, nlohmann::json> inputs;   // name -> {path, fnv1a64}
  std::map<std::string, std::string> outputs;     // name -> path
  std::string created_at;

  static RunManifest create(const std::string& command, nlohmann::json config_snapshot);

  void add_input(const std::string& name, const std::string& path);
  void add_input_digest(const std::string& name, const std::string& label,
                        std::uint64_t digest);
  void add_output(const std::string& name, const std::string& path);

  nlohmann::json to_json() const;
  void write(const std::string& path) const;
};

std::uint64_t fnv1a64_file(const std::string& path);
std::string utc_timestamp();

}  // namespace cske
