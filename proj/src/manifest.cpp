#include "cske/manifest.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <stdexcept>
#include <vector>

#include "cske/embedding.hpp"

namespace cske {

std::uint64_t fnv1a64_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file for digest: " + path);
  std::uint64_t h = 14695981039346656037ULL;
  std::vector<char> buf(1 << 16);
  while (in) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    const std::streamsize got = in.gcount();
    for (std::streamsize i = 0; i < got; ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 1099511628211ULL;
    }
  }
  return h;
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

RunManifest RunManifest::create(const std::string& command, nlohmann::json config_snapshot) {
  RunManifest m;
  m.command = command;
  m.config = std::move(config_snapshot);
  m.created_at = utc_timestamp();
  return m;
}

namespace {

std::string hex64(std::uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof(buf), "0x%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

void RunManifest::add_input(const std::string& name, const std::string& path) {
  inputs[name] = {{"path", path}, {"fnv1a64", hex64(fnv1a64_file(path))}};
}

void RunManifest::add_input_digest(const std::string& name, const std::string& label,
                                   std::uint64_t digest) {
  inputs[name] = {{"path", label}, {"fnv1a64", hex64(digest)}};
}

void RunManifest::add_output(const std::string& name, const std::string& path) {
  outputs[name] = path;
}

nlohmann::json RunManifest::to_json() const {
  nlohmann::json doc;
  doc["tool"] = "cske";
  doc["version"] = kToolVersion;
  doc["command"] = command;
  doc["config"] = config;
  doc["created_at"] = created_at;
  doc["inputs"] = inputs;
  doc["outputs"] = outputs;
  return doc;
}

void RunManifest::write(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write manifest: " + path);
  out << to_json().dump(2) << "\n";
  out.flush();
  if (!out) throw std::runtime_error("failed writing manifest: " + path);
}

}  // namespace cske
