#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace cske {

// mt19937_64 with hand-rolled bounded draws: std::uniform_int_distribution
// is implementation-defined, which would break cross-platform
// reproducibility of seed sampling and corpus shuffling.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound), rejection-sampled to avoid modulo bias.
  std::uint64_t next_below(std::uint64_t bound);

  // Partial Fisher-Yates: the first k positions of a shuffle of 0..n-1,
  // in draw order.
  std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k);

  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[next_below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace cske
