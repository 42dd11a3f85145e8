// Compares the OpenMP kernels against their serial reference on a
// synthetic vocabulary and verifies both paths agree bitwise.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cske/embedding.hpp"
#include "cske/kernels.hpp"
#include "cske/rng.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<std::string> synthetic_terms(std::size_t count, cske::DeterministicRng& rng) {
  static constexpr const char* kStems[] = {"energie", "strom",  "zucht",   "anbau",
                                           "immobil", "handel", "technik", "wirtschaft"};
  std::vector<std::string> terms;
  terms.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::string term = kStems[rng.next_below(std::size(kStems))];
    const std::size_t extra = 3 + rng.next_below(10);
    for (std::size_t j = 0; j < extra; ++j) {
      term.push_back(static_cast<char>('a' + rng.next_below(26)));
    }
    terms.push_back(std::move(term));
  }
  return terms;
}

bool identical(const std::vector<cske::kernels::ScoreTriple>& a,
               const std::vector<cske::kernels::ScoreTriple>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].avg != b[i].avg || a[i].max != b[i].max || a[i].final != b[i].final) {
      return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n_terms = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20000;
  const std::size_t n_seeds = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 10;
  const std::size_t dim = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 256;

#ifdef _OPENMP
  std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
  std::printf("openmp: disabled at build time\n");
#endif
  std::printf("terms=%zu seeds=%zu dim=%zu\n\n", n_terms, n_seeds, dim);

  cske::DeterministicRng rng(7);
  const std::vector<std::string> terms = synthetic_terms(n_terms, rng);
  const std::vector<std::string> seed_terms = synthetic_terms(n_seeds, rng);

  // Separate embedders per path so the cache does not hide hashing cost.
  cske::HashNgramEmbedder embedder_serial(dim);
  cske::HashNgramEmbedder embedder_omp(dim);

  auto t0 = Clock::now();
  const auto vecs_serial = cske::kernels::serial::embed_terms(embedder_serial, terms);
  const double embed_serial_ms = ms_since(t0);

  t0 = Clock::now();
  const auto vecs_omp = cske::kernels::embed_terms(embedder_omp, terms);
  const double embed_omp_ms = ms_since(t0);

  const auto seed_vecs = cske::kernels::serial::embed_terms(embedder_serial, seed_terms);

  t0 = Clock::now();
  const auto scores_serial = cske::kernels::serial::score_against_seeds(vecs_serial, seed_vecs);
  const double score_serial_ms = ms_since(t0);

  t0 = Clock::now();
  const auto scores_omp = cske::kernels::score_against_seeds(vecs_omp, seed_vecs);
  const double score_omp_ms = ms_since(t0);

  std::printf("%-22s %12s %12s %9s\n", "kernel", "serial (ms)", "openmp (ms)", "speedup");
  std::printf("%-22s %12.2f %12.2f %8.2fx\n", "embed_terms", embed_serial_ms, embed_omp_ms,
              embed_serial_ms / embed_omp_ms);
  std::printf("%-22s %12.2f %12.2f %8.2fx\n", "score_against_seeds", score_serial_ms,
              score_omp_ms, score_serial_ms / score_omp_ms);

  if (!identical(scores_serial, scores_omp)) {
    std::printf("\nMISMATCH: openmp scores differ from serial reference\n");
    return 1;
  }
  std::printf("\nserial and openmp outputs identical\n");
  return 0;
}
