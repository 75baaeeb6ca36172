#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <random>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

namespace cayley {

// Three-valued answer: `exhausted` means a budget ran out before a decision.
enum class Verdict { yes, no, exhausted };

std::string_view to_string(Verdict v);

// Limits shared by every search. Defaults are the documented desk-scale caps.
struct SearchConfig {
  unsigned threads = 1;
  // Upper bound on candidates (subsets, sequences, bijections) per search.
  std::uint64_t max_candidates = 200'000'000;
  // Largest k for which the 2^k cube indices may be enumerated.
  std::size_t cube_max_k = 24;
  // Magma/semigroup lower-rank search is exhaustive up to this order...
  std::size_t magma_exhaustive_max_n = 20;
  // ...and above it only subsets up to this size are tried.
  std::size_t magma_max_subset = 6;
  // All five rank variants enumerate every subset; cap the order.
  std::size_t variants_max_n = 12;
  // Cube-mode isomorphism checks 2^(3k) index triples.
  std::size_t iso_max_k = 8;
  // Brute-force isomorphism tries n! bijections.
  std::size_t brute_iso_max_n = 8;
  // Exhaustive cube-rank search is used up to this order; randomized above.
  std::size_t cube_rank_exhaustive_max_n = 16;

  // Defaults, with CAYLEYRANK_BUDGET (a decimal candidate count) applied.
  static SearchConfig from_environment();
};

// Seed of an independent stream derived from a base seed by fixed splitting.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

using Rng = std::mt19937_64;

// Uniform value in [0, bound) that does not depend on the standard library's
// distribution implementation.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

// Shuffle using uniform_below, so results are portable across toolchains.
template <class T>
void portable_shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[uniform_below(rng, i)]);
  }
}

// Binomial coefficient, saturating at uint64 max.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Lexicographic rank-th k-combination of {0..n-1}.
std::vector<std::uint32_t> unrank_combination(std::uint32_t n, std::uint32_t k,
                                              std::uint64_t rank);
// Advances to the next combination in lexicographic order; false at the end.
bool next_combination(std::vector<std::uint32_t>& c, std::uint32_t n);

// Smallest index i in [0, count) for which `probe(i)` yields a value, together
// with that value. Indices are handed out in fixed-size blocks; workers stop
// once they pass the best index found, so the answer never depends on
// `threads`. `probe` must be safe to call concurrently.
template <class Result, class Probe>
std::optional<std::pair<std::uint64_t, Result>> find_first(std::uint64_t count, unsigned threads,
                                                           Probe&& probe,
                                                           std::uint64_t block = 64) {
  if (count == 0) return std::nullopt;
  threads = std::max(1u, threads);
  std::atomic<std::uint64_t> next_block{0};
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  std::mutex mu;
  std::optional<std::pair<std::uint64_t, Result>> found;

  auto worker = [&] {
    for (;;) {
      const std::uint64_t start = next_block.fetch_add(1) * block;
      if (start >= count || start > best.load()) return;
      const std::uint64_t stop = std::min(count, start + block);
      for (std::uint64_t i = start; i < stop; ++i) {
        if (i > best.load()) return;
        if (std::optional<Result> r = probe(i)) {
          std::lock_guard lock(mu);
          if (!found || i < found->first) {
            found.emplace(i, std::move(*r));
            best.store(i);
          }
          return;
        }
      }
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return found;
}

// Runs body(i) for every i in [0, count), split across threads in contiguous
// ranges. `body` must only write state owned by index i.
template <class Body>
void parallel_for(std::uint64_t count, unsigned threads, Body&& body) {
  threads = std::max(1u, threads);
  if (threads == 1 || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t lo = t * chunk;
    const std::uint64_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (std::uint64_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace cayley
