#include "cayley/search.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace cayley {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    case Verdict::exhausted:
      return "exhausted";
  }
  return "exhausted";
}

SearchConfig SearchConfig::from_environment() {
  SearchConfig cfg;
  if (const char* env = std::getenv("CAYLEYRANK_BUDGET")) {
    std::uint64_t value = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc() && ptr == end && value > 0) cfg.max_candidates = value;
  }
  return cfg;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 over (seed, stream)
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

std::vector<std::uint32_t> unrank_combination(std::uint32_t n, std::uint32_t k,
                                              std::uint64_t rank) {
  std::vector<std::uint32_t> c;
  c.reserve(k);
  std::uint32_t x = 0;
  for (std::uint32_t i = 0; i < k; ++i) {
    for (;; ++x) {
      // Number of combinations whose i-th entry is x.
      const std::uint64_t with_x = binomial(n - x - 1, k - i - 1);
      if (rank < with_x) break;
      rank -= with_x;
    }
    c.push_back(x++);
  }
  return c;
}

bool next_combination(std::vector<std::uint32_t>& c, std::uint32_t n) {
  const auto k = static_cast<std::uint32_t>(c.size());
  for (std::uint32_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::uint32_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace cayley
