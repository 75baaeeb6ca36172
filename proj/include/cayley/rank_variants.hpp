#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "cayley/search.hpp"
#include "cayley/table.hpp"

namespace cayley {

enum class RankVariant { large, upper, intermediate, lower, small };

std::string_view to_string(RankVariant v);
std::optional<RankVariant> parse_rank_variant(std::string_view name);

// No element of S lies in the closure of the others. Vacuously true for {}.
bool is_independent(const CayleyTable& t, const ElementSet& s);

struct VariantValue {
  std::size_t value = 0;
  bool exhausted = false;
  // Bracket when exhausted; both equal `value` otherwise.
  std::size_t low = 0;
  std::size_t high = 0;
};

// Exact value by enumerating every subset (n <= SearchConfig::variants_max_n).
// small is 0 when not even singletons are all independent; the lower variant
// is delegated to lower_rank and is not subject to the subset cap.
VariantValue rank_variant(const CayleyTable& t, RankVariant v, const SearchConfig& cfg = {});

struct RankChain {
  std::size_t small = 0;
  std::size_t lower = 0;
  std::size_t intermediate = 0;
  std::size_t upper = 0;
  std::size_t large = 0;
  // small <= lower <= intermediate <= upper <= large
  bool holds = false;
};

// All five values from one shared table of subset closures. Throws
// BudgetError when n exceeds SearchConfig::variants_max_n.
RankChain check_chain(const CayleyTable& t, const SearchConfig& cfg = {});

struct IndependenceBound {
  std::size_t upper_rank = 0;
  // max(1, ceil(log2 n)): the empty closure makes {e} independent, so the
  // trivial group has one independent singleton.
  std::size_t bound = 0;
  bool holds = false;
};

// Largest independent subset of a group against the logarithmic bound.
IndependenceBound max_independent_bound_check(const CayleyTable& t, const SearchConfig& cfg = {});

}  // namespace cayley
