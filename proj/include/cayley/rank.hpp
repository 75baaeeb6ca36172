#pragma once

#include <optional>
#include <string_view>
#include <variant>

#include "cayley/product.hpp"
#include "cayley/ring.hpp"
#include "cayley/search.hpp"
#include "cayley/table.hpp"

namespace cayley {

struct CubeWitness {
  ElementSequence sequence;
  Parenthesization tree;
};

enum class RankMethod { exhaustive, log_bounded, randomized };
std::string_view to_string(RankMethod m);

struct RankReport {
  // Smallest size found. When `exhausted` and nothing was found this is 0.
  std::size_t rank = 0;
  // Proven lower bound; equals `rank` when exact.
  std::size_t lower_bound = 0;
  std::variant<std::monostate, ElementSet, CubeWitness> witness;
  RankMethod method = RankMethod::exhaustive;
  std::uint64_t candidates_examined = 0;
  bool exact = false;
  bool exhausted = false;

  const ElementSet* generating_set() const { return std::get_if<ElementSet>(&witness); }
  const CubeWitness* cube_witness() const { return std::get_if<CubeWitness>(&witness); }
};

struct RankDecision {
  Verdict verdict = Verdict::no;
  std::optional<ElementSet> witness;
  std::uint64_t candidates_examined = 0;
};

bool generates(const CayleyTable& t, const ElementSet& s);

// Is there a set of at most k elements whose closure is everything? Subsets
// are tried by size, then lexicographically; the first hit is the witness.
// Group tables only search up to the log bound. Other tables are searched
// exhaustively up to SearchConfig::magma_exhaustive_max_n elements and only
// up to magma_max_subset generators beyond that.
RankDecision rank_decision(const CayleyTable& t, std::size_t k, const SearchConfig& cfg = {});

// Minimum generating-set size of a group, searching sizes up to
// max(1, ceil(log2 n)). Throws InputError for non-group tables.
RankReport group_rank(const CayleyTable& t, const SearchConfig& cfg = {});

// Minimum generating-set size of any table (group_rank for groups).
RankReport lower_rank(const CayleyTable& t, const SearchConfig& cfg = {});

struct CubeRankOptions {
  // Longest sequence to try; 0 means n + 1 (always enough for a quasigroup).
  std::size_t max_len = 0;
  // Random sequences per length when the search is randomized.
  std::uint64_t tries = 1000;
  std::uint64_t seed = 0;
};

// Minimum length of a cube generating sequence under the balanced
// parenthesization. Exhaustive up to SearchConfig::cube_rank_exhaustive_max_n
// elements, randomized (upper bound only) above that.
RankReport quasigroup_cube_rank(const CayleyTable& t, const CubeRankOptions& opts = {},
                                const SearchConfig& cfg = {});

// Is the cube rank at most k?
Verdict quasigroup_rank_decision(const CayleyTable& t, std::size_t k,
                                 const CubeRankOptions& opts = {}, const SearchConfig& cfg = {});

// Is there S with |S| <= k and S subset of T subset of <S>?
RankDecision generalized_rank(const CayleyTable& t, const ElementSet& target, std::size_t k,
                              const SearchConfig& cfg = {});

// Rank of the submagma generated by S (0 for the empty submagma).
RankReport submagma_rank(const CayleyTable& t, const ElementSet& s, const SearchConfig& cfg = {});

// Compares submagma_rank(S) with submagma_rank(S + {h}).
bool membership_via_rank(const CayleyTable& t, Element h, const ElementSet& s,
                         const SearchConfig& cfg = {});

// Minimum size of S whose closure under both operations is the whole ring.
// Sizes up to max(1, ceil(log2 n)) suffice because an additive generating set
// already generates the ring.
RankReport ring_rank(const RingTable& r, const SearchConfig& cfg = {});

struct RingRankSummary {
  RankReport ring;
  RankReport additive_group;
  RankReport multiplicative_monoid;
};
RingRankSummary ring_rank_summary(const RingTable& r, const SearchConfig& cfg = {});

// Re-checks a report's witness against the structure: the set must generate
// (or the cube must cover) everything and have the reported size.
bool verify_witness(const CayleyTable& t, const RankReport& report);
bool verify_ring_witness(const RingTable& r, const RankReport& report);

}  // namespace cayley
