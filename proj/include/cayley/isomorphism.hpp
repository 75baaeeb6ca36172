#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "cayley/product.hpp"
#include "cayley/rank.hpp"
#include "cayley/search.hpp"
#include "cayley/table.hpp"

namespace cayley {

enum class IsoResult { isomorphic, not_isomorphic, exhausted };
std::string_view to_string(IsoResult r);

enum class IsoMode { cube, brute };
std::optional<IsoMode> parse_iso_mode(std::string_view name);

struct IsoCertificate {
  ElementSequence g;
  ElementSequence h;
  Parenthesization tree;
};

struct IsoVerdict {
  IsoResult result = IsoResult::exhausted;
  // bijection[x] is the image in H of x in G.
  std::optional<std::vector<Element>> bijection;
  std::optional<IsoCertificate> certificate;
  std::uint64_t candidates_examined = 0;
  // Set when an invariant (order, associativity, identities) already differs.
  std::optional<std::string> rejected_by;
};

// Random sequences of the given length under the balanced parenthesization;
// the first (by trial index) whose cube is everything. Requires a Latin square.
std::optional<CubeWitness> find_cube_generating_sequence(const CayleyTable& t, std::size_t length,
                                                         std::uint64_t tries, std::uint64_t seed,
                                                         const SearchConfig& cfg = {});

// Every sequence of the given length in lexicographic order, up to
// cfg.max_candidates of them.
std::optional<CubeWitness> find_cube_generating_sequence_exhaustive(const CayleyTable& t,
                                                                    std::size_t length,
                                                                    const SearchConfig& cfg = {});

bool product_equality(const CayleyTable& t, const ElementSequence& s1, const Parenthesization& p1,
                      const ElementSequence& s2, const Parenthesization& p2);

// phi(x * y) = phi(x) * phi(y) for all n^2 pairs, and phi is a bijection.
bool is_isomorphism(const CayleyTable& g, const CayleyTable& h, const std::vector<Element>& phi);

// Tries all n! bijections in lexicographic order. Throws InputError when n
// exceeds cfg.brute_iso_max_n.
IsoVerdict brute_force_isomorphic(const CayleyTable& g, const CayleyTable& h,
                                  const SearchConfig& cfg = {});

struct IsoOptions {
  IsoMode mode = IsoMode::cube;
  // Image sequences to try; 0 means cfg.max_candidates. All of H^(k+1) is
  // enumerated when it fits, otherwise this many are sampled.
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  // Random attempts per length when searching for G's cube sequence.
  std::uint64_t g_tries = 1000;
};

// Both tables must be Latin squares. Cube mode fixes one cube generating
// sequence g of G and looks for h in H^(k+1) that induces an isomorphism.
// Throws BudgetError when g needs more than cfg.iso_max_k optional positions.
IsoVerdict quasigroup_isomorphic(const CayleyTable& g, const CayleyTable& h,
                                 const IsoOptions& opts = {}, const SearchConfig& cfg = {});

}  // namespace cayley
