#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "cayley/table.hpp"

namespace cayley {

enum class Kind { magma, semigroup, monoid, quasigroup, loop, group };

std::string_view to_string(Kind k);
std::optional<Kind> parse_kind(std::string_view name);

struct StructureKind {
  bool is_associative = false;
  bool is_latin_square = false;
  bool is_commutative = false;
  std::vector<Element> left_identities;
  std::vector<Element> right_identities;
  std::optional<Element> identity;  // two-sided
  bool has_inverses = false;        // every element has a two-sided inverse w.r.t. `identity`
  Kind kind = Kind::magma;

  bool has_left_identity() const { return !left_identities.empty(); }
  bool has_right_identity() const { return !right_identities.empty(); }
  bool has_two_sided_identity() const { return identity.has_value(); }
};

bool is_latin_square(const CayleyTable& t);

// Light's test, run as the plain check of all n^3 triples.
bool is_associative(const CayleyTable& t);

bool is_commutative(const CayleyTable& t);

std::optional<Element> two_sided_identity(const CayleyTable& t);

StructureKind classify(const CayleyTable& t);

inline bool is_group(const CayleyTable& t) {
  return is_latin_square(t) && is_associative(t);
}

}  // namespace cayley
