#pragma once

#include <optional>

#include "cayley/product.hpp"
#include "cayley/ring.hpp"
#include "cayley/search.hpp"
#include "cayley/table.hpp"

namespace cayley {

// Least superset of S closed under the operation. The closure of the empty
// set is empty.
ElementSet closure(const CayleyTable& t, const ElementSet& s);

bool submagma_membership(const CayleyTable& t, Element h, const ElementSet& s);

// Semigroup membership as reachability: h is a product s_1 * ... * s_m with
// every s_i in S, i.e. reachable from S along edges x -> x * s. With
// `check_associative` set, a non-associative table is an InputError.
bool subsemigroup_membership(const CayleyTable& t, Element h, const ElementSet& s,
                             bool check_associative = true);

// Whether h lies in the cube of (s, p). Requires a Latin square; stops at the
// first cube index that produces h.
bool cube_membership(const CayleyTable& t, Element h, const ElementSequence& s,
                     const Parenthesization& p, std::size_t max_k = kDefaultCubeBudget);

struct BoundedMembership {
  Verdict verdict = Verdict::no;
  // Witness product when verdict == yes.
  std::optional<ElementSequence> sequence;
  std::optional<Parenthesization> tree;
  // Table probes (DP) or candidate trees evaluated (enumeration).
  std::uint64_t work = 0;
};

// Is h a parenthesized product of at most k elements of S with depth at most
// d? Solved exactly by dynamic programming over (leaf count, depth).
BoundedMembership bounded_subquasigroup_membership(const CayleyTable& t, Element h,
                                                   const ElementSet& s, std::size_t k,
                                                   std::size_t d);

// Same question answered by enumerating tree shapes and sequences in
// lexicographic order; `exhausted` once `max_candidates` evaluations are spent.
BoundedMembership bounded_subquasigroup_membership_enumerate(const CayleyTable& t, Element h,
                                                             const ElementSet& s, std::size_t k,
                                                             std::size_t d,
                                                             std::uint64_t max_candidates);

// Reachability from the identity in the Cayley graph with edges
// x -> x * g for g in S and g^-1. Requires a group table. S = {} gives false,
// matching the empty-closure convention.
bool subgroup_membership(const CayleyTable& t, Element h, const ElementSet& s);

// Least superset of S closed under both ring operations.
ElementSet subring_closure(const RingTable& r, const ElementSet& s);
bool subring_membership(const RingTable& r, Element h, const ElementSet& s);

// Vertices reachable from `one` along edges x -> x*a - b with
// a in S + {one} and b in {zero} + S + (-S).
ElementSet subring_graph_reachable(const RingTable& r, const ElementSet& s);
bool subring_membership_graph(const RingTable& r, Element h, const ElementSet& s);

// Closure of S + {one} under subtraction and multiplication (the subring
// with identity generated by S).
ElementSet unital_subring_closure(const RingTable& r, const ElementSet& s);

}  // namespace cayley
