#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cayley/ring.hpp"
#include "cayley/table.hpp"

namespace cayley {

// Z/nZ under addition.
CayleyTable gen_cyclic(std::size_t n);
// (Z/2Z)^k; element bits are the coordinates.
CayleyTable gen_elementary_abelian(std::size_t k);
// x * y = y.
CayleyTable gen_right_zero(std::size_t n);
// The order-3 quasigroup with rows (a b c), (c a b), (b c a).
CayleyTable gen_quasigroup3();
// (x1, x2) encoded as x1 * |t2| + x2.
CayleyTable gen_direct_product(const CayleyTable& t1, const CayleyTable& t2);
// Symmetries of a regular m-gon, order 2m: r^i encoded as i, s r^i as m + i.
CayleyTable gen_dihedral(std::size_t m);
// x * y = x - y mod n; a quasigroup that is not associative for n >= 3.
CayleyTable gen_subtraction_quasigroup(std::size_t n);
// Z/nZ under multiplication (a commutative monoid).
CayleyTable gen_multiplicative_monoid(std::size_t n);
// x * y = max(x, y).
CayleyTable gen_max_semilattice(std::size_t n);
// Rows completed one at a time by randomized bipartite matching, so a Latin
// rectangle is always extended without dead ends.
CayleyTable gen_random_latin_square(std::size_t n, std::uint64_t seed);
// Relabels element x as perm[x] for a seeded random permutation.
CayleyTable gen_shuffled(const CayleyTable& t, std::uint64_t seed);
std::vector<Element> shuffle_permutation(std::size_t n, std::uint64_t seed);

RingTable gen_ring_modular(std::size_t n);
RingTable gen_ring_boolean_cube(std::size_t k);
// GF(4) = F2[x]/(x^2 + x + 1); a + b x encoded as a + 2b.
RingTable gen_ring_gf4();
// Z/pZ[x]/(x^2); a + b x encoded as a + p b.
RingTable gen_ring_dual(std::size_t p);
RingTable gen_ring_direct_product(const RingTable& r1, const RingTable& r2);

struct NamedTable {
  std::string name;
  CayleyTable table;
};

struct NamedRing {
  std::string name;
  RingTable ring;
};

struct NamedPair {
  std::string name;
  CayleyTable g;
  CayleyTable h;
};

// Groups of order <= max_n: cyclics, elementary abelians, products,
// dihedrals and shuffled copies.
std::vector<NamedTable> corpus_groups(std::size_t max_n = 16);
// Groups, semigroups, monoids, quasigroups and random Latin squares of order <= max_n.
std::vector<NamedTable> corpus_structures(std::size_t max_n = 10);
// Latin squares of order <= max_n.
std::vector<NamedTable> corpus_quasigroups(std::size_t max_n = 6);
// Quasigroup pairs of order <= 6, isomorphic and not.
std::vector<NamedPair> corpus_iso_pairs();
std::vector<NamedRing> corpus_rings(std::size_t max_n = 16);

// Table families by name, for the CLI: cyclic, elementary-abelian, right-zero,
// quasigroup3, dihedral, subtraction, multiplicative, semilattice, latin,
// and the rings ring-modular, ring-boolean, ring-gf4, ring-dual.
std::vector<std::string> family_names();
bool is_ring_family(const std::string& family);
CayleyTable generate_table(const std::string& family, std::size_t param, std::uint64_t seed);
RingTable generate_ring(const std::string& family, std::size_t param);

}  // namespace cayley
