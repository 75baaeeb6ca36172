#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/table.hpp"

namespace cayley {

// Positions 0..k of a product g_0 * ... * g_k.
using ElementSequence = std::vector<Element>;

// Binary tree whose leaves are the positions 0..k in left-to-right order.
//
// Nodes are stored in post-order, so every child precedes its parent and the
// root is the last node. Leaf positions are implied by the in-order walk.
class Parenthesization {
 public:
  struct Node {
    std::int32_t left = -1;   // -1 for a leaf
    std::int32_t right = -1;
    std::uint32_t position = 0;  // meaningful for leaves only
    bool is_leaf() const noexcept { return left < 0; }
  };

  // A single leaf (one-element product).
  Parenthesization();

  static Parenthesization join(const Parenthesization& lhs, const Parenthesization& rhs);

  // Depth ceil(log2 k) tree on k leaves; odd splits put the extra leaf left.
  static Parenthesization balanced(std::size_t leaves);
  static Parenthesization left_comb(std::size_t leaves);
  static Parenthesization right_comb(std::size_t leaves);

  // Parses nested pairs of positions, e.g. "(0 ((1 2) 3))"; a bare "0" is a
  // single leaf. Leaves must read 0, 1, ..., k from left to right.
  static Parenthesization parse(std::string_view text);

  std::size_t leaf_count() const noexcept { return leaves_; }
  std::size_t depth() const noexcept { return depth_; }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  std::string to_string() const;

  friend bool operator==(const Parenthesization& a, const Parenthesization& b) {
    return a.to_string() == b.to_string();
  }

 private:
  std::vector<Node> nodes_;
  std::size_t leaves_ = 1;
  std::size_t depth_ = 0;
};

// Every parenthesization with exactly `leaves` leaves and depth <= max_depth,
// in a fixed deterministic order (by left subtree size, then recursively).
std::vector<Parenthesization> all_parenthesizations(std::size_t leaves, std::size_t max_depth);

// Bits (eps_1, ..., eps_k); position 0 carries no bit.
class CubeIndex {
 public:
  CubeIndex(std::size_t k, std::uint64_t bits);
  explicit CubeIndex(const std::vector<bool>& eps);

  static CubeIndex all_zeros(std::size_t k) { return CubeIndex(k, 0); }
  static CubeIndex all_ones(std::size_t k);

  std::size_t size() const noexcept { return k_; }
  std::uint64_t bits() const noexcept { return bits_; }
  // eps_i for position i in 1..k.
  bool keeps(std::size_t position) const noexcept {
    return position == 0 || ((bits_ >> (position - 1)) & 1u);
  }

 private:
  std::size_t k_;
  std::uint64_t bits_;
};

Element product(const CayleyTable& t, Element x, Element y);

Element eval_parenthesized(const CayleyTable& t, const ElementSequence& s,
                           const Parenthesization& p);

// Parenthesized product with every position i >= 1 whose bit is 0 removed.
// A node with one empty side takes the value of the other side.
Element cube_eval(const CayleyTable& t, const ElementSequence& s, const Parenthesization& p,
                  const CubeIndex& e);

inline constexpr std::size_t kDefaultCubeBudget = 24;

// { cube_eval(t, s, p, e) : e in {0,1}^k }. Throws BudgetError if k > max_k.
ElementSet cube_set(const CayleyTable& t, const ElementSequence& s, const Parenthesization& p,
                    std::size_t max_k = kDefaultCubeBudget);

// cube_eval for every index, ordered by the integer value of the bit mask.
std::vector<Element> cube_values(const CayleyTable& t, const ElementSequence& s,
                                 const Parenthesization& p,
                                 std::size_t max_k = kDefaultCubeBudget);

void check_sequence(const CayleyTable& t, const ElementSequence& s);

}  // namespace cayley
