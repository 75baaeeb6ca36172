#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cayley {

// Elements of a finite structure are the indices 0..n-1.
using Element = std::uint32_t;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a requested enumeration exceeds a configured hard limit.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dense membership vector over 0..n-1 with a cached cardinality.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe);
  ElementSet(std::size_t universe, std::initializer_list<Element> elems);
  ElementSet(std::size_t universe, std::span<const Element> elems);

  static ElementSet full(std::size_t universe);
  static ElementSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }
  bool is_full() const noexcept { return count_ == universe_; }

  bool contains(Element x) const noexcept {
    return x < universe_ && ((words_[x >> 6] >> (x & 63)) & 1u);
  }
  // Returns true when x was not already present.
  bool insert(Element x);
  bool erase(Element x);
  void insert_all(const ElementSet& other);

  bool is_subset_of(const ElementSet& other) const;
  std::vector<Element> elements() const;
  std::size_t hash() const noexcept;
  std::string to_string() const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

 private:
  void check(Element x) const;

  std::vector<std::uint64_t> words_;
  std::size_t universe_ = 0;
  std::size_t count_ = 0;
};

// n x n operation table, row-major: entry (x, y) is x * y.
class CayleyTable {
 public:
  CayleyTable(std::size_t n, std::vector<Element> entries);
  static CayleyTable from_rows(const std::vector<std::vector<Element>>& rows);

  std::size_t order() const noexcept { return n_; }

  // Unchecked lookup for hot loops.
  Element operator()(Element x, Element y) const noexcept {
    return entries_[static_cast<std::size_t>(x) * n_ + y];
  }
  // Checked lookup; throws InputError on out-of-range operands.
  Element product(Element x, Element y) const;

  std::span<const Element> row(Element x) const {
    return {entries_.data() + static_cast<std::size_t>(x) * n_, n_};
  }
  const std::vector<Element>& entries() const noexcept { return entries_; }

  void check_element(Element x) const;
  void check_set(const ElementSet& s) const;

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;

 private:
  std::size_t n_;
  std::vector<Element> entries_;
};

// Table of a closed subset, relabelled to 0..|closed|-1 in increasing order.
// `labels[i]` is the original element behind new index i.
struct InducedTable {
  CayleyTable table;
  std::vector<Element> labels;
};
InducedTable induced_subtable(const CayleyTable& t, const ElementSet& closed);

// Smallest m with 2^m >= n (0 for n <= 1).
std::size_t ceil_log2(std::uint64_t n);

}  // namespace cayley
