#include "cayley/table.hpp"

#include <bit>
#include <sstream>

namespace cayley {

ElementSet::ElementSet(std::size_t universe)
    : words_((universe + 63) / 64, 0), universe_(universe) {}

ElementSet::ElementSet(std::size_t universe, std::initializer_list<Element> elems)
    : ElementSet(universe) {
  for (Element x : elems) insert(x);
}

ElementSet::ElementSet(std::size_t universe, std::span<const Element> elems)
    : ElementSet(universe) {
  for (Element x : elems) insert(x);
}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (Element x = 0; x < universe; ++x) s.insert(x);
  return s;
}

ElementSet ElementSet::from_mask(std::size_t universe, std::uint64_t mask) {
  ElementSet s(universe);
  for (Element x = 0; x < universe && x < 64; ++x) {
    if ((mask >> x) & 1u) s.insert(x);
  }
  return s;
}

void ElementSet::check(Element x) const {
  if (x >= universe_) {
    throw InputError("element " + std::to_string(x) + " out of range for universe of size " +
                     std::to_string(universe_));
  }
}

bool ElementSet::insert(Element x) {
  check(x);
  std::uint64_t& w = words_[x >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (x & 63);
  if (w & bit) return false;
  w |= bit;
  ++count_;
  return true;
}

bool ElementSet::erase(Element x) {
  check(x);
  std::uint64_t& w = words_[x >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (x & 63);
  if (!(w & bit)) return false;
  w &= ~bit;
  --count_;
  return true;
}

void ElementSet::insert_all(const ElementSet& other) {
  if (other.universe_ != universe_) throw InputError("element sets over different universes");
  count_ = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] |= other.words_[i];
    count_ += static_cast<std::size_t>(std::popcount(words_[i]));
  }
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  if (other.universe_ != universe_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back(static_cast<Element>(i * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::size_t ElementSet::hash() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull ^ universe_;
  for (std::uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::string ElementSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Element x : elements()) {
    if (!first) os << ", ";
    os << x;
    first = false;
  }
  os << '}';
  return os.str();
}

CayleyTable::CayleyTable(std::size_t n, std::vector<Element> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ == 0) throw InputError("a Cayley table needs at least one element");
  if (entries_.size() != n_ * n_) {
    throw InputError("expected " + std::to_string(n_ * n_) + " table entries, got " +
                     std::to_string(entries_.size()));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] >= n_) {
      throw InputError("entry (" + std::to_string(i / n_) + ", " + std::to_string(i % n_) +
                       ") = " + std::to_string(entries_[i]) + " is not an element of 0.." +
                       std::to_string(n_ - 1));
    }
  }
}

CayleyTable CayleyTable::from_rows(const std::vector<std::vector<Element>>& rows) {
  const std::size_t n = rows.size();
  std::vector<Element> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw InputError("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                       " entries, expected " + std::to_string(n));
    }
    entries.insert(entries.end(), rows[i].begin(), rows[i].end());
  }
  return CayleyTable(n, std::move(entries));
}

void CayleyTable::check_element(Element x) const {
  if (x >= n_) {
    throw InputError("element " + std::to_string(x) + " out of range 0.." +
                     std::to_string(n_ - 1));
  }
}

void CayleyTable::check_set(const ElementSet& s) const {
  if (s.universe() != n_) {
    throw InputError("element set universe " + std::to_string(s.universe()) +
                     " does not match table order " + std::to_string(n_));
  }
}

Element CayleyTable::product(Element x, Element y) const {
  check_element(x);
  check_element(y);
  return (*this)(x, y);
}

InducedTable induced_subtable(const CayleyTable& t, const ElementSet& closed) {
  t.check_set(closed);
  std::vector<Element> labels = closed.elements();
  std::vector<Element> index(t.order(), 0);
  for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = static_cast<Element>(i);
  const std::size_t m = labels.size();
  if (m == 0) throw InputError("cannot induce a table on the empty set");
  std::vector<Element> entries;
  entries.reserve(m * m);
  for (Element x : labels) {
    for (Element y : labels) {
      const Element z = t(x, y);
      if (!closed.contains(z)) throw InputError("subset is not closed under the operation");
      entries.push_back(index[z]);
    }
  }
  return {CayleyTable(m, std::move(entries)), std::move(labels)};
}

std::size_t ceil_log2(std::uint64_t n) {
  if (n <= 1) return 0;
  return static_cast<std::size_t>(std::bit_width(n - 1));
}

}  // namespace cayley
