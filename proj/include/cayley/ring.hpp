#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cayley/table.hpp"

namespace cayley {

// A failed ring axiom. `axiom` is one of: size-mismatch, not-abelian,
// add-not-associative, no-zero, no-negation, mul-not-associative, no-one,
// left-distributivity-fail, right-distributivity-fail.
class RingAxiomError : public InputError {
 public:
  RingAxiomError(std::string axiom, std::optional<std::array<Element, 3>> witness = {});

  const std::string& axiom() const noexcept { return axiom_; }
  const std::optional<std::array<Element, 3>>& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::optional<std::array<Element, 3>> witness_;
};

// Additive abelian group plus multiplicative monoid, distributive both sides.
// Only constructible through validate_ring.
class RingTable {
 public:
  const CayleyTable& add() const noexcept { return add_; }
  const CayleyTable& mul() const noexcept { return mul_; }
  std::size_t order() const noexcept { return add_.order(); }
  Element zero() const noexcept { return zero_; }
  Element one() const noexcept { return one_; }
  Element neg(Element x) const noexcept { return neg_[x]; }
  const std::vector<Element>& negation() const noexcept { return neg_; }

  Element plus(Element x, Element y) const noexcept { return add_(x, y); }
  Element minus(Element x, Element y) const noexcept { return add_(x, neg_[y]); }
  Element times(Element x, Element y) const noexcept { return mul_(x, y); }

  friend RingTable validate_ring(CayleyTable add, CayleyTable mul);

 private:
  RingTable(CayleyTable add, CayleyTable mul, Element zero, Element one,
            std::vector<Element> neg);

  CayleyTable add_;
  CayleyTable mul_;
  Element zero_;
  Element one_;
  std::vector<Element> neg_;
};

RingTable validate_ring(CayleyTable add, CayleyTable mul);

}  // namespace cayley
