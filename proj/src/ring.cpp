#include "cayley/ring.hpp"

#include "cayley/structure.hpp"

namespace cayley {

namespace {

std::string describe(const std::string& axiom, const std::optional<std::array<Element, 3>>& w) {
  if (!w) return "ring axiom failed: " + axiom;
  return "ring axiom failed: " + axiom + " at (" + std::to_string((*w)[0]) + ", " +
         std::to_string((*w)[1]) + ", " + std::to_string((*w)[2]) + ")";
}

std::optional<std::array<Element, 3>> associativity_witness(const CayleyTable& t) {
  const std::size_t n = t.order();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (t(t(x, y), z) != t(x, t(y, z))) return std::array<Element, 3>{x, y, z};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

RingAxiomError::RingAxiomError(std::string axiom, std::optional<std::array<Element, 3>> witness)
    : InputError(describe(axiom, witness)), axiom_(std::move(axiom)), witness_(witness) {}

RingTable::RingTable(CayleyTable add, CayleyTable mul, Element zero, Element one,
                     std::vector<Element> neg)
    : add_(std::move(add)), mul_(std::move(mul)), zero_(zero), one_(one), neg_(std::move(neg)) {}

RingTable validate_ring(CayleyTable add, CayleyTable mul) {
  const std::size_t n = add.order();
  if (mul.order() != n) throw RingAxiomError("size-mismatch");

  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (add(x, y) != add(y, x)) throw RingAxiomError("not-abelian", std::array{x, y, x});
    }
  }
  if (auto w = associativity_witness(add)) throw RingAxiomError("add-not-associative", w);

  const auto zero = two_sided_identity(add);
  if (!zero) throw RingAxiomError("no-zero");
  std::vector<Element> neg(n, 0);
  for (Element x = 0; x < n; ++x) {
    bool found = false;
    for (Element y = 0; y < n && !found; ++y) {
      if (add(x, y) == *zero) {
        neg[x] = y;
        found = true;
      }
    }
    if (!found) throw RingAxiomError("no-negation", std::array{x, x, x});
  }

  if (auto w = associativity_witness(mul)) throw RingAxiomError("mul-not-associative", w);
  const auto one = two_sided_identity(mul);
  if (!one) throw RingAxiomError("no-one");

  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) {
          throw RingAxiomError("left-distributivity-fail", std::array{a, b, c});
        }
        if (mul(add(b, c), a) != add(mul(b, a), mul(c, a))) {
          throw RingAxiomError("right-distributivity-fail", std::array{a, b, c});
        }
      }
    }
  }
  return RingTable(std::move(add), std::move(mul), *zero, *one, std::move(neg));
}

}  // namespace cayley
