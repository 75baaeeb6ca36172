#include "cayley/structure.hpp"

#include <array>

namespace cayley {

namespace {

constexpr std::array<std::string_view, 6> kKindNames = {"magma",      "semigroup", "monoid",
                                                        "quasigroup", "loop",      "group"};

}  // namespace

std::string_view to_string(Kind k) { return kKindNames[static_cast<std::size_t>(k)]; }

std::optional<Kind> parse_kind(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == name) return static_cast<Kind>(i);
  }
  return std::nullopt;
}

bool is_latin_square(const CayleyTable& t) {
  const std::size_t n = t.order();
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;
  for (Element x = 0; x < n; ++x) {
    ++stamp;
    for (Element y = 0; y < n; ++y) {
      Element z = t(x, y);
      if (seen[z] == stamp) return false;
      seen[z] = stamp;
    }
  }
  for (Element y = 0; y < n; ++y) {
    ++stamp;
    for (Element x = 0; x < n; ++x) {
      Element z = t(x, y);
      if (seen[z] == stamp) return false;
      seen[z] = stamp;
    }
  }
  return true;
}

bool is_associative(const CayleyTable& t) {
  const std::size_t n = t.order();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element xy = t(x, y);
      for (Element z = 0; z < n; ++z) {
        if (t(xy, z) != t(x, t(y, z))) return false;
      }
    }
  }
  return true;
}

bool is_commutative(const CayleyTable& t) {
  const std::size_t n = t.order();
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (t(x, y) != t(y, x)) return false;
    }
  }
  return true;
}

std::optional<Element> two_sided_identity(const CayleyTable& t) {
  const std::size_t n = t.order();
  for (Element e = 0; e < n; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = t(e, x) == x && t(x, e) == x;
    if (ok) return e;
  }
  return std::nullopt;
}

StructureKind classify(const CayleyTable& t) {
  const std::size_t n = t.order();
  StructureKind k;
  k.is_associative = is_associative(t);
  k.is_latin_square = is_latin_square(t);
  k.is_commutative = is_commutative(t);
  for (Element e = 0; e < n; ++e) {
    bool left = true;
    bool right = true;
    for (Element x = 0; x < n; ++x) {
      left = left && t(e, x) == x;
      right = right && t(x, e) == x;
    }
    if (left) k.left_identities.push_back(e);
    if (right) k.right_identities.push_back(e);
    if (left && right) k.identity = e;
  }
  if (k.identity) {
    const Element e = *k.identity;
    k.has_inverses = true;
    for (Element x = 0; x < n && k.has_inverses; ++x) {
      bool found = false;
      for (Element y = 0; y < n && !found; ++y) found = t(x, y) == e && t(y, x) == e;
      k.has_inverses = found;
    }
  }

  if (k.is_latin_square) {
    if (k.is_associative) {
      k.kind = Kind::group;
    } else if (k.identity) {
      k.kind = Kind::loop;
    } else {
      k.kind = Kind::quasigroup;
    }
  } else if (k.is_associative) {
    k.kind = k.identity ? Kind::monoid : Kind::semigroup;
  } else {
    k.kind = Kind::magma;
  }
  return k;
}

}  // namespace cayley
