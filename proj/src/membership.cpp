#include "cayley/membership.hpp"

#include <deque>
#include <functional>

#include "cayley/structure.hpp"

namespace cayley {

ElementSet closure(const CayleyTable& t, const ElementSet& s) {
  t.check_set(s);
  ElementSet c(t.order());
  std::vector<Element> members;
  members.reserve(t.order());
  auto add = [&](Element x) {
    if (c.insert(x)) members.push_back(x);
  };
  for (Element x : s.elements()) add(x);
  // Each newly added element is multiplied against everything before it
  // (including itself) in both orders, so every pair is seen exactly once.
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Element x = members[i];
    for (std::size_t j = 0; j <= i; ++j) {
      const Element y = members[j];
      add(t(x, y));
      add(t(y, x));
    }
    if (c.is_full()) break;
  }
  return c;
}

bool submagma_membership(const CayleyTable& t, Element h, const ElementSet& s) {
  t.check_element(h);
  if (s.contains(h)) return true;
  return closure(t, s).contains(h);
}

bool subsemigroup_membership(const CayleyTable& t, Element h, const ElementSet& s,
                             bool check_associative) {
  t.check_element(h);
  t.check_set(s);
  if (check_associative && !is_associative(t)) {
    throw InputError("subsemigroup membership needs an associative table");
  }
  const auto gens = s.elements();
  ElementSet seen(t.order());
  std::deque<Element> queue;
  for (Element g : gens) {
    if (seen.insert(g)) queue.push_back(g);
  }
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    if (x == h) return true;
    for (Element g : gens) {
      const Element y = t(x, g);
      if (seen.insert(y)) queue.push_back(y);
    }
  }
  return false;
}

bool cube_membership(const CayleyTable& t, Element h, const ElementSequence& s,
                     const Parenthesization& p, std::size_t max_k) {
  t.check_element(h);
  check_sequence(t, s);
  if (!is_latin_square(t)) throw InputError("cube membership needs a quasigroup (Latin square) table");
  const std::size_t k = s.size() - 1;
  if (k > max_k) {
    throw BudgetError("cube over " + std::to_string(k) + " optional positions exceeds the budget of " +
                      std::to_string(max_k));
  }
  const std::uint64_t count = std::uint64_t{1} << k;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (cube_eval(t, s, p, CubeIndex(k, mask)) == h) return true;
  }
  return false;
}

namespace {

void check_bounded_query(const CayleyTable& t, Element h, const ElementSet& s, std::size_t k,
                         std::size_t d) {
  t.check_element(h);
  t.check_set(s);
  if (k == 0 || d == 0) throw InputError("bounds k and d must be positive");
  if (!is_latin_square(t)) {
    throw InputError("bounded subquasigroup membership needs a quasigroup (Latin square) table");
  }
}

}  // namespace

BoundedMembership bounded_subquasigroup_membership(const CayleyTable& t, Element h,
                                                   const ElementSet& s, std::size_t k,
                                                   std::size_t d) {
  check_bounded_query(t, h, s, k, d);
  BoundedMembership result;
  if (s.empty()) return result;
  const std::size_t n = t.order();
  // A tree with l leaves has depth at most l - 1.
  const std::size_t depth = std::min(d, k - 1);

  // values[l][e]: products of exactly l elements of S with depth <= e.
  std::vector<std::vector<ElementSet>> values(k + 1,
                                              std::vector<ElementSet>(depth + 1, ElementSet(n)));
  for (std::size_t e = 0; e <= depth; ++e) values[1][e] = s;
  for (std::size_t e = 1; e <= depth; ++e) {
    for (std::size_t l = 2; l <= k; ++l) {
      if (e < 64 && l > (std::size_t{1} << e)) continue;
      ElementSet& out = values[l][e];
      for (std::size_t i = 1; i < l; ++i) {
        const auto lhs = values[i][e - 1].elements();
        const auto rhs = values[l - i][e - 1].elements();
        result.work += lhs.size() * rhs.size();
        for (Element x : lhs) {
          for (Element y : rhs) out.insert(t(x, y));
        }
      }
    }
  }

  std::size_t leaves = 0;
  for (std::size_t l = 1; l <= k && !leaves; ++l) {
    if (values[l][depth].contains(h)) leaves = l;
  }
  if (!leaves) return result;

  // Rebuild the product: smallest split, then smallest operands.
  ElementSequence seq;
  std::function<Parenthesization(std::size_t, std::size_t, Element)> rebuild =
      [&](std::size_t l, std::size_t e, Element target) -> Parenthesization {
    if (l == 1) {
      seq.push_back(target);
      return Parenthesization();
    }
    for (std::size_t i = 1; i < l; ++i) {
      for (Element x : values[i][e - 1].elements()) {
        for (Element y : values[l - i][e - 1].elements()) {
          if (t(x, y) != target) continue;
          Parenthesization lhs = rebuild(i, e - 1, x);
          Parenthesization rhs = rebuild(l - i, e - 1, y);
          return Parenthesization::join(lhs, rhs);
        }
      }
    }
    throw std::logic_error("bounded membership witness reconstruction failed");
  };
  Parenthesization tree = rebuild(leaves, depth, h);
  result.verdict = Verdict::yes;
  result.sequence = std::move(seq);
  result.tree = std::move(tree);
  return result;
}

BoundedMembership bounded_subquasigroup_membership_enumerate(const CayleyTable& t, Element h,
                                                             const ElementSet& s, std::size_t k,
                                                             std::size_t d,
                                                             std::uint64_t max_candidates) {
  check_bounded_query(t, h, s, k, d);
  BoundedMembership result;
  const auto gens = s.elements();
  if (gens.empty()) return result;
  for (std::size_t l = 1; l <= k; ++l) {
    for (const Parenthesization& tree : all_parenthesizations(l, d)) {
      std::vector<std::size_t> digits(l, 0);
      ElementSequence seq(l, gens[0]);
      for (;;) {
        if (result.work >= max_candidates) {
          result.verdict = Verdict::exhausted;
          return result;
        }
        ++result.work;
        if (eval_parenthesized(t, seq, tree) == h) {
          result.verdict = Verdict::yes;
          result.sequence = seq;
          result.tree = tree;
          return result;
        }
        std::size_t i = l;
        while (i > 0 && digits[i - 1] + 1 == gens.size()) {
          digits[i - 1] = 0;
          seq[i - 1] = gens[0];
          --i;
        }
        if (i == 0) break;
        ++digits[i - 1];
        seq[i - 1] = gens[digits[i - 1]];
      }
    }
  }
  return result;
}

bool subgroup_membership(const CayleyTable& t, Element h, const ElementSet& s) {
  t.check_element(h);
  t.check_set(s);
  const auto kind = classify(t);
  if (kind.kind != Kind::group) throw InputError("subgroup membership needs a group table");
  if (s.empty()) return false;
  const Element e = *kind.identity;
  const std::size_t n = t.order();

  std::vector<Element> steps;
  for (Element g : s.elements()) {
    steps.push_back(g);
    for (Element y = 0; y < n; ++y) {
      if (t(g, y) == e) {
        steps.push_back(y);
        break;
      }
    }
  }
  ElementSet seen(n);
  std::deque<Element> queue{e};
  seen.insert(e);
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    if (x == h) return true;
    for (Element g : steps) {
      const Element y = t(x, g);
      if (seen.insert(y)) queue.push_back(y);
    }
  }
  return false;
}

ElementSet subring_closure(const RingTable& r, const ElementSet& s) {
  r.add().check_set(s);
  ElementSet c(r.order());
  std::vector<Element> members;
  auto add = [&](Element x) {
    if (c.insert(x)) members.push_back(x);
  };
  for (Element x : s.elements()) add(x);
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Element x = members[i];
    for (std::size_t j = 0; j <= i; ++j) {
      const Element y = members[j];
      add(r.plus(x, y));
      add(r.times(x, y));
      add(r.times(y, x));
    }
    if (c.is_full()) break;
  }
  return c;
}

bool subring_membership(const RingTable& r, Element h, const ElementSet& s) {
  r.add().check_element(h);
  return s.contains(h) || subring_closure(r, s).contains(h);
}

ElementSet subring_graph_reachable(const RingTable& r, const ElementSet& s) {
  r.add().check_set(s);
  const std::size_t n = r.order();
  std::vector<Element> multipliers{r.one()};
  ElementSet subtrahends(n);
  subtrahends.insert(r.zero());
  for (Element g : s.elements()) {
    if (g != r.one()) multipliers.push_back(g);
    subtrahends.insert(g);
    subtrahends.insert(r.neg(g));
  }
  const auto subs = subtrahends.elements();

  ElementSet seen(n);
  std::deque<Element> queue{r.one()};
  seen.insert(r.one());
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (Element a : multipliers) {
      const Element xa = r.times(x, a);
      for (Element b : subs) {
        const Element y = r.minus(xa, b);
        if (seen.insert(y)) queue.push_back(y);
      }
    }
  }
  return seen;
}

bool subring_membership_graph(const RingTable& r, Element h, const ElementSet& s) {
  r.add().check_element(h);
  return subring_graph_reachable(r, s).contains(h);
}

ElementSet unital_subring_closure(const RingTable& r, const ElementSet& s) {
  r.add().check_set(s);
  ElementSet c(r.order());
  std::vector<Element> members;
  auto add = [&](Element x) {
    if (c.insert(x)) members.push_back(x);
  };
  add(r.one());
  for (Element x : s.elements()) add(x);
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Element x = members[i];
    for (std::size_t j = 0; j <= i; ++j) {
      const Element y = members[j];
      add(r.minus(x, y));
      add(r.minus(y, x));
      add(r.times(x, y));
      add(r.times(y, x));
    }
  }
  return c;
}

}  // namespace cayley
