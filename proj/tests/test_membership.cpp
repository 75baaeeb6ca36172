#include <doctest.h>

#include "cayley/corpus.hpp"
#include "cayley/membership.hpp"
#include "cayley/structure.hpp"
#include "oracles.hpp"

using namespace cayley;

namespace {

constexpr Element a = 0, b = 1, c = 2;

CayleyTable quasigroup3() { return CayleyTable::from_rows({{a, b, c}, {c, a, b}, {b, c, a}}); }

ElementSet set_of(const CayleyTable& t, std::initializer_list<Element> xs) {
  return ElementSet(t.order(), xs);
}

ElementSet from_mask(std::size_t n, oracle::Mask m) { return ElementSet::from_mask(n, m); }

}  // namespace

TEST_CASE("closure") {
  const auto z6 = gen_cyclic(6);
  CHECK(closure(z6, ElementSet(6)).empty());
  CHECK(closure(z6, set_of(z6, {2})) == set_of(z6, {0, 2, 4}));
  CHECK(closure(z6, set_of(z6, {2, 3})).is_full());
  CHECK_THROWS_AS(closure(z6, ElementSet(5)), InputError);
}

TEST_CASE("closure matches the naive fixpoint") {
  for (const auto& [name, t] : corpus_structures(8)) {
    INFO(name);
    const std::size_t n = t.order();
    for (oracle::Mask m = 0; m <= oracle::full(n); ++m) {
      CHECK(oracle::mask_of(closure(t, from_mask(n, m))) == oracle::closure(t, m));
    }
  }
}

TEST_CASE("closure covers every parenthesized product") {
  for (const auto& [name, t] : corpus_structures(5)) {
    INFO(name);
    const std::size_t n = t.order();
    for (oracle::Mask m = 0; m <= oracle::full(n); ++m) {
      // 2^(n-1) leaves reach every element that n - 1 doubling rounds can.
      const auto by_length =
          oracle::products_by_length(t, m, std::max<std::size_t>(4, std::size_t{1} << (n - 1)));
      oracle::Mask all = 0;
      for (auto v : by_length) all |= v;
      CHECK(oracle::mask_of(closure(t, from_mask(n, m))) == all);
      for (std::size_t len = 1; len <= 4; ++len) {
        CHECK(oracle::products_of_length(t, m, len) == by_length[len]);
      }
    }
  }
}

TEST_CASE("submagma membership") {
  const auto q = quasigroup3();
  CHECK(submagma_membership(q, c, set_of(q, {b})));
  CHECK(submagma_membership(q, a, set_of(q, {a})));
  CHECK_FALSE(submagma_membership(q, a, ElementSet(3)));
  CHECK_THROWS_AS(submagma_membership(q, 3, ElementSet(3)), InputError);
}

TEST_CASE("subsemigroup membership") {
  const auto rz = gen_right_zero(3);
  CHECK_FALSE(subsemigroup_membership(rz, a, set_of(rz, {b, c})));
  CHECK(subsemigroup_membership(rz, b, set_of(rz, {b, c})));
  const auto z6 = gen_cyclic(6);
  CHECK(subsemigroup_membership(z6, 1, set_of(z6, {2, 3})));
  CHECK_THROWS_AS(subsemigroup_membership(quasigroup3(), a, set_of(quasigroup3(), {b})), InputError);
  CHECK_NOTHROW(subsemigroup_membership(quasigroup3(), a, set_of(quasigroup3(), {b}), false));

  for (const auto& [name, t] : corpus_structures(7)) {
    if (!is_associative(t)) continue;
    INFO(name);
    const std::size_t n = t.order();
    for (oracle::Mask m = 0; m <= oracle::full(n); ++m) {
      const oracle::Mask cl = oracle::closure(t, m);
      for (Element h = 0; h < n; ++h) {
        CHECK(subsemigroup_membership(t, h, from_mask(n, m)) == bool((cl >> h) & 1));
      }
    }
  }
}

TEST_CASE("cube membership") {
  const auto q = quasigroup3();
  const auto pair = Parenthesization::balanced(2);
  CHECK(cube_membership(q, a, {a, b}, pair));
  CHECK_FALSE(cube_membership(q, c, {a, b}, pair));
  CHECK(cube_membership(q, a, {a, c, a, b}, Parenthesization::parse("(0 ((1 2) 3))")));
  CHECK_THROWS_AS(cube_membership(gen_right_zero(3), a, {a, b}, pair), InputError);
  CHECK_THROWS_AS(cube_membership(q, a, {a, b, c}, Parenthesization::balanced(3), 1), BudgetError);
}

TEST_CASE("cube membership implies submagma membership") {
  Rng rng(derive_seed(17, 0));
  for (const auto& [name, t] : corpus_quasigroups(6)) {
    INFO(name);
    const std::size_t n = t.order();
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t len = 1 + uniform_below(rng, 5);
      ElementSequence s(len);
      for (auto& x : s) x = static_cast<Element>(uniform_below(rng, n));
      const auto p = Parenthesization::balanced(len);
      ElementSet gens(n, std::span<const Element>(s));
      const oracle::Mask cube = oracle::cube(t, s, p);
      for (Element h = 0; h < n; ++h) {
        const bool in_cube = cube_membership(t, h, s, p);
        CHECK(in_cube == bool((cube >> h) & 1));
        if (in_cube) CHECK(submagma_membership(t, h, gens));
      }
    }
  }
}

TEST_CASE("bounded subquasigroup membership") {
  const auto q = quasigroup3();
  const auto r1 = bounded_subquasigroup_membership(q, b, set_of(q, {b}), 1, 1);
  CHECK(r1.verdict == Verdict::yes);
  CHECK(r1.sequence == ElementSequence{b});

  // Two leaves only give bb = a; (b (b b)) = ba = c needs three.
  CHECK(bounded_subquasigroup_membership(q, c, set_of(q, {b}), 2, 1).verdict == Verdict::no);
  const auto r3 = bounded_subquasigroup_membership(q, c, set_of(q, {b}), 3, 2);
  REQUIRE(r3.verdict == Verdict::yes);
  REQUIRE(r3.sequence);
  REQUIRE(r3.tree);
  CHECK(eval_parenthesized(q, *r3.sequence, *r3.tree) == c);
  CHECK(r3.tree->depth() <= 2);
  // Depth 1 allows only two leaves.
  CHECK(bounded_subquasigroup_membership(q, c, set_of(q, {b}), 3, 1).verdict == Verdict::no);

  CHECK(bounded_subquasigroup_membership(q, a, ElementSet(3), 3, 3).verdict == Verdict::no);
  CHECK_THROWS_AS(bounded_subquasigroup_membership(q, a, set_of(q, {a}), 0, 1), InputError);
  CHECK_THROWS_AS(bounded_subquasigroup_membership(gen_right_zero(3), a, set_of(q, {a}), 2, 1),
                  InputError);
}

TEST_CASE("bounded membership agrees with enumeration and with closure") {
  for (const auto& [name, t] : corpus_quasigroups(5)) {
    INFO(name);
    const std::size_t n = t.order();
    for (oracle::Mask m = 0; m <= oracle::full(n); ++m) {
      const ElementSet s = from_mask(n, m);
      const oracle::Mask cl = oracle::closure(t, m);
      for (Element h = 0; h < n; ++h) {
        // n - 1 doubling rounds reach the whole closure.
        const std::size_t leaves = std::size_t{1} << (n - 1);
        const auto dp = bounded_subquasigroup_membership(t, h, s, leaves, std::max<std::size_t>(1, n - 1));
        CHECK((dp.verdict == Verdict::yes) == bool((cl >> h) & 1));
        if (dp.verdict == Verdict::yes) {
          CHECK(eval_parenthesized(t, *dp.sequence, *dp.tree) == h);
          CHECK(dp.sequence->size() <= leaves);
          for (Element x : *dp.sequence) CHECK(s.contains(x));
        }
        for (std::size_t k = 1; k <= 3; ++k) {
          for (std::size_t d = 1; d <= 2; ++d) {
            const auto small = bounded_subquasigroup_membership(t, h, s, k, d);
            const auto brute =
                bounded_subquasigroup_membership_enumerate(t, h, s, k, d, 1'000'000);
            CHECK(small.verdict == brute.verdict);
          }
        }
      }
    }
  }
}

TEST_CASE("enumeration reports an exhausted budget") {
  const auto t = gen_cyclic(5);
  const auto r = bounded_subquasigroup_membership_enumerate(t, 4, ElementSet(5, {0}), 6, 6, 10);
  CHECK(r.verdict == Verdict::exhausted);
  CHECK(r.work == 10);
}

TEST_CASE("subgroup membership") {
  const auto z6 = gen_cyclic(6);
  CHECK_FALSE(subgroup_membership(z6, 3, set_of(z6, {2})));
  CHECK(subgroup_membership(z6, 0, set_of(z6, {5})));
  CHECK(subgroup_membership(z6, 2, set_of(z6, {4})));
  CHECK_FALSE(subgroup_membership(z6, 0, ElementSet(6)));
  CHECK_THROWS_AS(subgroup_membership(quasigroup3(), a, set_of(quasigroup3(), {a})), InputError);

  for (const auto& [name, t] : corpus_groups(16)) {
    if (t.order() > 12) continue;
    INFO(name);
    const std::size_t n = t.order();
    for (oracle::Mask m = 0; m <= oracle::full(n); ++m) {
      const ElementSet s = from_mask(n, m);
      const ElementSet cl = closure(t, s);
      for (Element h = 0; h < n; ++h) CHECK(subgroup_membership(t, h, s) == cl.contains(h));
    }
  }
}

TEST_CASE("subgroup membership on order-16 groups") {
  Rng rng(derive_seed(23, 0));
  for (const auto& [name, t] : corpus_groups(16)) {
    if (t.order() <= 12) continue;
    INFO(name);
    const std::size_t n = t.order();
    for (int trial = 0; trial < 300; ++trial) {
      const oracle::Mask m = rng() & oracle::full(n) & rng();
      const ElementSet s = from_mask(n, m);
      const oracle::Mask cl = oracle::closure(t, m);
      for (Element h = 0; h < n; ++h) CHECK(subgroup_membership(t, h, s) == bool((cl >> h) & 1));
    }
  }
}

TEST_CASE("subring closure and membership") {
  const auto cube = gen_ring_boolean_cube(3);
  // (x, y, z) is encoded as x + 2y + 4z.
  const Element e011 = 2 + 4, e110 = 1 + 2, e111 = 7;
  CHECK(subring_closure(cube, ElementSet(8, {e011, e110})).is_full());
  CHECK(subring_closure(cube, ElementSet(8)).empty());
  CHECK(subring_membership(cube, e111, ElementSet(8, {e011, e110})));

  const auto z6 = gen_ring_modular(6);
  CHECK(subring_closure(z6, ElementSet(6, {2})) == ElementSet(6, {0, 2, 4}));
  CHECK_FALSE(subring_membership(z6, 3, ElementSet(6, {2})));
  CHECK(subring_membership(z6, 2, ElementSet(6, {2})));

  for (const auto& [name, r] : corpus_rings(8)) {
    INFO(name);
    const std::size_t n = r.order();
    for (oracle::Mask m = 0; m <= oracle::full(n); ++m) {
      const oracle::Mask cl = oracle::ring_closure(r, m);
      CHECK(oracle::mask_of(subring_closure(r, from_mask(n, m))) == cl);
      // Adding a generator never loses members.
      for (Element extra = 0; extra < n; ++extra) {
        const oracle::Mask bigger = oracle::ring_closure(r, m | (oracle::Mask{1} << extra));
        for (Element h = 0; h < n; ++h) {
          if (subring_membership(r, h, from_mask(n, m))) {
            CHECK(bool((bigger >> h) & 1));
          }
        }
      }
    }
  }
}

TEST_CASE("subring graph reachability") {
  const auto cube = gen_ring_boolean_cube(3);
  const ElementSet gens(8, {6, 3});
  CHECK(subring_membership_graph(cube, cube.one(), ElementSet(8)));
  CHECK(subring_membership_graph(cube, 0, gens));
  CHECK(bool((oracle::unital_closure(cube, oracle::mask_of(gens)) >> 0) & 1));

  const auto z6 = gen_ring_modular(6);
  CHECK(subring_graph_reachable(z6, ElementSet(6)) == ElementSet(6, {1}));
  CHECK(subring_membership_graph(z6, 1, ElementSet(6)));
  CHECK_FALSE(subring_membership_graph(z6, 2, ElementSet(6)));
}

TEST_CASE("unital closure matches the naive oracle") {
  for (const auto& [name, r] : corpus_rings(9)) {
    INFO(name);
    const std::size_t n = r.order();
    for (oracle::Mask m = 0; m <= oracle::full(n); ++m) {
      CHECK(oracle::mask_of(unital_subring_closure(r, from_mask(n, m))) ==
            oracle::unital_closure(r, m));
    }
  }
}

TEST_CASE("n leaves can fall short of the closure") {
  // In this order-5 Latin square the element 1 of <{2}> needs six leaves.
  const auto t = gen_random_latin_square(5, 1);
  const ElementSet s = set_of(t, {2});
  CHECK(submagma_membership(t, 1, s));
  CHECK(bounded_subquasigroup_membership(t, 1, s, 5, 5).verdict == Verdict::no);
  CHECK(bounded_subquasigroup_membership(t, 1, s, 6, 5).verdict == Verdict::yes);
  CHECK(((oracle::products_by_length(t, oracle::mask_of(s), 6)[6] >> 1) & 1) == 1);
}
