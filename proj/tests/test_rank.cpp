#include <doctest.h>

#include "cayley/corpus.hpp"
#include "cayley/membership.hpp"
#include "cayley/rank.hpp"
#include "cayley/rank_variants.hpp"
#include "cayley/structure.hpp"
#include "oracles.hpp"

using namespace cayley;

namespace {

constexpr Element a = 0, b = 1, c = 2;

CayleyTable quasigroup3() { return CayleyTable::from_rows({{a, b, c}, {c, a, b}, {b, c, a}}); }

}  // namespace

TEST_CASE("rank decision") {
  const auto rz = gen_right_zero(4);
  CHECK(rank_decision(rz, 3).verdict == Verdict::no);
  const auto yes = rank_decision(rz, 4);
  CHECK(yes.verdict == Verdict::yes);
  CHECK(yes.witness == ElementSet::full(4));

  const auto z6 = gen_cyclic(6);
  const auto one = rank_decision(z6, 1);
  CHECK(one.verdict == Verdict::yes);
  CHECK(one.witness == ElementSet(6, {1}));
  CHECK(rank_decision(z6, 0).verdict == Verdict::no);

  for (const auto& [name, t] : corpus_structures(8)) {
    INFO(name);
    CHECK(rank_decision(t, t.order()).verdict == Verdict::yes);
  }
}

TEST_CASE("rank decision is monotone and matches the unbounded oracle") {
  for (const auto& [name, t] : corpus_structures(10)) {
    INFO(name);
    const std::size_t expected = oracle::rank(t);
    bool previous = false;
    for (std::size_t k = 0; k <= t.order(); ++k) {
      const auto d = rank_decision(t, k);
      const bool yes = d.verdict == Verdict::yes;
      CHECK(yes == (k >= expected));
      if (previous) CHECK(yes);
      previous = yes;
      if (yes) {
        REQUIRE(d.witness);
        CHECK(d.witness->size() <= k);
        CHECK(oracle::closure(t, oracle::mask_of(*d.witness)) == oracle::full(t.order()));
      }
    }
  }
}

TEST_CASE("group rank") {
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto rep = group_rank(gen_elementary_abelian(k));
    CHECK(rep.rank == k);
    CHECK(rep.exact);
    CHECK(rep.method == RankMethod::log_bounded);
    CHECK(verify_witness(gen_elementary_abelian(k), rep));
  }
  CHECK(group_rank(gen_cyclic(6)).rank == 1);
  const auto trivial = group_rank(gen_cyclic(1));
  CHECK(trivial.rank == 1);
  CHECK(*trivial.generating_set() == ElementSet(1, {0}));
  CHECK_THROWS_AS(group_rank(quasigroup3()), InputError);
  CHECK_THROWS_AS(group_rank(gen_right_zero(2)), InputError);
}

TEST_CASE("group rank equals the unbounded oracle up to order 12") {
  for (const auto& [name, t] : corpus_groups(12)) {
    INFO(name);
    const auto rep = group_rank(t);
    CHECK(rep.rank == oracle::rank(t));
    CHECK(rep.rank <= std::max<std::size_t>(1, ceil_log2(t.order())));
    CHECK(verify_witness(t, rep));
  }
}

TEST_CASE("lower rank of magmas and semigroups") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto rep = lower_rank(gen_right_zero(n));
    CHECK(rep.rank == n);
    CHECK(rep.method == RankMethod::exhaustive);
    CHECK(rep.exact);
  }
  const auto mul6 = gen_multiplicative_monoid(6);
  CHECK(lower_rank(mul6).rank == oracle::rank(mul6));

  SearchConfig capped;
  capped.magma_exhaustive_max_n = 3;
  capped.magma_max_subset = 2;
  const auto partial = lower_rank(gen_right_zero(5), capped);
  CHECK(partial.exhausted);
  CHECK(partial.lower_bound == 3);
  CHECK(rank_decision(gen_right_zero(5), 4, capped).verdict == Verdict::exhausted);
  CHECK(rank_decision(gen_right_zero(5), 5, capped).verdict == Verdict::yes);
}

TEST_CASE("budget exhaustion is reported") {
  SearchConfig tiny;
  tiny.max_candidates = 3;
  const auto rep = lower_rank(gen_right_zero(4), tiny);
  CHECK(rep.exhausted);
  CHECK_FALSE(rep.exact);
  CHECK(rank_decision(gen_right_zero(4), 4, tiny).verdict == Verdict::exhausted);
}

TEST_CASE("cube rank") {
  const auto one = quasigroup_cube_rank(gen_cyclic(1));
  CHECK(one.rank == 1);
  CHECK(one.exact);

  const auto q = quasigroup_cube_rank(quasigroup3());
  CHECK(q.rank == 3);
  CHECK(q.exact);
  CHECK(q.method == RankMethod::exhaustive);
  REQUIRE(q.cube_witness());
  CHECK(cube_set(quasigroup3(), q.cube_witness()->sequence, q.cube_witness()->tree).is_full());

  const auto e8 = quasigroup_cube_rank(gen_elementary_abelian(3));
  CHECK(e8.rank == 4);
  CHECK(e8.exact);

  CHECK_THROWS_AS(quasigroup_cube_rank(gen_right_zero(3)), InputError);
}

TEST_CASE("cube rank against brute force over every sequence") {
  for (const auto& [name, t] : corpus_quasigroups(5)) {
    INFO(name);
    const std::size_t n = t.order();
    std::size_t expected = 0;
    for (std::size_t m = 1; m <= n + 1 && !expected; ++m) {
      std::size_t count = 1;
      for (std::size_t i = 0; i < m; ++i) count *= n;
      for (std::size_t idx = 0; idx < count && !expected; ++idx) {
        ElementSequence s(m);
        std::size_t rest = idx;
        for (auto& x : s) {
          x = static_cast<Element>(rest % n);
          rest /= n;
        }
        if (oracle::cube(t, s, Parenthesization::balanced(m)) == oracle::full(n)) expected = m;
      }
    }
    const auto rep = quasigroup_cube_rank(t);
    CHECK(rep.rank == expected);
    CHECK(rep.exact);
    // The distinct elements of a cube generating sequence generate.
    const auto& seq = rep.cube_witness()->sequence;
    const ElementSet distinct(n, std::span<const Element>(seq));
    CHECK(closure(t, distinct).is_full());
    CHECK(lower_rank(t).rank <= distinct.size());
  }
}

TEST_CASE("cube rank decision") {
  CHECK(quasigroup_rank_decision(quasigroup3(), 3) == Verdict::yes);
  CHECK(quasigroup_rank_decision(quasigroup3(), 2) == Verdict::no);
  CHECK(quasigroup_rank_decision(quasigroup3(), 0) == Verdict::no);
  for (const auto& [name, t] : corpus_quasigroups(5)) {
    INFO(name);
    CHECK(quasigroup_rank_decision(t, t.order() + 1) == Verdict::yes);
  }
}

TEST_CASE("randomized cube rank is deterministic across thread counts") {
  const auto t = gen_random_latin_square(20, 3);
  CubeRankOptions opts;
  opts.seed = 42;
  opts.tries = 200;
  SearchConfig one, four;
  one.cube_rank_exhaustive_max_n = 8;
  four.cube_rank_exhaustive_max_n = 8;
  four.threads = 4;
  const auto r1 = quasigroup_cube_rank(t, opts, one);
  const auto r4 = quasigroup_cube_rank(t, opts, four);
  CHECK(r1.method == RankMethod::randomized);
  CHECK(r1.exact == (r1.lower_bound == r1.rank));
  CHECK(r1.lower_bound == r4.lower_bound);
  CHECK(r1.rank == r4.rank);
  CHECK(r1.candidates_examined == r4.candidates_examined);
  REQUIRE(r1.cube_witness());
  CHECK(r1.cube_witness()->sequence == r4.cube_witness()->sequence);
}

TEST_CASE("generalized rank") {
  const auto z6 = gen_cyclic(6);
  const auto whole = generalized_rank(z6, ElementSet::full(6), 1);
  CHECK(whole.verdict == rank_decision(z6, 1).verdict);
  CHECK(generalized_rank(z6, ElementSet(6), 0).verdict == Verdict::yes);
  const auto evens = generalized_rank(z6, ElementSet(6, {0, 2, 4}), 1);
  CHECK(evens.verdict == Verdict::yes);
  CHECK(evens.witness == ElementSet(6, {2}));
  CHECK(generalized_rank(z6, ElementSet(6, {0, 3}), 1).verdict == Verdict::yes);
  CHECK(generalized_rank(z6, ElementSet(6, {2, 3}), 1).verdict == Verdict::no);
}

TEST_CASE("submagma rank") {
  const auto z6 = gen_cyclic(6);
  CHECK(submagma_rank(z6, ElementSet::full(6)).rank == group_rank(z6).rank);
  const auto sub = submagma_rank(z6, ElementSet(6, {2}));
  CHECK(sub.rank == 1);
  REQUIRE(sub.generating_set());
  CHECK(closure(z6, *sub.generating_set()) == ElementSet(6, {0, 2, 4}));
  CHECK(submagma_rank(z6, ElementSet(6)).rank == 0);
}

TEST_CASE("membership via rank") {
  const auto q = quasigroup3();
  CHECK(membership_via_rank(q, c, ElementSet(3, {b})));
  CHECK(membership_via_rank(q, b, ElementSet(3, {b})));
  // <2> = {0, 2, 4} and <2, 3> = Z/6 are both cyclic, so the ranks agree
  // although 3 is not in <2>.
  const auto z6 = gen_cyclic(6);
  CHECK_FALSE(submagma_membership(z6, 3, ElementSet(6, {2})));
  CHECK(submagma_rank(z6, ElementSet(6, {2})).rank == 1);
  CHECK(submagma_rank(z6, ElementSet(6, {2, 3})).rank == 1);
  CHECK(membership_via_rank(z6, 3, ElementSet(6, {2})));
}

TEST_CASE("ring rank") {
  const auto cube = gen_ring_boolean_cube(3);
  const auto summary = ring_rank_summary(cube);
  CHECK(summary.ring.rank == 2);
  CHECK(summary.additive_group.rank == 3);
  CHECK(summary.multiplicative_monoid.rank == 4);
  CHECK(verify_ring_witness(cube, summary.ring));
  CHECK(ring_rank(gen_ring_modular(2)).rank == 1);
  CHECK(ring_rank(gen_ring_modular(3)).rank == 1);
  CHECK(ring_rank(gen_ring_modular(5)).rank == 1);
  CHECK(ring_rank(gen_ring_gf4()).rank == 1);
  CHECK(ring_rank(gen_ring_modular(1)).rank == 1);
}

TEST_CASE("ring rank matches the oracle and the side bound") {
  for (const auto& [name, r] : corpus_rings(16)) {
    INFO(name);
    const std::size_t n = r.order();
    std::size_t expected = n;
    for (oracle::Mask m = 1; m <= oracle::full(n); ++m) {
      const auto size = static_cast<std::size_t>(std::popcount(m));
      if (size < expected && oracle::ring_closure(r, m) == oracle::full(n)) expected = size;
    }
    const auto s = ring_rank_summary(r);
    CHECK(s.ring.rank == expected);
    CHECK(s.ring.rank <= std::min(s.additive_group.rank, s.multiplicative_monoid.rank));
  }
}

TEST_CASE("witnesses of minimum size are independent in groups") {
  for (const auto& [name, t] : corpus_groups(16)) {
    INFO(name);
    const auto rep = group_rank(t);
    CHECK(is_independent(t, *rep.generating_set()));
  }
}

TEST_CASE("verify_witness rejects wrong witnesses") {
  RankReport rep;
  rep.rank = 1;
  rep.witness = ElementSet(6, {2});
  CHECK_FALSE(verify_witness(gen_cyclic(6), rep));
  rep.witness = ElementSet(6, {1});
  CHECK(verify_witness(gen_cyclic(6), rep));
  rep.rank = 2;
  CHECK_FALSE(verify_witness(gen_cyclic(6), rep));
}
