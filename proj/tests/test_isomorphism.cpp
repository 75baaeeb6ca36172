#include <doctest.h>

#include <numeric>

#include "cayley/corpus.hpp"
#include "cayley/isomorphism.hpp"
#include "cayley/rank_variants.hpp"
#include "oracles.hpp"

using namespace cayley;

namespace {

constexpr Element a = 0, b = 1, c = 2;

CayleyTable quasigroup3() { return CayleyTable::from_rows({{a, b, c}, {c, a, b}, {b, c, a}}); }

IsoOptions brute() {
  IsoOptions o;
  o.mode = IsoMode::brute;
  return o;
}

}  // namespace

TEST_CASE("find cube generating sequence") {
  const auto one = find_cube_generating_sequence(gen_cyclic(1), 1, 1, 0);
  REQUIRE(one);
  CHECK(one->sequence == ElementSequence{0});

  CHECK(find_cube_generating_sequence_exhaustive(quasigroup3(), 3).has_value());
  CHECK_FALSE(find_cube_generating_sequence_exhaustive(quasigroup3(), 2).has_value());
  CHECK_FALSE(find_cube_generating_sequence(quasigroup3(), 2, 500, 9).has_value());

  const auto found = find_cube_generating_sequence(gen_random_latin_square(8, 1), 12, 1000, 4);
  REQUIRE(found);
  CHECK(cube_set(gen_random_latin_square(8, 1), found->sequence, found->tree).is_full());
  CHECK_THROWS_AS(find_cube_generating_sequence(gen_right_zero(3), 3, 10, 0), InputError);
}

TEST_CASE("product equality") {
  const auto q = quasigroup3();
  const auto left = Parenthesization::left_comb(3);
  const auto right = Parenthesization::right_comb(3);
  CHECK(product_equality(q, {a, c, b}, left, {a, c, b}, left));
  CHECK_FALSE(product_equality(q, {b, a, b}, right, {b, a, b}, left));
  const auto z3 = gen_cyclic(3);
  CHECK(product_equality(z3, {1, 2, 2}, left, {1, 2, 2}, right));
}

TEST_CASE("brute force isomorphism") {
  const auto same = brute_force_isomorphic(quasigroup3(), quasigroup3());
  CHECK(same.result == IsoResult::isomorphic);
  CHECK(same.bijection == std::vector<Element>{0, 1, 2});
  CHECK(brute_force_isomorphic(gen_cyclic(3), gen_cyclic(4)).result == IsoResult::not_isomorphic);
  const auto shuffled = brute_force_isomorphic(gen_shuffled(gen_cyclic(5), 1), gen_shuffled(gen_cyclic(5), 2));
  CHECK(shuffled.result == IsoResult::isomorphic);
  CHECK(is_isomorphism(gen_shuffled(gen_cyclic(5), 1), gen_shuffled(gen_cyclic(5), 2), *shuffled.bijection));
  CHECK(brute_force_isomorphic(quasigroup3(), gen_cyclic(3)).result == IsoResult::not_isomorphic);
  CHECK(brute_force_isomorphic(gen_cyclic(4), gen_elementary_abelian(2)).result ==
        IsoResult::not_isomorphic);
  CHECK_THROWS_AS(brute_force_isomorphic(gen_cyclic(9), gen_cyclic(9)), InputError);
}

TEST_CASE("cube mode") {
  const auto same = quasigroup_isomorphic(quasigroup3(), quasigroup3());
  REQUIRE(same.result == IsoResult::isomorphic);
  CHECK(same.bijection == std::vector<Element>{0, 1, 2});
  REQUIRE(same.certificate);
  CHECK(cube_set(quasigroup3(), same.certificate->h, same.certificate->tree).is_full());

  CHECK(quasigroup_isomorphic(quasigroup3(), gen_cyclic(3), brute()).result ==
        IsoResult::not_isomorphic);
  const auto v = quasigroup_isomorphic(gen_cyclic(4), gen_elementary_abelian(2));
  CHECK(v.result == IsoResult::not_isomorphic);
  CHECK(quasigroup_isomorphic(gen_cyclic(4), gen_elementary_abelian(2), brute()).result ==
        IsoResult::not_isomorphic);
  CHECK(quasigroup_isomorphic(gen_cyclic(3), gen_cyclic(4)).rejected_by == "order");
  CHECK(quasigroup_isomorphic(quasigroup3(), gen_cyclic(3)).rejected_by == "associativity");
  CHECK_THROWS_AS(quasigroup_isomorphic(gen_right_zero(3), gen_right_zero(3)), InputError);
}

TEST_CASE("cube mode agrees with brute force and the oracle") {
  for (const auto& [name, g, h] : corpus_iso_pairs()) {
    INFO(name);
    const auto cube = quasigroup_isomorphic(g, h);
    const auto perm = quasigroup_isomorphic(g, h, brute());
    CHECK(cube.result == perm.result);
    CHECK((perm.result == IsoResult::isomorphic) == oracle::isomorphic(g, h));
    if (cube.result == IsoResult::isomorphic) CHECK(is_isomorphism(g, h, *cube.bijection));
  }
}

TEST_CASE("sampling cannot prove non-isomorphism") {
  const auto g = gen_subtraction_quasigroup(5);
  CHECK(quasigroup_isomorphic(g, gen_shuffled(g, 3)).result == IsoResult::isomorphic);
  IsoOptions tiny;
  tiny.budget = 1;
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    tiny.seed = seed;
    const auto r = quasigroup_isomorphic(gen_random_latin_square(5, 1), gen_random_latin_square(5, 2), tiny);
    if (r.result == IsoResult::not_isomorphic) CHECK(r.rejected_by.has_value());
    if (r.result == IsoResult::isomorphic) CHECK(r.candidates_examined == 1);
  }
}

TEST_CASE("iso budget on long sequences") {
  SearchConfig cfg;
  cfg.iso_max_k = 2;
  CHECK_THROWS_AS(quasigroup_isomorphic(gen_elementary_abelian(4), gen_elementary_abelian(4), {}, cfg),
                  BudgetError);
}

TEST_CASE("shuffled copies keep every rank") {
  for (const auto& [name, t] : corpus_quasigroups(6)) {
    INFO(name);
    const auto s = gen_shuffled(t, 99);
    const auto ct = check_chain(t);
    const auto cs = check_chain(s);
    CHECK(ct.small == cs.small);
    CHECK(ct.lower == cs.lower);
    CHECK(ct.intermediate == cs.intermediate);
    CHECK(ct.upper == cs.upper);
    CHECK(ct.large == cs.large);
    CHECK(quasigroup_cube_rank(t).rank == quasigroup_cube_rank(s).rank);
  }
}

TEST_CASE("cube mode is deterministic across thread counts") {
  SearchConfig four;
  four.threads = 4;
  for (const auto& [name, g, h] : corpus_iso_pairs()) {
    INFO(name);
    const auto one = quasigroup_isomorphic(g, h);
    const auto many = quasigroup_isomorphic(g, h, {}, four);
    CHECK(one.result == many.result);
    CHECK(one.bijection == many.bijection);
    CHECK(one.candidates_examined == many.candidates_examined);
  }
}
