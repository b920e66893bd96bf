#include "doctest.h"

#include "mtcm/error.hpp"
#include "mtcm/finite_group.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace mtcm;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an mtcm::Error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("make_group basic shapes") {
  auto c2 = make_group(cyclic(2));
  CHECK(c2->order() == 2);
  CHECK(c2->identity() == 0);

  auto c2c4 = make_group(direct_product({cyclic(2), cyclic(4)}));
  CHECK(c2c4->order() == 8);
  CHECK(c2c4->identity() == 0);
  CHECK(c2c4->label(6) == "(1,2)");
  CHECK(c2c4->element_order(6) == 2);

  auto perm4 = make_group(permutations({{1, 2, 3, 0}}));
  CHECK(perm4->order() == oracle::permutation_closure({{1, 2, 3, 0}}).size());
  CHECK(perm4->order() == 4);
  // cyclic: every element is a power of the generator
  CHECK(perm4->element_order(1) == 4);
}

TEST_CASE("permutation closure matches brute force") {
  const std::vector<std::vector<std::vector<std::size_t>>> cases = {
      {{1, 2, 3, 0}, {0, 3, 2, 1}},
      {{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}},
      {{1, 2, 0, 4, 5, 3}},
      {{2, 3, 0, 1}, {1, 0, 3, 2}},
  };
  for (const auto& gens : cases) {
    auto g = make_group(permutations(gens));
    CHECK(g->order() == oracle::permutation_closure(gens).size());
  }
}

TEST_CASE("table spec reproduces the permutation group exactly") {
  auto d4 = fixtures::d4_group();
  auto again = make_group(table(d4->table()));
  CHECK(*again == *d4);
  CHECK(again->order() == 8);
}

TEST_CASE("invalid tables are rejected") {
  CHECK(code_of([] { make_group(table({{0, 1}, {1, 1}})); }) == ErrorCode::InvalidTable);
  CHECK(code_of([] { make_group(table({{0, 1}, {1, 2}})); }) == ErrorCode::NotClosed);
  CHECK(code_of([] { make_group(table({{0, 1}})); }) == ErrorCode::InvalidTable);
  // Latin square with identity 0 that is not associative (order 5 loop).
  const std::vector<std::vector<Element>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK(code_of([&] { make_group(table(loop)); }) == ErrorCode::NotAssociative);
}

TEST_CASE("order cap") {
  CHECK(code_of([] { make_group(cyclic(600)); }) == ErrorCode::OrderCapExceeded);
  CHECK(make_group(cyclic(600), 1000)->order() == 600);
  // S_6 has 720 elements: closure must stop at the cap
  CHECK(code_of([] { make_group(permutations({{1, 0, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 0}})); }) ==
        ErrorCode::OrderCapExceeded);
}

TEST_CASE("dicyclic groups") {
  auto q8 = make_group(dicyclic(2));
  CHECK(q8->order() == 8);
  CHECK(q8->description() == "Q8");
  std::size_t involutions = 0;
  for (Element a = 0; a < 8; ++a)
    if (q8->element_order(a) == 2) ++involutions;
  CHECK(involutions == 1);
  CHECK(make_group(dicyclic(3))->order() == 12);
}

TEST_CASE("subgroup_closure") {
  auto c4 = make_group(cyclic(4));
  CHECK(subgroup_closure(c4, {2}).elements() == std::vector<Element>{0, 2});
  CHECK(subgroup_closure(c4, {}).elements() == std::vector<Element>{0});
  CHECK(subgroup_closure(c4, {1}).size() == 4);

  auto d4 = fixtures::d4_group();
  CHECK(subgroup_closure(d4, {fixtures::kD4S}).elements() ==
        std::vector<Element>{0, fixtures::kD4S});
  CHECK_THROWS_AS(subgroup_closure(d4, {8}), Error);
}

TEST_CASE("Subgroup constructor validates") {
  auto c4 = make_group(cyclic(4));
  CHECK(code_of([&] { Subgroup(c4, {0, 1}); }) == ErrorCode::NotSubgroup);
  CHECK(code_of([&] { Subgroup(c4, {2}); }) == ErrorCode::NotSubgroup);
  CHECK(code_of([&] { Subgroup(c4, {2, 0}); }) == ErrorCode::NotSubgroup);
}

TEST_CASE("coset spaces") {
  auto c4 = make_group(cyclic(4));
  CosetSpace trivial(Subgroup(c4, {0}));
  CHECK(trivial.reps() == std::vector<Element>{0, 1, 2, 3});
  CosetSpace halves(Subgroup(c4, {0, 2}));
  CHECK(halves.reps() == std::vector<Element>{0, 1});

  auto d4 = fixtures::d4_group();
  CosetSpace d4h(Subgroup(d4, {0, fixtures::kD4S}));
  REQUIRE(d4h.size() == 4);
  // H, rH, r^2 H, r^3 H in order of minimal element
  CHECK(d4h.coset_of(0) == 0);
  CHECK(d4h.coset_of(fixtures::kD4R) == 1);
  CHECK(d4h.coset_of(fixtures::kD4R2) == 2);
  CHECK(d4h.coset_of(d4->mul(fixtures::kD4R2, fixtures::kD4R)) == 3);
  const auto sets = oracle::left_cosets(*d4, {0, fixtures::kD4S});
  for (std::size_t j = 0; j < 4; ++j) CHECK(*sets[j].begin() == d4h.rep(j));
}

TEST_CASE("coset action is a homomorphism for every subgroup of small groups") {
  for (const auto& spec : {cyclic(6), direct_product({cyclic(2), cyclic(4)}), dihedral(4),
                           dihedral(6), dicyclic(2)}) {
    auto g = make_group(spec);
    for (const Subgroup& h : overgroups(Subgroup(g, {g->identity()}))) {
      CosetSpace space(h);
      CHECK(space.size() * h.size() == g->order());
      for (Element a = 0; a < g->order(); ++a)
        for (Element b = 0; b < g->order(); ++b)
          for (std::size_t j = 0; j < space.size(); ++j)
            REQUIRE(space.act(g->mul(a, b), j) == space.act(a, space.act(b, j)));
    }
  }
}

TEST_CASE("overgroups of the trivial subgroup are all subgroups") {
  auto d4 = fixtures::d4_group();
  CHECK(overgroups(Subgroup(d4, {0})).size() == 10);
  auto c2cube = make_group(direct_product({cyclic(2), cyclic(2), cyclic(2)}));
  CHECK(overgroups(Subgroup(c2cube, {0})).size() == 16);
}

TEST_CASE("validate_cm_datum") {
  auto c2 = make_group(cyclic(2));
  CHECK(validate_cm_datum(c2, Subgroup(c2, {0}), 1).g_dim == 1);

  auto c4 = make_group(cyclic(4));
  CHECK(code_of([&] { validate_cm_datum(c4, Subgroup(c4, {0}), 1); }) ==
        ErrorCode::NotInvolution);
  CHECK(code_of([&] { validate_cm_datum(c4, Subgroup(c4, {0}), 0); }) ==
        ErrorCode::NotInvolution);
  CHECK(code_of([&] { validate_cm_datum(c4, Subgroup(c4, {0, 2}), 2); }) ==
        ErrorCode::ConjugationFixesField);
  CHECK(code_of([&] { validate_cm_datum(c4, Subgroup(c4, {0}), 9); }) ==
        ErrorCode::InvalidIndex);

  auto d4 = fixtures::d4_group();
  const Subgroup h(d4, {0, fixtures::kD4S});
  const auto datum = validate_cm_datum(d4, h, fixtures::kD4R2);
  CHECK(datum.g_dim == 2);
  CHECK(code_of([&] { validate_cm_datum(d4, Subgroup(d4, {0}), fixtures::kD4S); }) ==
        ErrorCode::NotCentral);
  // r^2 is the only central involution
  CHECK(central_involutions_outside(Subgroup(d4, {0})) == std::vector<Element>{fixtures::kD4R2});
}

TEST_CASE("conjugation acts without fixed points on every corpus datum") {
  for (const auto& d : fixtures::corpus_data(16)) {
    for (std::size_t j = 0; j < d.sigma.size(); ++j) {
      REQUIRE(d.conjugate(j) != j);
      REQUIRE(d.conjugate(d.conjugate(j)) == j);
    }
  }
}
