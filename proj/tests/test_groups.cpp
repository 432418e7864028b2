#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "cgt/conjugacy.hpp"
#include "cgt/errors.hpp"
#include "cgt/group_spec.hpp"
#include "cgt/matrix_group.hpp"
#include "cgt/sylow.hpp"

using namespace cgt;

namespace {

PermGroup s4() {
  return group_from_generators(4, {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{0, 1, 2, 3}})});
}

PermGroup sl2(std::uint32_t q) {
  return matrix_group_to_perm(q, 2, sl2_generators(FiniteField(q)), MatrixAction::Vectors);
}

std::multiset<std::size_t> sizes_of(const ConjClasses& c) {
  return {c.sizes().begin(), c.sizes().end()};
}

}  // namespace

TEST_CASE("perm basics") {
  Perm a = Perm::from_cycles(3, {{0, 1}});
  Perm b = Perm::from_cycles(3, {{1, 2}});
  // b first, then a
  CHECK((a * b)[1] == a[b[1]]);
  CHECK((a * b).order() == 3);
  CHECK(a.inverse() == a);
  CHECK(Perm::identity(5).is_identity());
  CHECK_THROWS_AS(Perm(std::vector<Point>{0, 0, 1}), InputError);
}

TEST_CASE("group orders") {
  CHECK(s4().order() == 24);
  CHECK(group_from_generators(3, {}).order() == 1);
  CHECK(quaternion_group().order() == 8);
  CHECK(quaternion_group().degree() == 8);
  CHECK(sl2(3).order() == 3 * 8);
  FiniteField F3(3);
  CHECK(matrix_group_to_perm(3, 2, gl2_generators(F3), MatrixAction::Vectors).order() == 48);
  // q^4 (q^2 - 1)(q^4 - 1) at q = 3
  auto sp4 = matrix_group_to_perm(3, 4, sp4_generators(F3), MatrixAction::Vectors);
  CHECK(sp4.degree() == 80);
  CHECK(sp4.order() == 81ull * 8 * 80);
  for (std::uint32_t q : {5u, 7u, 9u, 11u}) {
    FiniteField F(q);
    CHECK(sl2(q).order() == std::uint64_t(q) * (q * q - 1));
    CHECK(matrix_group_to_perm(q, 2, gl2_generators(F), MatrixAction::Vectors).order() ==
          std::uint64_t(q) * (q - 1) * (q * q - 1));
  }
}

TEST_CASE("orders agree with brute-force closure") {
  for (const auto& g : {s4(), sl2(3), dihedral_group(6), semidihedral16(), alternating_group(5)}) {
    auto elems = oracle::closure(g.generators(), g.degree());
    CHECK(elems.size() == g.order());
    for (const auto& x : elems) REQUIRE(g.contains(x));
  }
  CHECK_FALSE(s4().contains(Perm::identity(5)));
}

TEST_CASE("size guard and bad generators") {
  CHECK_THROWS_AS(symmetric_group(9).order(), SizeGuardError);
  CHECK_THROWS_AS(group_from_generators(4, {Perm::identity(3)}), InputError);
  FiniteField F(3);
  FqMatrix sing{2, {1, 1, 1, 1}};
  CHECK_THROWS_AS(matrix_group_to_perm(3, 2, {sing}, MatrixAction::Vectors), InputError);
  CHECK_THROWS_AS(FiniteField(6), InputError);
}

TEST_CASE("matrix to perm is a homomorphism") {
  FiniteField F(5);
  MatrixPermAction act(5, 2, MatrixAction::Vectors);
  auto gens = gl2_generators(F);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    auto x = gens[rng() % gens.size()], y = gens[rng() % gens.size()];
    auto xy = mat_mul(F, x, y);
    REQUIRE(act.to_perm(xy) == act.to_perm(x) * act.to_perm(y));
    REQUIRE(act.to_matrix(act.to_perm(xy)) == xy);
  }
}

TEST_CASE("element list words") {
  auto g = sl2(3);
  const auto& el = g.elements();
  CHECK(el.size() == 24);
  CHECK(el.elements[0].is_identity());
  for (std::uint32_t i = 0; i < el.size(); ++i) {
    auto w = el.word(i);
    Perm p = Perm::identity(g.degree());
    for (auto it = w.rbegin(); it != w.rend(); ++it) p = g.generators()[*it] * p;
    REQUIRE(p == el.elements[i]);
    REQUIRE(el.index_of(el.elements[i]) == i);
  }
}

TEST_CASE("conjugacy classes") {
  ConjClasses c4(s4());
  CHECK(c4.size() == 5);
  CHECK(sizes_of(c4) == std::multiset<std::size_t>{1, 6, 3, 8, 6});
  CHECK(c4.class_size(0) == 1);
  CHECK(c4.rep(0).is_identity());

  auto ab = cyclic_group(12);
  CHECK(ConjClasses(ab).size() == 12);

  ConjClasses cs(sl2(3));
  CHECK(cs.size() == 7);

  for (const auto& g : {s4(), sl2(3), semidihedral16(), alternating_group(5)}) {
    ConjClasses c(g);
    auto expect = oracle::class_sizes(oracle::closure(g.generators(), g.degree()));
    CHECK(sizes_of(c) == expect);
  }
}

TEST_CASE("class_of is conjugation invariant") {
  auto g = sl2(5);
  ConjClasses c(g);
  const auto& el = g.elements();
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const auto& x = el.elements[rng() % el.size()];
    const auto& h = el.elements[rng() % el.size()];
    REQUIRE(c.class_of(x) == c.class_of(h * x * h.inverse()));
  }
  CHECK_THROWS_AS(c.class_of(Perm::identity(3)), InputError);
}

TEST_CASE("power maps") {
  auto s3 = symmetric_group(3);
  ConjClasses c(s3);
  auto id = c.power_map(1);
  for (std::size_t i = 0; i < c.size(); ++i) CHECK(id[i] == i);
  for (auto x : c.power_map(6)) CHECK(x == 0);
  auto sq = c.power_map(2);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.element_order(i) == 2) CHECK(sq[i] == 0);
    if (c.element_order(i) == 3) CHECK(sq[i] == i);
  }
}

TEST_CASE("power map composition") {
  auto g = sl2(7);
  ConjClasses c(g);
  const std::int64_t e = static_cast<std::int64_t>(c.exponent());
  for (std::int64_t m1 : {5, 11, 13}) {
    for (std::int64_t m2 : {5, 17, 19}) {
      auto p1 = c.power_map(m1), p2 = c.power_map(m2), p12 = c.power_map(m1 * m2 % e);
      for (std::size_t i = 0; i < c.size(); ++i) REQUIRE(p1[p2[i]] == p12[i]);
    }
  }
}

TEST_CASE("sylow and normalizer") {
  auto g = s4();
  auto p = sylow2(g);
  CHECK(p.order() == 8);
  CHECK(normalizer(g, p).order() == 8);
  CHECK(normalizer(g, g).order() == 24);
  CHECK(is_self_normalizing_sylow2(g));

  auto c3 = cyclic_group(3);
  CHECK(sylow2(c3).order() == 1);
  CHECK_FALSE(is_self_normalizing_sylow2(c3));

  auto s = sl2(3);
  auto q8 = sylow2(s);
  CHECK(q8.order() == 8);
  CHECK(normalizer(s, q8).order() == 24);
  CHECK_FALSE(is_self_normalizing_sylow2(s));

  auto sl25 = sl2(5);
  CHECK(normalizer(sl25, sylow2(sl25)).order() == 24);
}

TEST_CASE("sylow orders across the corpus") {
  for (const auto& spec : builtin_corpus({false})) {
    auto g = spec.build(kDefaultMaxOrder);
    auto p = sylow2(g);
    auto n = normalizer(g, p);
    INFO(spec.name);
    REQUIRE(p.order() == two_part(g.order()));
    REQUIRE(p.is_subgroup_of(n));
    REQUIRE(n.is_subgroup_of(g));
  }
}
