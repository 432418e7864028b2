#include <random>

#include "doctest.h"

#include "cgt/weyl.hpp"

using namespace cgt;

namespace {

std::size_t count_odd(const WeylGroup& W, const std::vector<std::size_t>& c) {
  std::size_t n = 0;
  for (auto w : c) n += W.length(w) % 2;
  return n;
}

}  // namespace

TEST_CASE("root counts") {
  CHECK(RootSystem(RootKind::B, 2).roots().size() == 8);
  CHECK(RootSystem(RootKind::D, 4).roots().size() == 24);
  CHECK(RootSystem(RootKind::C, 3).roots().size() == 18);
  for (int n = 2; n <= 5; ++n) {
    CHECK(RootSystem(RootKind::B, n).roots().size() == std::size_t(2 * n * n));
    CHECK(RootSystem(RootKind::C, n).num_positive() == std::size_t(n * n));
  }
  CHECK_THROWS(RootSystem(RootKind::D, 3));
}

TEST_CASE("lengths") {
  WeylGroup W{RootSystem(RootKind::B, 2)};
  CHECK(W.size() == 8);
  CHECK(W.length(0) == 0);
  CHECK(W.length(W.longest()) == 4);
  for (const auto& s : W.simple_reflections()) CHECK(W.length(W.index_of(s)) == 1);
  for (int n : {3, 4}) {
    WeylGroup Wb{RootSystem(RootKind::B, n)};
    CHECK(Wb.size() == weyl_order(RootKind::B, n));
    CHECK(Wb.length(Wb.longest()) == n * n);
    WeylGroup Wd{RootSystem(RootKind::D, n + 1)};
    CHECK(Wd.size() == weyl_order(RootKind::D, n + 1));
  }
  // reduced words reproduce the element and have the right length
  WeylGroup W3{RootSystem(RootKind::C, 3)};
  for (std::size_t i = 0; i < W3.size(); ++i) {
    auto word = W3.reduced_word(i);
    REQUIRE(int(word.size()) == W3.length(i));
    auto p = SignedPerm::identity(3);
    for (int s : word) p = p * W3.simple_reflections()[s];
    REQUIRE(p == W3.element(i));
  }
}

TEST_CASE("weyl action on characters") {
  RootSystem rs(RootKind::B, 2);
  WeylGroup W{rs};
  auto l = make_character(5, {2, 0});
  for (std::size_t i = 0; i < W.size(); ++i)
    CHECK(weyl_action_on_character(rs, W.element(i), make_character(5, {0, 0})).is_trivial());
  CHECK(weyl_action_on_character(rs, W.element(0), l) == l);
  auto flip = rs.reflection({1, 0});
  CHECK(weyl_action_on_character(rs, flip, l) == l);
}

TEST_CASE("relative weyl groups") {
  WeylGroup W{RootSystem(RootKind::B, 3)};
  auto d = relative_weyl(W, make_character(3, {0, 0, 0}));
  CHECK(d.w_lambda.size() == 48);
  CHECK(d.r.size() == 48);
  CHECK(d.c.size() == 1);
  CHECK(d.structure_ok());

  WeylGroup C2{RootSystem(RootKind::C, 2)};
  auto e = relative_weyl(C2, make_character(5, {2, 2}));
  CHECK(8 % e.w_lambda.size() == 0);
  CHECK(e.structure_ok());
  // brute force stabilizer
  std::size_t stab = 0;
  for (std::size_t i = 0; i < C2.size(); ++i)
    stab += weyl_action_on_character(C2.roots(), C2.element(i), e.lambda) == e.lambda;
  CHECK(stab == e.w_lambda.size());
  CHECK(e.w_lambda.size() == 8);
  CHECK(e.phi_lambda.size() == 4);
  for (int idx : e.phi_lambda) {
    const auto& a = C2.roots().roots()[idx];
    CHECK(std::abs(a[0]) + std::abs(a[1]) == 2);
    CHECK(a[0] != 0);
    CHECK(a[1] != 0);
  }
  CHECK(e.c.size() == 2);
}

TEST_CASE("type C witnesses") {
  {
    WeylGroup W{RootSystem(RootKind::C, 3)};
    auto l = witness_lambda_type_C(3, 5);
    CHECK(l.c == std::vector<std::int64_t>{2, 2, 0});
    auto d = relative_weyl(W, l);
    // D2 x B1, every rank-1 component named A1
    CHECK(d.r_type == "A1xA1xA1");
    CHECK(d.r.size() == 8);
    CHECK(d.w_lambda.size() == 16);
    CHECK(d.c.size() == 2);
    CHECK(count_odd(W, d.c) == 1);
  }
  {
    WeylGroup W{RootSystem(RootKind::C, 5)};
    CHECK(witness_k(5) == 4);
    auto d = relative_weyl(W, witness_lambda_type_C(5, 5));
    // D4 x B1: 192 * 2
    CHECK(d.r.size() == 384);
    CHECK(count_odd(W, d.c) > 0);
  }
  {
    WeylGroup W{RootSystem(RootKind::C, 4)};
    CHECK(witness_k(4) == 2);
    auto d = relative_weyl(W, witness_lambda_type_C(4, 13));
    // D2 x B2: 4 * 8
    CHECK(d.r.size() == 32);
    CHECK(count_odd(W, d.c) > 0);
  }
  CHECK_THROWS(witness_lambda_type_C(2, 5));
  CHECK_THROWS(witness_lambda_type_C(3, 7));
}

TEST_CASE("r_sigma") {
  WeylGroup W{RootSystem(RootKind::C, 3)};
  for (std::uint32_t q : {5u, 7u, 13u}) {
    const std::int64_t e = (q - 1) / 2;
    auto d = relative_weyl(W, make_character(q, {e, e, 0}));
    for (auto w : d.w_lambda) {
      if (q % 8 == 7) CHECK(r_sigma(W, w, q, d) == 1);
      if (d.in_r(w)) CHECK(r_sigma(W, w, q, d) == 1);
    }
    CHECK(count_odd(W, d.c) == 1);
    for (auto w : d.c)
      if (W.length(w) % 2 == 1 && q % 8 == 5) CHECK(r_sigma(W, w, q, d) == -1);
    // multiplicative on W(lambda)
    for (auto v : d.w_lambda)
      for (auto w : d.w_lambda)
        REQUIRE(r_sigma(W, W.mul(v, w), q, d) == r_sigma(W, v, q, d) * r_sigma(W, w, q, d));
  }
  auto d = relative_weyl(W, make_character(5, {0, 0, 0}));
  // w outside W(lambda) for a nontrivial lambda
  auto d2 = relative_weyl(W, make_character(5, {1, 0, 0}));
  bool threw = false;
  for (std::size_t w = 0; w < W.size() && !threw; ++w)
    if (!d2.contains(w)) {
      CHECK_THROWS(r_sigma(W, w, 5, d2));
      threw = true;
    }
  CHECK(threw);
  CHECK(d.c.size() == 1);
}

TEST_CASE("relative weyl invariants on random characters") {
  std::mt19937_64 rng(5);
  for (auto [kind, n] : std::vector<std::pair<RootKind, int>>{{RootKind::B, 3}, {RootKind::C, 3}, {RootKind::D, 4}}) {
    WeylGroup W{RootSystem(kind, n)};
    for (int i = 0; i < 25; ++i) {
      std::uint32_t q = std::vector<std::uint32_t>{3, 5, 7, 9}[rng() % 4];
      std::vector<std::int64_t> c(n);
      for (auto& x : c) x = rng() % (q - 1);
      auto d = relative_weyl(W, make_character(q, c));
      REQUIRE(d.order_identity);
      REQUIRE(d.r_normal);
      REQUIRE(d.trivial_intersection);
      REQUIRE(d.phi_closed);
      REQUIRE(d.w_lambda.size() == d.r.size() * d.c.size());
    }
  }
}

TEST_CASE("surveys") {
  auto b3 = survey_odd_index(RootKind::B, 3, 3);
  CHECK(b3.num_characters == 8);
  CHECK(b3.odd_length_count == 0);
  CHECK(b3.all_structure_ok);
  CHECK(b3.all_wreath_form);

  auto d4 = survey_odd_index(RootKind::D, 4, 5);
  CHECK(d4.odd_length_count == 0);
  CHECK(d4.all_structure_ok);

  auto c3 = survey_odd_index(RootKind::C, 3, 5);
  CHECK(c3.odd_length_count >= 1);
  CHECK(survey_to_json(c3).is_object());
}
