#include <algorithm>
#include <memory>

#include "doctest.h"

#include "cgt/errors.hpp"
#include "cgt/generic_hecke.hpp"
#include "cgt/hecke.hpp"

using namespace cgt;

namespace {

struct Built {
  std::unique_ptr<LieInstance> inst;
  std::unique_ptr<CharacterTable> table;
};

const Built& built(Family f, std::uint32_t q) {
  static std::map<std::pair<int, std::uint32_t>, Built> cache;
  auto& b = cache[{static_cast<int>(f), q}];
  if (!b.inst) {
    b.inst = std::make_unique<LieInstance>(f, q);
    b.table = std::make_unique<CharacterTable>(character_table(b.inst->G()));
  }
  return b;
}

HeckeModule module(Family f, std::uint32_t q, const char* kind) {
  const auto& b = built(f, q);
  return HeckeModule(*b.inst, instance_character(*b.inst, kind), *b.table);
}

std::vector<std::uint64_t> degrees(const HeckeModule& m) {
  std::vector<std::uint64_t> d;
  for (const auto& c : m.constituents()) d.push_back(c.degree);
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<std::uint64_t> mults(const HeckeModule& m) {
  std::vector<std::uint64_t> d;
  for (const auto& c : m.constituents()) d.push_back(c.multiplicity);
  std::sort(d.begin(), d.end());
  return d;
}

bool swapped(const HeckeModule& m) {
  return std::any_of(m.constituents().begin(), m.constituents().end(),
                     [](const Constituent& c) { return c.sigma_row != c.row; });
}

}  // namespace

TEST_CASE("instances") {
  const auto& s7 = *built(Family::SL2, 7).inst;
  CHECK(s7.G().order() == 336);
  CHECK(s7.B().order() == 42);
  CHECK(s7.num_cosets() == 8);
  CHECK(s7.structure_ok());

  const auto& g3 = *built(Family::GL2, 3).inst;
  CHECK(g3.G().order() == 48);
  CHECK(g3.num_cosets() == 4);
  CHECK(g3.structure_ok());

  const auto& sp = *built(Family::SP4, 3).inst;
  CHECK(sp.G().order() == 51840);
  // 1 + 2q + 2q^2 + 2q^3 + q^4 at q = 3
  CHECK(sp.num_cosets() == 160);
  CHECK(sp.B().order() == 51840 / 160);
  CHECK(sp.structure_ok());

  CHECK(family_name(Family::SP4, 3) == "Sp4(3)");
  CHECK(parse_family("gl2") == Family::GL2);
  CHECK_THROWS_AS(parse_family("e8"), InputError);
}

TEST_CASE("coset action") {
  const auto& inst = *built(Family::SL2, 5).inst;
  CHECK(inst.coset_rep(0).is_identity());
  CHECK(inst.coset_length(0) == 0);
  for (const auto& g : inst.G().generators())
    for (std::size_t i = 0; i < inst.num_cosets(); ++i) {
      auto [j, b] = inst.coset_action(i, g);
      REQUIRE(inst.B().contains(b));
      REQUIRE(inst.coset_rep(i) * g == b * inst.coset_rep(j));
    }
}

TEST_CASE("Ind counts") {
  for (auto [f, q] : std::vector<std::pair<Family, std::uint32_t>>{{Family::SL2, 5}, {Family::GL2, 3}, {Family::SP4, 3}}) {
    const auto& inst = *built(f, q).inst;
    const auto& W = inst.weyl();
    for (std::size_t w = 0; w < W.size(); ++w) {
      std::uint64_t expect = 1;
      for (int i = 0; i < W.length(w); ++i) expect *= q;
      REQUIRE(inst.ind_count(w) == expect);
    }
  }
}

TEST_CASE("SL2 principal series") {
  for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u}) {
    CAPTURE(q);
    auto m = module(Family::SL2, q, "trivial");
    CHECK(m.ok());
    CHECK(m.dim() == q + 1);
    CHECK(m.module_character_ok());
    CHECK(m.commutant_dim() == 2);
    CHECK(m.intertwiners_commute());
    CHECK(degrees(m) == std::vector<std::uint64_t>{1, q});
    REQUIRE(m.quadratic().size() == 1);
    const auto& qd = m.quadratic()[0];
    CHECK(qd.relation_holds);
    CHECK(qd.ind_relation == Rational(q));
    CHECK(qd.ind_count == q);
    CHECK(qd.p == q);
    CHECK((qd.epsilon == 1 || qd.epsilon == -1));
    // T_s^2 = q + (q - 1) T_s
    CHECK(m.t_const(1, 1, 0) == Rational(q));
    CHECK(m.t_const(1, 1, 1) == Rational(q - 1));
    CHECK_FALSE(swapped(m));

    auto n = module(Family::SL2, q, "quadratic");
    CHECK(n.ok());
    CHECK(degrees(n) == std::vector<std::uint64_t>{(q + 1) / 2, (q + 1) / 2});
    REQUIRE(n.quadratic().size() == 1);
    CHECK(n.quadratic()[0].p == 1);
    CHECK(n.quadratic()[0].c.is_zero());
    CHECK(n.quadratic()[0].ind_relation == Rational(q));
    CHECK(n.relative().c.size() == 2);
    CHECK(n.galois_prediction_ok());
    bool pm3 = q % 8 == 3 || q % 8 == 5;
    CHECK(swapped(n) == pm3);
  }
}

TEST_CASE("GL2(3)") {
  for (const char* k : {"trivial", "quadratic"}) {
    auto m = module(Family::GL2, 3, k);
    CHECK(m.ok());
    CHECK(m.dim() == 4);
    CHECK(degrees(m) == std::vector<std::uint64_t>{1, 3});
    CHECK(m.quadratic()[0].p == 3);
  }
}

TEST_CASE("Sp4(3) trivial series") {
  auto m = module(Family::SP4, 3, "trivial");
  CHECK(m.ok());
  CHECK(m.dim() == 160);
  CHECK(m.commutant_dim() == 8);
  CHECK(m.sum_mult_squares() == 8);
  CHECK(mults(m) == std::vector<std::uint64_t>{1, 1, 1, 1, 2});
  CHECK(degrees(m) == std::vector<std::uint64_t>{1, 15, 15, 24, 81});
  CHECK(m.braid_ok());
  CHECK(m.t_rational());
  for (const auto& qd : m.quadratic()) {
    if (qd.length != 1) continue;
    CHECK(qd.ind_relation == Rational(3));
    CHECK(qd.ind_count == 3);
    CHECK(qd.p == 3);
  }
  for (const auto& c : m.constituents()) CHECK(c.all_rational);
  CHECK_FALSE(swapped(m));
}

TEST_CASE("Sp4(3) quadratic series") {
  auto m = module(Family::SP4, 3, "quadratic");
  CHECK(m.ok());
  CHECK(m.relative().r_type == "A1xA1");
  CHECK(m.relative().c.size() == 2);
  CHECK(m.commutant_dim() == m.w_lambda().size());
  CHECK(m.galois_prediction_ok());
  // 3 = 3 mod 8 and C(lambda) has an odd-length element: sigma moves something
  CHECK(swapped(m));
  for (const auto& qd : m.quadratic()) {
    if (!qd.relevant) continue;
    std::uint64_t ql = 1;
    for (int i = 0; i < qd.length; ++i) ql *= 3;
    CHECK(qd.ind_relation == Rational(ql));
    CHECK(qd.ind_count == ql);
    CHECK((qd.p == 1 || qd.p == 3));
  }
}

TEST_CASE("principal series rows") {
  const auto& b = built(Family::SL2, 7);
  auto rows = principal_series_rows(*b.inst, *b.table);
  // every row except the (q-1)/2 cuspidal ones and the discrete series
  for (auto r : rows) CHECK(b.table->degree(r) != 3);
  CHECK(std::find_if(rows.begin(), rows.end(), [&](std::size_t r) { return b.table->degree(r) == 7; }) !=
        rows.end());
}

TEST_CASE("generic hecke algebras") {
  GenericHecke a1("A1");
  CHECK(a1.size() == 2);
  CHECK(a1.specializes_to_group_algebra());
  auto s = a1.index_of_word({0});
  auto spec = a1.specialize({Rational(5)});
  CHECK(spec[(s * 2 + s) * 2 + 0] == Rational(5));
  CHECK(spec[(s * 2 + s) * 2 + s] == Rational(4));

  GenericHecke b2("B2");
  CHECK(b2.size() == 8);
  CHECK(b2.num_params() == 2);
  CHECK(b2.specializes_to_group_algebra());
  std::vector<Rational> u{3, 3};
  CHECK(b2.center_dimension(u) == 5);
  CHECK(b2.num_linear_characters(u) == 4);
  CHECK(b2.irreducible_degrees(u) == std::vector<std::uint64_t>{1, 1, 1, 1, 2});
  // braid relation in the generic algebra
  CHECK(b2.index_of_word({0, 1, 0, 1}) == b2.index_of_word({1, 0, 1, 0}));

  GenericHecke aa("A1xA1");
  CHECK(aa.irreducible_degrees({Rational(3), Rational(1)}) == std::vector<std::uint64_t>{1, 1, 1, 1});
  CHECK_THROWS(GenericHecke("G2"));
}

TEST_CASE("generic algebra matches the endomorphism algebras") {
  std::string why;
  CHECK(matches_module(GenericHecke("A1"), module(Family::SL2, 5, "trivial"), &why));
  CHECK(matches_module(GenericHecke("A1"), module(Family::SL2, 9, "trivial"), &why));
  CHECK(matches_module(GenericHecke("A1"), module(Family::GL2, 3, "quadratic"), &why));
  CHECK(matches_module(GenericHecke("B2"), module(Family::SP4, 3, "trivial"), &why));
  CHECK(matches_module(GenericHecke("A1xA1"), module(Family::SP4, 3, "quadratic"), &why));
  CHECK_FALSE(matches_module(GenericHecke("B2"), module(Family::SL2, 5, "trivial"), &why));
}

TEST_CASE("json report") {
  auto m = module(Family::SL2, 5, "quadratic");
  auto j = hecke_to_json(m);
  CHECK(j["instance"] == "SL2(5)");
  CHECK(j["induced_dimension"] == 6);
  CHECK(j["ok"] == true);
  CHECK(j["quadratic"][0]["p"] == 1);
}
