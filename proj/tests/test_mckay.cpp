#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aus/errors.hpp"
#include "aus/mckay.hpp"

using namespace aus;

namespace {

Character constant(const CharacterTable& t, long v) { return Character(t.classes.size(), Cyclotomic(t.conductor, v)); }

Character regular_character(const CharacterTable& t) {
  Character r = constant(t, 0);
  r[0] = Cyclotomic(t.conductor, t.order);
  return r;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Scalar>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<Scalar>{1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<Scalar>{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<Scalar>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<Scalar>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12).size() == 5);
  CHECK_THROWS_AS(cyclotomic_polynomial(0), std::invalid_argument);
}

TEST_CASE("cyclotomic arithmetic") {
  auto w = Cyclotomic::root(3, 1);
  CHECK(w * w * w == Cyclotomic(3, 1));
  CHECK(w + w * w == Cyclotomic(3, -1));
  CHECK(w.conj() == w * w);
  CHECK((w * w.conj()).rational() == 1);
  CHECK(Cyclotomic::root(2, 1) == Cyclotomic(2, -1));
  auto i = Cyclotomic::root(4, 1);
  CHECK(i * i == Cyclotomic(4, -1));
  CHECK_FALSE(i.is_rational());
  CHECK_THROWS_AS(i.rational(), std::domain_error);
  CHECK_THROWS_AS(w + i, std::invalid_argument);
  CHECK(Cyclotomic(5, 0).str() == "0");
}

TEST_CASE("tables validate") {
  CHECK_NOTHROW(trivial_table().validate());
  for (int n = 1; n <= 6; ++n) CHECK_NOTHROW(cyclic_table(n).validate());
  auto bad = cyclic_table(3);
  bad.irr[1] = bad.irr[2];
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  auto sizes = cyclic_table(2);
  sizes.order = 3;
  CHECK_THROWS_AS(sizes.validate(), std::invalid_argument);
}

TEST_CASE("inner products") {
  auto t = cyclic_table(2);
  for (auto& row : t.irr) CHECK(inner_product(row, row, t) == 1);
  Character v = cyclic_sl2_character(2);
  CHECK(v[1] == Cyclotomic(2, -2));
  CHECK(inner_product(v, t.irr[1], t) == 2);
  auto tr = trivial_table();
  CHECK(inner_product(tr.irr[0], tr.irr[0], tr) == 1);
  CHECK_THROWS_AS(inner_product(tr.irr[0], t.irr[0], t), std::invalid_argument);
}

TEST_CASE("decompose characters") {
  for (int n : {2, 3, 4}) {
    auto t = cyclic_table(n);
    auto m = decompose_character(regular_character(t), t);
    for (int x : m) CHECK(x == 1);
    auto ind = decompose_character(t.irr[1], t);
    for (int j = 0; j < n; ++j) CHECK(ind[j] == (j == 1 ? 1 : 0));
  }
  auto t3 = cyclic_table(3);
  CHECK(decompose_character(cyclic_sl2_character(3), t3) == std::vector<int>{0, 1, 1});
  Character half = constant(t3, 0);
  half[0] = Cyclotomic(3, 1);
  CHECK_THROWS_AS(decompose_character(half, t3), NonIntegerMultiplicity);
}

TEST_CASE("exterior powers") {
  auto t = cyclic_table(3);
  auto v = cyclic_sl2_character(3);
  auto s = exterior_power(v, 2, t);
  for (auto& x : s) CHECK(x == Cyclotomic(3, 1));
  // ∧^1 V = V, ∧^3 V = 0 for a 2-dimensional V.
  CHECK(exterior_power(v, 1, t) == v);
  for (auto& x : exterior_power(v, 3, t)) CHECK(x == Cyclotomic(3, 0));
  auto nomaps = t;
  for (auto& c : nomaps.classes) c.power.clear();
  CHECK_THROWS_AS(exterior_power(v, 2, nomaps), MissingPowerMaps);
}

TEST_CASE("mckay quiver of the trivial group") {
  auto t = trivial_table();
  auto q = mckay_quiver(t, {Cyclotomic(1, 2)}, 2);
  CHECK(q.arrows == std::vector<std::vector<int>>{{2}});
  CHECK(q.dotted == std::vector<int>{0});
}

TEST_CASE("mckay quiver of C2") {
  auto t = cyclic_table(2);
  auto q = mckay_quiver(t, cyclic_sl2_character(2), 2);
  CHECK(q.arrows == std::vector<std::vector<int>>{{0, 2}, {2, 0}});
  CHECK(q.dotted == std::vector<int>{0, 1});
}

TEST_CASE("mckay quiver of C3") {
  auto t = cyclic_table(3);
  auto q = mckay_quiver(t, cyclic_sl2_character(3), 2);
  CHECK(q.arrows == std::vector<std::vector<int>>{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK(q.dotted == std::vector<int>{0, 1, 2});
}

TEST_CASE("mckay quiver invariants") {
  for (int n = 2; n <= 6; ++n) {
    auto t = cyclic_table(n);
    auto q = mckay_quiver(t, cyclic_sl2_character(n), 2);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) CHECK(q.arrows[x][y] == q.arrows[y][x]);
    for (int y = 0; y < n; ++y) {
      int s = 0;
      for (int x = 0; x < n; ++x) s += q.arrows[x][y];
      CHECK(s == 2);
    }
    std::vector<int> seen(n, 0);
    for (int x : q.dotted) ++seen[x];
    for (int c : seen) CHECK(c == 1);
  }
}

TEST_CASE("mckay quiver with a non-trivial determinant") {
  // C3 acting on V = χ1 ⊕ χ1: ∧^2 V = χ2, so τ shifts by 2.
  auto t = cyclic_table(3);
  Character v = char_mul(constant(t, 2), t.irr[1]);
  auto q = mckay_quiver(t, v, 2);
  CHECK(q.dotted == std::vector<int>{2, 0, 1});
  CHECK(q.arrows[1][0] == 2);
  auto q2 = mckay_quiver(t, v, 2, t.irr[0]);
  CHECK(q2.dotted == std::vector<int>{0, 1, 2});
  CHECK_THROWS_AS(mckay_quiver(t, v, 3), PreconditionFailed);
  CHECK_THROWS_AS(mckay_quiver(t, v, 1), std::invalid_argument);
  CHECK_THROWS_AS(mckay_quiver(t, v, 2, char_mul(constant(t, 2), t.irr[0])), NonIntegerMultiplicity);
}
