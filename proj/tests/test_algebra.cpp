#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aus/algebra.hpp"
#include "aus/errors.hpp"

using namespace aus;

TEST_CASE("linear A2") {
  auto a = linear_A(2);
  CHECK(a->dim() == 3);
  CHECK(a->nverts() == 2);
  CHECK(cartan_matrix(a) == std::vector<std::vector<int>>{{1, 1}, {0, 1}});
  CHECK(a->arrows().size() == 1);
}

TEST_CASE("linear A3 and dual numbers") {
  CHECK(linear_A(3)->dim() == 6);
  auto d = dual_numbers();
  CHECK(d->dim() == 2);
  CHECK(d->arrows().size() == 1);
}

TEST_CASE("preprojective algebras") {
  auto p2 = preprojective_A(2);
  CHECK(p2->dim() == 4);
  CHECK(cartan_matrix(p2) == std::vector<std::vector<int>>{{1, 1}, {1, 1}});
  auto p3 = preprojective_A(3);
  CHECK(p3->dim() == 10);
  CHECK(cartan_matrix(p3) == std::vector<std::vector<int>>{{1, 1, 1}, {1, 2, 1}, {1, 1, 1}});
}

TEST_CASE("radical agrees with trace form") {
  for (auto a : {linear_A(3), preprojective_A(2), dual_numbers()}) {
    CHECK(rank(radical_basis(a)) == rank(trace_radical(a)));
    CHECK(rank(hstack({radical_basis(a), trace_radical(a)}, a->field(), a->dim())) == rank(radical_basis(a)));
  }
}

TEST_CASE("small characteristic") {
  auto a = linear_A(3, Field::Fp(2));
  CHECK(a->dim() == 6);
  CHECK(radical_basis(a).cols() == 3);
  CHECK_THROWS_AS(trace_radical(a), FieldTooSmall);
}

TEST_CASE("opposite is an involution on pointers") {
  auto a = preprojective_A(2);
  auto op = a->opposite();
  CHECK(op->opposite() == a);
  CHECK(a->opposite() == op);
  auto l = linear_A(2);
  CHECK(cartan_matrix(l->opposite()) == std::vector<std::vector<int>>{{1, 0}, {1, 1}});
}

TEST_CASE("bad relations") {
  Quiver q{{"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}}};
  CHECK_THROWS_AS(build_path_algebra(q, {{{{Scalar(1), {"a"}}}}}), BadRelation);
  CHECK_THROWS_AS(build_path_algebra(q, {{{{Scalar(1), {"a", "b"}}, {Scalar(1), {"b", "a"}}}}}), BadRelation);
  CHECK_THROWS_AS(build_path_algebra(q, {{{{Scalar(1), {"a", "a"}}}}}), BadRelation);
  CHECK_THROWS_AS(build_path_algebra(q, {{{{Scalar(1), {"z", "a"}}}}}), BadRelation);
}

TEST_CASE("non-admissible") {
  Quiver q{{"1"}, {{"x", "1", "1"}}};
  CHECK_THROWS_AS(build_path_algebra(q, {}, Field::Q(), 6), NotAdmissible);
}

TEST_CASE("non-homogeneous relation") {
  // x^2 = x^3 forces x^2 = 0 in the completion.
  Quiver q{{"1"}, {{"x", "1", "1"}}};
  auto a = build_path_algebra(q, {{{{Scalar(1), {"x", "x"}}, {Scalar(-1), {"x", "x", "x"}}}}});
  CHECK(a->dim() == 2);
}

TEST_CASE("quotient by idempotent ideal") {
  auto a = preprojective_A(3);
  auto q = quotient_by_idempotent_ideal(a, {2});
  CHECK(q->nverts() == 2);
  CHECK(q->dim() == 4);
  CHECK(quotient_by_idempotent_ideal(linear_A(2), {0})->dim() == 1);
  CHECK(quotient_by_idempotent_ideal(linear_A(2), {0, 1})->dim() == 0);
}

TEST_CASE("raw structure constants") {
  // Upper triangular 2x2 matrices: basis E11, E12, E22.
  auto E = [](int r, int c) { return std::make_pair(r, c); };
  std::vector<std::pair<int, int>> b{E(0, 0), E(0, 1), E(1, 1)};
  std::vector<std::vector<std::vector<Scalar>>> c(3, std::vector<std::vector<Scalar>>(3, std::vector<Scalar>(3)));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (b[i].second == b[j].first)
        for (int k = 0; k < 3; ++k)
          if (b[k] == std::make_pair(b[i].first, b[j].second)) c[i][j][k] = 1;
  auto a = algebra_from_constants(Field::Q(), c, 3);
  CHECK(a->nverts() == 2);
  CHECK(a->dim() == 3);
  CHECK(a->arrows().size() == 1);
  CHECK(radical_basis(a).cols() == 1);
}

TEST_CASE("raw non-basic algebra is rejected") {
  // Full 2x2 matrices.
  std::vector<std::vector<std::vector<Scalar>>> c(4, std::vector<std::vector<Scalar>>(4, std::vector<Scalar>(4)));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i % 2 == j / 2) c[i][j][(i / 2) * 2 + j % 2] = 1;
  CHECK_THROWS(algebra_from_constants(Field::Q(), c, 1));
}
