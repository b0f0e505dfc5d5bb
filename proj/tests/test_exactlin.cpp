#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aus/exactlin.hpp"
#include "aus/poly.hpp"

using namespace aus;

TEST_CASE("rank and kernel over Q") {
  Matrix m = Matrix::from_rows(Field::Q(), {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(m) == 2);
  Matrix k = kernel_basis(m);
  CHECK(k.cols() == 1);
  CHECK((m * k).is_zero());
}

TEST_CASE("rank depends on characteristic") {
  auto rows = std::vector<std::vector<long>>{{1, 1}, {1, -1}};
  CHECK(rank(Matrix::from_rows(Field::Q(), rows)) == 2);
  CHECK(rank(Matrix::from_rows(Field::Fp(2), rows)) == 1);
}

TEST_CASE("solve and inverse") {
  Field f = Field::Fp(7);
  Matrix a = Matrix::from_rows(f, {{2, 1}, {1, 1}});
  auto inv = inverse(a);
  REQUIRE(inv);
  CHECK(a * *inv == Matrix::identity(f, 2));
  Matrix sing = Matrix::from_rows(f, {{1, 2}, {2, 4}});
  CHECK(!inverse(sing));
  Matrix b = Matrix::from_rows(f, {{1}, {0}});
  CHECK(!solve(sing, b));
}

TEST_CASE("empty matrices") {
  Matrix z(Field::Q(), 0, 3);
  CHECK(rank(z) == 0);
  CHECK(kernel_basis(z).cols() == 3);
  Matrix e(Field::Q(), 3, 0);
  CHECK(kernel_basis(e).cols() == 0);
}

TEST_CASE("determinant and trace") {
  Matrix m = Matrix::from_rows(Field::Q(), {{2, 1}, {7, 4}});
  CHECK(det(m) == 1);
  CHECK(trace(m) == 6);
}

TEST_CASE("minimal polynomial and roots") {
  Matrix m = Matrix::from_rows(Field::Q(), {{1, 1, 0}, {0, 1, 0}, {0, 0, 2}});
  auto mp = min_poly(m);
  // (t-1)^2 (t-2) = t^3 - 4t^2 + 5t - 2
  REQUIRE(mp.size() == 4);
  CHECK(mp[0] == -2);
  CHECK(mp[1] == 5);
  CHECK(mp[2] == -4);
  CHECK(mp[3] == 1);
  auto roots = poly_roots(Field::Q(), mp);
  CHECK(roots.size() == 2);
  CHECK(is_nilpotent(Matrix::from_rows(Field::Q(), {{0, 1}, {0, 0}})));
  CHECK(!is_nilpotent(m));
}

TEST_CASE("irrational roots are not reported") {
  CHECK(poly_roots(Field::Q(), {Scalar(-2), Scalar(0), Scalar(1)}).empty());
  CHECK(poly_roots(Field::Fp(7), {Scalar(-2), Scalar(0), Scalar(1)}).size() == 2);
}

TEST_CASE("crt idempotent splits coprime factors") {
  Field f = Field::Q();
  Poly m{Scalar(-2), Scalar(5), Scalar(-4), Scalar(1)};
  auto u = crt_idempotent(f, m);
  REQUIRE(u);
  // u^2 = u mod m
  auto sq = poly_divmod(f, poly_mul(f, *u, *u), m).second;
  CHECK(poly_sub(f, sq, *u).empty());
  CHECK(!crt_idempotent(f, {Scalar(1), Scalar(-2), Scalar(1)}));
}

TEST_CASE("field validation") {
  CHECK_THROWS(Field::Fp(4));
  CHECK(is_prime(101));
  CHECK(Field::Fp(5).reduce(Scalar(-1)) == 4);
  CHECK(Field::Fp(5).reduce(Scalar(1, 2)) == 3);
}
