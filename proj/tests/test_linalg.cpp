#include "doctest.h"
#include "siltsms/linalg.hpp"

#include <random>

using namespace siltsms;

namespace {

Matrix from_rows(const std::vector<std::vector<long>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("rank and kernel of a small rational matrix") {
  Field q = Field::rationals();
  Matrix a = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(q, a) == 2);
  Matrix k = kernel(q, a);
  REQUIRE(k.cols() == 1);
  CHECK(multiply(q, a, k).is_zero());
  // By hand: x = (-1, -1, 1) spans the kernel.
  CHECK(k(0, 0) / k(2, 0) == -1);
  CHECK(k(1, 0) / k(2, 0) == -1);
}

TEST_CASE("fractions survive elimination exactly") {
  Field q = Field::rationals();
  Matrix a = from_rows({{3, 1}, {1, 2}});
  Matrix b = from_rows({{1}, {0}});
  auto x = solve(q, a, b);
  REQUIRE(x);
  CHECK((*x)(0, 0) == Scalar(2) / 5);
  CHECK((*x)(1, 0) == Scalar(-1) / 5);
}

TEST_CASE("inconsistent systems report no solution") {
  Field q = Field::rationals();
  Matrix a = from_rows({{1, 1}, {2, 2}});
  Matrix b = from_rows({{1}, {3}});
  CHECK_FALSE(solve(q, a, b));
}

TEST_CASE("prime field arithmetic") {
  CHECK_THROWS_AS(Field::prime(15), std::invalid_argument);
  Field f = Field::prime(7);
  CHECK(f.inv(3) == 5);
  CHECK(f.reduce(-1) == 6);
  // Singular mod 7 but not over Q.
  Matrix a = from_rows({{1, 2}, {3, 13}});
  CHECK(rank(Field::rationals(), a) == 2);
  CHECK(rank(f, a) == 1);
}

TEST_CASE("column complement completes a basis") {
  Field q = Field::rationals();
  Matrix a = from_rows({{1}, {1}, {0}});
  Matrix c = column_complement(q, a, 3);
  CHECK(c.cols() == 2);
  CHECK(rank(q, hconcat(a, c)) == 3);
  CHECK(column_complement(q, Matrix(2, 0), 2).cols() == 2);
}

TEST_CASE("empty shapes") {
  Field q = Field::rationals();
  CHECK(kernel(q, Matrix(0, 3)).cols() == 3);
  CHECK(kernel(q, Matrix(3, 0)).cols() == 0);
  CHECK(rank(q, Matrix(0, 0)) == 0);
  auto x = solve(q, Matrix(0, 2), Matrix(0, 1));
  REQUIRE(x);
  CHECK(x->rows() == 2);
}

TEST_CASE("property: rank-nullity and kernel annihilation over Q and F_p") {
  std::mt19937 rng(20240501);
  for (Field f : {Field::rationals(), Field::prime(5), Field::prime(101)}) {
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
      Matrix a = random_matrix(rng, r, c, -2, 2);
      if (!f.is_rational())
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < c; ++j) a(i, j) = f.reduce(a(i, j));
      Matrix k = kernel(f, a);
      CHECK(rank(f, a) + k.cols() == c);
      CHECK(multiply(f, a, k).is_zero());
      CHECK(rank(f, k) == k.cols());
      Matrix comp = column_complement(f, a, r);
      CHECK(rank(f, hconcat(a, comp)) == r);
      CHECK(rank(f, a) + comp.cols() == r);
      // Any product a*x is solvable for x.
      Matrix x0 = random_matrix(rng, c, 2, -3, 3);
      Matrix b = multiply(f, a, x0);
      auto x = solve(f, a, b);
      REQUIRE(x);
      CHECK(multiply(f, a, *x) == b);
    }
  }
}
