#include "doctest.h"

#include <random>

#include "galcov/linalg.hpp"

using namespace galcov;

namespace {

const Field Q = Field::rational();

SMatrix qm(std::vector<std::vector<long>> rows) {
  SMatrix m = zeros(rows.size(), rows.empty() ? 0 : rows[0].size(), Q);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(i, j) = Scalar::integer(Q, rows[i][j]);
  return m;
}

Poly tp(const Field &f, std::vector<long> c) {
  std::vector<Scalar> s;
  for (auto x : c)
    s.push_back(Scalar::integer(f, x));
  return Poly(f, s);
}

} // namespace

TEST_CASE("rref nullspace rank") {
  SMatrix m = qm({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(m) == 2);
  SMatrix k = nullspace(m);
  REQUIRE(k.rows() == 1);
  CHECK((m * k.transpose()).is_zero());
  CHECK(rank(identity(4, Q)) == 4);
  CHECK(nullspace(identity(3, Q)).rows() == 0);
}

TEST_CASE("inverse and determinant") {
  SMatrix m = qm({{2, 1}, {7, 4}});
  CHECK(det(m) == Scalar::integer(Q, 1));
  CHECK(inverse(m) * m == identity(2, Q));
  CHECK(!try_inverse(qm({{1, 2}, {2, 4}})));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-4, 4);
  for (int it = 0; it < 20; ++it) {
    SMatrix a = zeros(4, 4, Q), b = zeros(4, 4, Q);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        a(i, j) = Scalar::integer(Q, d(rng));
        b(i, j) = Scalar::integer(Q, d(rng));
      }
    CHECK(det(a * b) == det(a) * det(b));
    Poly pd = det_bareiss(to_poly_matrix(a));
    CHECK(pd.coeff(0) == det(a));
  }
}

TEST_CASE("intersection of row spaces") {
  SMatrix a = qm({{1, 0, 0}, {0, 1, 0}}), b = qm({{0, 1, 0}, {0, 0, 1}});
  SMatrix c = intersect_rows(a, b);
  REQUIRE(c.rows() == 1);
  CHECK(c == qm({{0, 1, 0}}));
}

TEST_CASE("solve and coordinates") {
  SMatrix a = qm({{1, 1}, {1, -1}});
  auto x = solve(a, qm({{2}, {0}}));
  REQUIRE(x);
  CHECK(*x == qm({{1}, {1}}));
  Echelon e = rref(qm({{1, 0, 2}, {0, 1, 3}}));
  auto c = rref_coordinates(e, {Scalar::integer(Q, 2), Scalar::integer(Q, 1), Scalar::integer(Q, 7)});
  REQUIRE(c);
  CHECK((*c)[0] == Scalar::integer(Q, 2));
  CHECK(!rref_coordinates(e, {Scalar::integer(Q, 1), Scalar::integer(Q, 0), Scalar::integer(Q, 0)}));
}

TEST_CASE("smith normal form diag(2, 2t^2)") {
  PMatrix m = poly_zeros(2, 2, Q);
  m(0, 0) = tp(Q, {2});
  m(1, 1) = tp(Q, {0, 0, 2});
  auto s = smith_normal_form(m);
  REQUIRE(s.divisors.size() == 2);
  CHECK(s.divisors[0] == tp(Q, {1}));
  CHECK(s.divisors[1] == tp(Q, {0, 0, 1}));
  CHECK(s.P * m * s.Q == s.D);
}

TEST_CASE("smith normal form identity and F_2 example") {
  auto s = smith_normal_form(poly_identity(3, Q));
  for (const auto &d : s.divisors)
    CHECK(d.is_one());
  const Field F2 = Field::prime(2);
  PMatrix m = poly_zeros(2, 2, F2);
  m(0, 1) = tp(F2, {1});
  m(1, 0) = tp(F2, {1});
  m(1, 1) = tp(F2, {1});
  s = smith_normal_form(m);
  CHECK(s.divisors[0].is_one());
  CHECK(s.divisors[1].is_one());
}

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-2, 2);
  for (int it = 0; it < 25; ++it) {
    const std::size_t n = 3;
    PMatrix m = poly_zeros(n, n, Q);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) = tp(Q, {d(rng), d(rng), (it % 3 == 0) ? 0 : d(rng)});
    auto s = smith_normal_form(m);
    CHECK(s.P * m * s.Q == s.D);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j)
          CHECK(s.D(i, j).is_zero());
    for (std::size_t i = 0; i + 1 < n; ++i)
      CHECK(divides(s.divisors[i], s.divisors[i + 1]));
    CHECK(det_bareiss(s.P).is_constant());
    CHECK(det_bareiss(s.Q).is_constant());
    Poly prod = Poly::constant(Q, 1);
    for (const auto &x : s.divisors)
      prod *= x;
    Poly dm = det_bareiss(m);
    CHECK(prod == dm.monic());
  }
}

TEST_CASE("row echelon over k[t] spans the same module") {
  PMatrix m = poly_zeros(3, 2, Q);
  m(0, 0) = tp(Q, {0, 1});
  m(1, 0) = tp(Q, {0, 0, 1});
  m(1, 1) = tp(Q, {1});
  m(2, 0) = tp(Q, {0, 1});
  m(2, 1) = tp(Q, {0, 1});
  PMatrix e = pid_row_echelon(m);
  CHECK(e.rows() == 2);
  // t * e_1 and e_2 generate: the determinant of the basis is t up to unit
  CHECK(det_bareiss(e).monic() == tp(Q, {0, 1}));
}
