#include "doctest.h"

#include <random>

#include "galcov/factor.hpp"
#include "galcov/poly.hpp"
#include "galcov/scalar.hpp"

using namespace galcov;

namespace {

Scalar q(long n, long d = 1) { return Scalar::rational(mpq_class(n, d)); }

Scalar random_scalar(const Field &f, std::mt19937_64 &rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  if (f.kind() == FieldKind::PrimeField)
    return Scalar::residue(f.modulus(), rng() % f.modulus());
  std::vector<mpq_class> c;
  for (std::size_t i = 0; i < f.width() + 2; ++i)
    c.emplace_back(num(rng), den(rng));
  if (f.kind() == FieldKind::Rational)
    return Scalar::rational(c[0]);
  return Scalar::cyclotomic(f.level(), c);
}

Poly poly_q(std::vector<long> c) {
  std::vector<Scalar> s;
  for (auto x : c)
    s.push_back(q(x));
  return Poly(Field::rational(), s);
}

Poly product(const std::vector<Poly> &fs, const Field &f) {
  Poly p = Poly::constant(f, 1);
  for (const auto &g : fs)
    p *= g;
  return p;
}

} // namespace

TEST_CASE("zeta_4 squared is -1") {
  const Field K = Field::cyclotomic(4);
  Scalar i = Scalar::root_of_unity(K, 4, 1);
  CHECK(i * i == Scalar::integer(K, -1));
  CHECK((i * i).is_rational());
}

TEST_CASE("inverse of 2/3") { CHECK(q(2, 3).inv() == q(3, 2)); }

TEST_CASE("zeta_3 + zeta_3^2 = -1") {
  const Field K = Field::cyclotomic(3);
  Scalar z = Scalar::root_of_unity(K, 3, 1);
  CHECK(z + z * z == Scalar::integer(K, -1));
  // the raw vector x + x^2 reduced modulo x^2 + x + 1
  CHECK(Scalar::cyclotomic(3, {0, 1, 1}) == Scalar::integer(K, -1));
}

TEST_CASE("cyclotomic polynomials") {
  auto phi12 = cyclotomic_polynomial(12);
  REQUIRE(phi12.size() == 5);
  CHECK(phi12[0] == 1);
  CHECK(phi12[1] == 0);
  CHECK(phi12[2] == -1);
  CHECK(phi12[3] == 0);
  CHECK(phi12[4] == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(7) == 6);
  CHECK(euler_phi(1) == 1);
}

TEST_CASE("field mismatch and division by zero") {
  const Field K3 = Field::cyclotomic(3), K4 = Field::cyclotomic(4);
  Scalar a = Scalar::root_of_unity(K3, 3, 1), b = Scalar::root_of_unity(K4, 4, 1);
  CHECK_THROWS_AS(a + b, Error);
  try {
    (void)(a * b);
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::FieldMismatch);
  }
  CHECK_THROWS_AS(Scalar::residue(5, 1) + Scalar::residue(7, 1), Error);
  CHECK_THROWS_AS(Scalar::residue(5, 1) + q(1), Error);
  try {
    (void)Scalar::zero(K3).inv();
    CHECK(false);
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
  // Q embeds into Q(zeta_N)
  CHECK(a + q(1) == Scalar::cyclotomic(3, {1, 1}));
}

TEST_CASE("field axioms on random scalars") {
  std::mt19937_64 rng(12345);
  for (const Field &f : {Field::rational(), Field::cyclotomic(3), Field::cyclotomic(8),
                         Field::cyclotomic(12), Field::prime(7), Field::prime(2)}) {
    for (int it = 0; it < 30; ++it) {
      Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a - a == Scalar::zero(f));
      if (!a.is_zero())
        CHECK(a * a.inv() == Scalar::one(f));
    }
  }
}

TEST_CASE("reduction is idempotent") {
  std::vector<mpq_class> raw{1, 2, 3, 4, 5, 6, 7};
  Scalar once = Scalar::cyclotomic(5, raw);
  Scalar twice = Scalar::cyclotomic(5, once.coeffs());
  CHECK(once == twice);
  CHECK(once.coeffs().size() == 4);
}

TEST_CASE("roots of unity exponents") {
  const Field K = Field::cyclotomic(6);
  for (std::uint32_t e = 0; e < 6; ++e)
    CHECK(Scalar::root_of_unity(K, 6, e).root_of_unity_exponent() == e);
  CHECK(Scalar::root_of_unity(K, 3, 1) == Scalar::root_of_unity(K, 6, 2));
  CHECK(!Scalar::integer(K, 2).root_of_unity_exponent());
  const Field F7 = Field::prime(7);
  Scalar z = Scalar::root_of_unity(F7, 3, 1);
  CHECK(z.pow(3).is_one());
  CHECK(!z.is_one());
  CHECK_THROWS_AS(Scalar::root_of_unity(Field::rational(), 3, 1), Error);
  // Q(zeta_3) holds the sixth roots
  CHECK(Field::cyclotomic(3).contains_root_of_unity(6));
  CHECK(Scalar::root_of_unity(Field::cyclotomic(3), 6, 1).pow(6).is_one());
}

TEST_CASE("field parsing") {
  CHECK(Field::parse("Q") == Field::rational());
  CHECK(Field::parse("Qzeta:12") == Field::cyclotomic(12));
  CHECK(Field::parse("Fp:5") == Field::prime(5));
  CHECK_THROWS_AS(Field::parse("Fp:6"), Error);
  CHECK_THROWS_AS(Field::parse("R"), Error);
}

TEST_CASE("prime field coercion") {
  CHECK(Scalar::from_rational(Field::prime(5), mpq_class(1, 2)) == Scalar::residue(5, 3));
  CHECK_THROWS_AS(Scalar::from_rational(Field::prime(5), mpq_class(1, 5)), Error);
}

TEST_CASE("valuation") {
  CHECK(poly_q({0, 4}).valuation() == 1);
  CHECK(Poly(Field::rational()).valuation() == kInfiniteValuation);
  CHECK(poly_q({0, 0, 0, 1, 0, 2}).valuation() == 3);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-3, 3);
  for (int it = 0; it < 50; ++it) {
    std::vector<long> a(6), b(5);
    for (auto &x : a)
      x = d(rng);
    for (auto &x : b)
      x = d(rng);
    Poly f = poly_q(a), g = poly_q(b);
    if (f.is_zero() || g.is_zero())
      continue;
    CHECK((f * g).valuation() == f.valuation() + g.valuation());
  }
}

TEST_CASE("polynomial division and gcd") {
  Poly f = poly_q({-1, 0, 0, 1}), g = poly_q({-1, 1});
  auto [qq, r] = divmod(f, g);
  CHECK(r.is_zero());
  CHECK(qq == poly_q({1, 1, 1}));
  CHECK(gcd(f, poly_q({-1, 0, 1})) == g);
  auto x = xgcd(poly_q({1, 0, 1}), poly_q({0, 1}));
  CHECK(x.g.is_one());
  CHECK(x.s * poly_q({1, 0, 1}) + x.t * poly_q({0, 1}) == x.g);
  CHECK(poly_q({1, 2, 1}).shift(q(-1)) == poly_q({0, 0, 1}));
}

TEST_CASE("factor x^2+1 over Q(zeta_4)") {
  const Field K = Field::cyclotomic(4);
  Poly f(K, {Scalar::one(K), Scalar::zero(K), Scalar::one(K)});
  auto fs = factor_squarefree(f);
  REQUIRE(fs.size() == 2);
  Scalar i = Scalar::root_of_unity(K, 4, 1);
  for (const auto &g : fs)
    CHECK(g.degree() == 1);
  CHECK(((fs[0].coeff(0) == i) != (fs[1].coeff(0) == i)));
  CHECK(product(fs, K) == f);
  auto r = roots(f);
  CHECK(r.size() == 2);
}

TEST_CASE("factor over Q") {
  auto fs = factor_squarefree(poly_q({-1, 1}));
  REQUIRE(fs.size() == 1);
  CHECK(fs[0] == poly_q({-1, 1}));
  fs = factor_squarefree(poly_q({-1, 0, 0, 1}));
  REQUIRE(fs.size() == 2);
  CHECK(fs[0] == poly_q({-1, 1}));
  CHECK(fs[1] == poly_q({1, 1, 1}));
  // x^4 + 1 is irreducible over Q, splits over Q(zeta_8)
  CHECK(factor_squarefree(poly_q({1, 0, 0, 0, 1})).size() == 1);
  auto split = factor_squarefree(poly_q({1, 0, 0, 0, 1}).lift_to(Field::cyclotomic(8)));
  CHECK(split.size() == 4);
  // x^4 + 4 = (x^2 + 2x + 2)(x^2 - 2x + 2)
  fs = factor_squarefree(poly_q({4, 0, 0, 0, 1}));
  REQUIRE(fs.size() == 2);
  CHECK(product(fs, Field::rational()) == poly_q({4, 0, 0, 0, 1}));
  // x^12 - 1 splits into cyclotomic factors of degrees 1,1,2,2,2,4
  fs = factor_squarefree(poly_q({-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
  CHECK(fs.size() == 6);
  // non-monic
  fs = factor_squarefree(poly_q({-3, 0, 4}) * poly_q({1, 6}));
  CHECK(fs.size() == 2);
}

TEST_CASE("factor over Q(zeta_3): x^3 - 2 stays cubic, x^3 - 1 splits") {
  const Field K = Field::cyclotomic(3);
  CHECK(factor_squarefree(poly_q({-2, 0, 0, 1}).lift_to(K)).size() == 1);
  auto fs = factor_squarefree(poly_q({-1, 0, 0, 1}).lift_to(K));
  CHECK(fs.size() == 3);
  // a non-rational input: x^2 - zeta_3 = (x - zeta_6^..)(x + ...)
  Scalar z = Scalar::root_of_unity(K, 3, 1);
  Poly g(K, {-z, Scalar::zero(K), Scalar::one(K)});
  fs = factor_squarefree(g);
  CHECK(fs.size() == 2);
  CHECK(product(fs, K) == g);
  // x^2 - 2 over Q(zeta_3) is irreducible
  CHECK(factor_squarefree(poly_q({-2, 0, 1}).lift_to(K)).size() == 1);
}

TEST_CASE("factor over F_p") {
  const Field F2 = Field::prime(2), F5 = Field::prime(5);
  Poly f(F2, {Scalar::one(F2), Scalar::one(F2), Scalar::one(F2)});
  CHECK(factor_squarefree(f).size() == 1);
  Poly g(F5, {Scalar::integer(F5, -1), Scalar::zero(F5), Scalar::zero(F5), Scalar::zero(F5), Scalar::one(F5)});
  auto fs = factor_squarefree(g);
  CHECK(fs.size() == 4);
  CHECK(product(fs, F5) == g);
  // x^8 + x + 1 over F_2: product check
  std::vector<Scalar> c(9, Scalar::zero(F2));
  c[0] = c[1] = c[8] = Scalar::one(F2);
  Poly h(F2, c);
  fs = factor_squarefree(h);
  CHECK(product(fs, F2) == h);
  // distinct factors of (x+1)^4 x over F_2
  Poly p4 = Poly(F2, {Scalar::one(F2), Scalar::one(F2)}).pow(4) * Poly::x(F2);
  CHECK(distinct_factors(p4).size() == 2);
}

TEST_CASE("factor random products over Q(zeta_4)") {
  const Field K = Field::cyclotomic(4);
  Scalar i = Scalar::root_of_unity(K, 4, 1);
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> d(-3, 3);
  for (int it = 0; it < 10; ++it) {
    Poly f = Poly::constant(K, 1);
    std::vector<Scalar> used;
    for (int k = 0; k < 4; ++k) {
      Scalar r = Scalar::integer(K, d(rng)) + Scalar::integer(K, d(rng)) * i;
      if (std::find(used.begin(), used.end(), r) != used.end())
        continue;
      used.push_back(r);
      f *= Poly(K, {-r, Scalar::one(K)});
    }
    auto fs = factor_squarefree(f);
    CHECK(fs.size() == used.size());
    CHECK(product(fs, K) == f);
  }
}

TEST_CASE("degree bound") {
  std::vector<long> c(40, 0);
  c[0] = -1;
  c[39] = 1;
  try {
    (void)factor_squarefree(poly_q(c));
    CHECK(false);
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::DegreeBoundExceeded);
  }
}
