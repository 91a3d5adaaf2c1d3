#include "doctest.h"

#include "galcov/ramify.hpp"

using namespace galcov;

namespace {

using Sizes = std::vector<std::size_t>;

Poly t_pow(const Field &f, std::size_t e, long c = 1) { return Poly::monomial(Scalar::integer(f, c), e); }
Poly cst(const Field &f, long c) { return Poly::constant(f, c); }

CoverOverDVR square_minus(const Field &f, std::size_t e) { return quadratic_cover(Poly(f), t_pow(f, e, -1)); }

std::vector<Poly> kummer_poly(const Field &f, std::size_t n) {
  std::vector<Poly> p(n + 1, Poly(f));
  p[0] = t_pow(f, 1, -1);
  p[n] = cst(f, 1);
  return p;
}

} // namespace

TEST_CASE("trace package of x^2 - t") {
  const Field q = Field::rational();
  CoverOverDVR a = square_minus(q, 1);
  TracePackage raw = trace_package(a, nullptr);
  CHECK(raw.gram(0, 0) == cst(q, 2));
  CHECK(raw.gram(0, 1).is_zero());
  CHECK(raw.gram(1, 1) == t_pow(q, 1, 2));
  CHECK(raw.v_s_f == 1);
  CHECK(raw.gram_divisor_valuations == Sizes{0, 1});
  CHECK_FALSE(raw.equivariant);

  IrrepSet irr = cover_irreps(a);
  TracePackage p = trace_package(a, &irr);
  REQUIRE(p.equivariant);
  CHECK(p.sections[0].valuation == 0);
  CHECK(p.sections[1].valuation == 1);
  CHECK(p.sections[1].quotient_rank == 1);
}

TEST_CASE("x^2 - t^2 and x^2 - t^3") {
  const Field q = Field::rational();
  CoverOverDVR a = square_minus(q, 2);
  TracePackage raw = trace_package(a, nullptr);
  CHECK(raw.gram(1, 1) == t_pow(q, 2, 2));
  CHECK(raw.v_s_f == 2);
  IrrepSet irr = cover_irreps(a);
  TameVerdict v = tame_check(a, &irr);
  CHECK_FALSE(v.cond2);
  CHECK(v.cond4 == false);
  CHECK(v.cond5 == false);
  CHECK(v.consistent);

  CoverOverDVR c = square_minus(q, 3);
  IrrepSet irr3 = cover_irreps(c);
  TameVerdict w = tame_check(c, &irr3);
  CHECK(w.package.v_s_f == 3);
  CHECK_FALSE(w.cond2);
  CHECK(w.consistent);
}

TEST_CASE("tame check on x^2 - t") {
  CoverOverDVR a = kummer_builder(2, 1, Field::rational());
  IrrepSet irr = cover_irreps(a);
  TameVerdict v = tame_check(a, &irr);
  CHECK(v.cond2);
  CHECK(v.cond4 == true);
  CHECK(v.cond5 == true);
  CHECK(v.consistent);
}

TEST_CASE("wild Artin-Schreier covers over F_2") {
  const Field f2 = Field::prime(2);
  CoverOverDVR wild = quadratic_cover(t_pow(f2, 1), t_pow(f2, 1));
  TracePackage p = trace_package(wild, nullptr);
  CHECK(p.gram(0, 0).is_zero());
  CHECK(p.gram(0, 1) == t_pow(f2, 1));
  CHECK(p.gram(1, 1) == t_pow(f2, 2));
  CHECK(p.v_s_f == 2);
  TameVerdict v = tame_check(wild, nullptr);
  CHECK_FALSE(v.cond2);
  CHECK_FALSE(v.cond4.has_value());
  CHECK_FALSE(v.cond5.has_value());
  CHECK_FALSE(v.unmet.empty());
  try {
    cover_irreps(wild);
    FAIL("expected NonInvertibleOrder");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::NonInvertibleOrder);
  }
  auto pts = fiber_regularity(wild);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].regular);
  CHECK(pts[0].tameness == Tameness::Wild);

  CoverOverDVR etale = quadratic_cover(cst(f2, 1), t_pow(f2, 1));
  CHECK(trace_package(etale, nullptr).v_s_f == 0);
  CHECK(tame_check(etale, nullptr).cond2);
}

TEST_CASE("fiber regularity") {
  const Field q = Field::rational();
  auto p1 = fiber_regularity(square_minus(q, 1));
  REQUIRE(p1.size() == 1);
  CHECK(p1[0].cotangent_dim == 1);
  CHECK(p1[0].regular);
  CHECK(p1[0].length == 2);
  CHECK(p1[0].tameness == Tameness::Tame);

  auto p2 = fiber_regularity(square_minus(q, 2));
  REQUIRE(p2.size() == 1);
  CHECK(p2[0].cotangent_dim == 2);
  CHECK_FALSE(p2[0].regular);
  CHECK(p2[0].tameness == Tameness::Undetermined);

  // x^2 - 1 - t: two points, both regular and unramified
  auto p3 = fiber_regularity(quadratic_cover(Poly(q), cst(q, -1) - t_pow(q, 1)));
  CHECK(p3.size() == 2);
  for (const auto &pt : p3) {
    CHECK(pt.regular);
    CHECK(pt.length == 1);
  }

  // x^2 + 1 does not split over Q
  try {
    fiber_regularity(quadratic_cover(Poly(q), cst(q, 1)));
    FAIL("expected NonSplitFiber");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::NonSplitFiber);
  }
}

TEST_CASE("Kummer covers against the resultant oracle") {
  for (std::size_t n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const Field f = Field::cyclotomic(static_cast<std::uint32_t>(n));
    const Poly oracle = discriminant_oracle(kummer_poly(f, n));
    CHECK(oracle.valuation() == n - 1);
    CoverOverDVR a = kummer_builder(n, 1, f);
    TracePackage raw = trace_package(a, nullptr);
    CHECK(raw.v_s_f == n - 1);
    CHECK((raw.s_f == oracle || raw.s_f == -oracle));
    IrrepSet irr = cover_irreps(a);
    TameVerdict v = tame_check(a, &irr);
    CHECK(v.cond2);
    CHECK(v.cond4 == true);
    CHECK(v.cond5 == true);
    CHECK(v.consistent);
    TraceDecomposition d = trace_decomposition_check(a, irr);
    CHECK(d.ok());
    CHECK(d.v_s_f == n - 1);
  }
  CoverOverDVR x3 = kummer_builder(3, 1, Field::cyclotomic(3));
  IrrepSet irr = cover_irreps(x3);
  TracePackage p = trace_package(x3, &irr);
  CHECK(p.sections[0].valuation == 0);
  CHECK(p.sections[1].valuation == 1);
  CHECK(p.sections[2].valuation == 1);

  try {
    kummer_builder(3, 1, Field::rational());
    FAIL("expected MissingRootOfUnity");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::MissingRootOfUnity);
  }
}

TEST_CASE("trace decomposition on simple covers") {
  const Field q = Field::rational();
  CoverOverDVR a = square_minus(q, 1);
  IrrepSet irr = cover_irreps(a);
  TraceDecomposition d = trace_decomposition_check(a, irr);
  CHECK(d.kernel_matches);
  CHECK(d.v_s_f == 1);
  CHECK(d.weighted_sum == 1);

  FiniteGroup s3 = FiniteGroup::symmetric(3);
  IrrepSet is3 = irreps(s3);
  CoverOverDVR fns = constant_cover(functions_on_group(s3, is3.field()));
  TraceDecomposition e = trace_decomposition_check(fns, is3);
  CHECK(e.ok());
  CHECK(e.v_s_f == 0);

  // rank 4 over Z/2: hypotheses fail
  CoverOverDVR two = kummer_builder(4, 1, Field::cyclotomic(4));
  CoverOverDVR wrong{FiniteGroup::cyclic(2), two.field, two.left, two.unit, {two.action[0], two.action[2]}};
  validate(wrong);
  IrrepSet i2 = irreps(wrong.group, 4);
  try {
    trace_decomposition_check(wrong, i2);
    FAIL("expected HypothesisUnmet");
  } catch (const Error &err) {
    CHECK(err.kind() == ErrorKind::HypothesisUnmet);
  }
  CHECK_FALSE(tame_check(wrong, &i2).cond4.has_value());
}

TEST_CASE("block products with torsors") {
  const Field q = Field::rational();
  // induced from Z/2 inside S3
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  Subgroup swap;
  for (const auto &h : s3.subgroups())
    if (h.order() == 2) {
      swap = h;
      break;
    }
  CoverOverDVR base = square_minus(q, 1);
  CoverOverDVR ind = induce(s3, swap, base);
  validate(ind);
  IrrepSet irr = cover_irreps(ind);
  TameVerdict v = tame_check(ind, &irr);
  CHECK(v.package.v_s_f == 3);
  CHECK(v.cond2);
  CHECK(v.consistent);
  CHECK(v.cond4.has_value());
  CHECK(trace_decomposition_check(ind, irr).ok());

  // x^2 - t tensored with the trivial Z/3 torsor
  const Field k3 = Field::cyclotomic(6);
  CoverOverDVR tor = constant_cover(functions_on_group(FiniteGroup::cyclic(3), k3));
  CoverOverDVR prod = tensor(lift_to(square_minus(q, 1), k3), tor);
  validate(prod);
  IrrepSet ip = cover_irreps(prod);
  TameVerdict w = tame_check(prod, &ip);
  CHECK(w.package.v_s_f == 3);
  CHECK(w.cond4 == true);
  CHECK(w.consistent);
  CHECK(trace_decomposition_check(prod, ip).ok());

  CoverOverDVR bad = tensor(lift_to(square_minus(q, 2), k3), tor);
  IrrepSet ib = cover_irreps(bad);
  TameVerdict b = tame_check(bad, &ib);
  CHECK(b.package.v_s_f == 6);
  CHECK_FALSE(b.cond2);
  CHECK(b.consistent);
}

TEST_CASE("valuations are basis independent") {
  std::mt19937_64 rng(2024);
  const Field f = Field::cyclotomic(3);
  CoverOverDVR a = kummer_builder(3, 1, f);
  IrrepSet irr = cover_irreps(a);
  const TracePackage ref = trace_package(a, &irr);
  for (int s = 0; s < 10; ++s) {
    auto [p, pi] = random_poly_unimodular(a.dim(), a.field, rng);
    CoverOverDVR b = change_basis(a, p, pi);
    validate(b);
    TracePackage t = trace_package(b, &irr);
    CHECK(t.v_s_f == ref.v_s_f);
    CHECK(t.gram_divisor_valuations == ref.gram_divisor_valuations);
    for (std::size_t v = 0; v < irr.size(); ++v)
      CHECK(t.sections[v].valuation == ref.sections[v].valuation);
  }
}

TEST_CASE("cover validation catches errors") {
  CoverOverDVR a = square_minus(Field::rational(), 1);
  a.action[1](0, 1) = cst(Field::rational(), 1); // x -> 1 - x
  try {
    validate(a);
    FAIL("expected InvalidAction");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::InvalidAction);
  }
  CoverOverDVR c = square_minus(Field::rational(), 1);
  c.left[1](1, 1) = cst(Field::rational(), 1); // x^2 = t + x but x . 1 unchanged
  c.left[0](1, 1) = cst(Field::rational(), 2);
  CHECK_THROWS_AS(validate(c), Error);
}
