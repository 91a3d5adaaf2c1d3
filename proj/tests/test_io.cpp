#include "doctest.h"

#include <random>

#include "galcov/catalog.hpp"
#include "galcov/io.hpp"

using namespace galcov;

namespace {

template <class F> ErrorKind kind_of(F &&f) {
  try {
    f();
  } catch (const Error &e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

} // namespace

TEST_CASE("scalars in every field kind") {
  const Field q = Field::rational(), z = Field::cyclotomic(12), f5 = Field::prime(5);
  const Scalar a = Scalar::from_rational(q, mpq_class(-7, 3));
  CHECK(to_json(a) == "-7/3");
  CHECK(scalar_from_json(to_json(a), q) == a);
  CHECK(scalar_from_json(json(4), q) == Scalar::integer(q, 4));

  const Scalar w = Scalar::root_of_unity(z, 12, 5) + Scalar::from_rational(z, mpq_class(1, 2));
  CHECK(scalar_from_json(to_json(w), z) == w);
  // a rational string lands in the requested field
  CHECK(scalar_from_json(json("3/4"), z) == Scalar::from_rational(z, mpq_class(3, 4)));
  // a zeta_3 scalar lifts into Q(zeta_12)
  const Scalar z3 = Scalar::root_of_unity(Field::cyclotomic(3), 3, 1);
  CHECK(scalar_from_json(to_json(z3), z) == Scalar::root_of_unity(z, 3, 1));

  const Scalar r = Scalar::residue(5, 3);
  CHECK(scalar_from_json(to_json(r), f5) == r);

  CHECK(kind_of([&] { scalar_from_json(json("1/0"), q); }) == ErrorKind::SchemaError);
  CHECK(kind_of([&] { scalar_from_json(json("abc"), q); }) == ErrorKind::SchemaError);
  CHECK(kind_of([&] { scalar_from_json(json{{"mod", 4}, {"val", 1}}, q); }) == ErrorKind::SchemaError);
  CHECK(kind_of([&] { scalar_from_json(json(true), q); }) == ErrorKind::SchemaError);
}

TEST_CASE("polynomials and matrices") {
  const Field q = Field::rational();
  Poly p(q, {Scalar::integer(q, 1), Scalar::zero(q), Scalar::from_rational(q, mpq_class(-2, 5))});
  CHECK(poly_from_json(to_json(p), q) == p);
  SMatrix m = identity(3, q);
  m(0, 2) = Scalar::from_rational(q, mpq_class(9, 7));
  CHECK(matrix_from_json(to_json(m), q) == m);
  PMatrix pm = poly_zeros(2, 2, q);
  pm(0, 1) = p;
  pm(1, 0) = Poly::constant(q, 3);
  CHECK(poly_matrix_from_json(to_json(pm), q) == pm);
  CHECK(kind_of([&] { matrix_from_json(json::parse("[[1,2],[3]]"), q); }) == ErrorKind::SchemaError);
}

TEST_CASE("groups") {
  for (const auto &s : catalog_groups()) {
    FiniteGroup g = FiniteGroup::parse(s);
    FiniteGroup back = group_from_json(to_json(g));
    CHECK(back.table() == g.table());
    CHECK(back.labels() == g.labels());
    CHECK(group_from_json(json(s)).table() == g.table());
  }
  CHECK(kind_of([] { group_from_json(json::parse(R"({"mul": [[0, 1], [1, 1]]})")); }) == ErrorKind::InvalidTable);
  CHECK(kind_of([] { group_from_json(json::parse(R"({"order": 3, "mul": [[0]]})")); }) == ErrorKind::SchemaError);
  CHECK(kind_of([] { group_from_json(json("S5")); }) == ErrorKind::CapExceeded);
  CHECK(kind_of([] { group_from_json(json("C100")); }) == ErrorKind::CapExceeded);
  CHECK(kind_of([] { group_from_json(json{{"labels", json::array()}}); }) == ErrorKind::SchemaError);
}

TEST_CASE("irreducible sets and algebras") {
  std::mt19937_64 rng(7);
  for (const char *s : {"S3", "Q8", "CnxCm:2,2"}) {
    CAPTURE(s);
    FiniteGroup g = FiniteGroup::parse(s);
    IrrepSet irr = irreps(g);
    IrrepSet back = irreps_from_json(to_json(irr));
    CHECK(back.reps() == irr.reps());
    CHECK(back.field() == irr.field());

    EquivariantAlgebra a = random_algebra(irr, rng, 8);
    EquivariantAlgebra b = algebra_from_json(to_json(a));
    CHECK(to_json(b) == to_json(a));
    CHECK(check_isomorphism(a, b, identity(a.dim(), a.field())).ok());
    // the group can be supplied separately
    json stripped = to_json(a);
    stripped.erase("group");
    CHECK(to_json(algebra_from_json(stripped, &g)) == to_json(a));

    FunctorData d = random_functor_data(irr, rng, 8);
    CHECK(functor_data_from_json(to_json(d)).same_values(d));
    CHECK(functor_data_from_json(to_json(d), &irr).same_values(d));

    for (const auto &h : g.subgroups())
      CHECK(subgroup_from_json(to_json(h), g) == h);
  }
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  CHECK(kind_of([&] { subgroup_from_json(json::parse("[0, 1, 3]"), s3); }) == ErrorKind::NotSubgroup);
  CHECK(kind_of([&] { subgroup_from_json(json::parse("[0, 9]"), s3); }) == ErrorKind::SchemaError);
}

TEST_CASE("algebra loading validates") {
  json a = to_json(cubic_example(Field::cyclotomic(3)));
  for (auto &e : a["structure"])
    if (e[0] == 2 && e[1] == 2)
      e[3] = json{{"zeta", 3}, {"coeffs", {"-1", "0"}}};
  CHECK(kind_of([&] { algebra_from_json(a); }) == ErrorKind::NotAssociative);

  json b = to_json(cubic_example(Field::cyclotomic(3)));
  b["action"].erase("1");
  CHECK(kind_of([&] { algebra_from_json(b); }) == ErrorKind::SchemaError);
  json c = to_json(cubic_example(Field::cyclotomic(3)));
  c["unit"] = json::array({"1"});
  CHECK(kind_of([&] { algebra_from_json(c); }) == ErrorKind::SchemaError);
  json d = to_json(cubic_example(Field::cyclotomic(3)));
  d.erase("structure");
  CHECK(kind_of([&] { algebra_from_json(d); }) == ErrorKind::SchemaError);
}

TEST_CASE("covers over k[t]") {
  for (auto &e : ramify_battery()) {
    CAPTURE(e.name);
    CoverOverDVR back = cover_from_json(to_json(e.cover));
    CHECK(to_json(back) == to_json(e.cover));
    CHECK(back.left == e.cover.left);
    CHECK(back.action == e.cover.action);
    CHECK(back.unit == e.cover.unit);
  }
  json bad = to_json(kummer_builder(2, 1, Field::rational()));
  bad["over"] = "k";
  CHECK(kind_of([&] { cover_from_json(bad); }) == ErrorKind::SchemaError);
}

TEST_CASE("reports are stable") {
  WitnessReport w = build_witness(FiniteGroup::symmetric(3));
  json r = report(w, verify_restriction_law(w, w.irr_g_prime));
  CHECK(r["f"] == json::array({1, 2, 0}));
  CHECK(r["dim_a"] == 6);
  CHECK(r["p"] == 2);
  CHECK(r.dump() == report(w, verify_restriction_law(w, w.irr_g_prime)).dump());
  // the reported algebra reloads
  CHECK(algebra_from_json(r["a"]).dim() == 6);

  CoverOverDVR a = kummer_builder(2, 1, Field::rational());
  IrrepSet irr = cover_irreps(a);
  json v = report(tame_check(a, &irr));
  CHECK(v["cond2"] == true);
  CHECK(v["cond4"] == true);
  CHECK(v["cond5"] == true);
  CHECK(v["trace_package"]["v_s_f"] == 1);

  const std::string text = render_text(v);
  CHECK(text.find("cond2: true\n") != std::string::npos);
  CHECK(text.find("consistent: true\n") != std::string::npos);

  CoverOverDVR wild = quadratic_cover(Poly::monomial(Scalar::one(Field::prime(2)), 1),
                                      Poly::monomial(Scalar::one(Field::prime(2)), 1));
  json u = report(tame_check(wild, nullptr));
  CHECK(u["cond4"] == "HypothesisUnmet");
  json pts = report(fiber_regularity(wild));
  CHECK(pts[0]["tameness"] == "wild");
}
