#include "doctest.h"

#include <tuple>

#include "galcov/eqalg.hpp"

using namespace galcov;

namespace {

using Constants = std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>>;

SMatrix diag(const std::vector<Scalar> &d) {
  SMatrix m = zeros(d.size(), d.size(), d.front().field());
  for (std::size_t i = 0; i < d.size(); ++i)
    m(i, i) = d[i];
  return m;
}

// k[x,y]/(x,y)^2 with the generator of Z/3 acting on x and y by zeta^-1
EquivariantAlgebra degree_one_algebra(const Field &k) {
  FiniteGroup c3 = FiniteGroup::cyclic(3);
  const Scalar one = Scalar::one(k);
  Constants c{{0, 0, 0, one}, {0, 1, 1, one}, {0, 2, 2, one}};
  std::vector<SMatrix> act;
  for (long g = 0; g < 3; ++g) {
    Scalar z = Scalar::root_of_unity(k, 3, -g);
    act.push_back(diag({one, z, z}));
  }
  SVector unit{one, Scalar::zero(k), Scalar::zero(k)};
  return algebra_from_constants(c3, k, 3, c, unit, act);
}

// k[x]/(x^3 - 1), generator acting by x -> zeta x; flip negates x^2 * x^2
EquivariantAlgebra cubic(const Field &k, bool flip) {
  FiniteGroup c3 = FiniteGroup::cyclic(3);
  const Scalar one = Scalar::one(k);
  Constants c{{0, 0, 0, one}, {0, 1, 1, one}, {0, 2, 2, one}, {1, 1, 2, one}, {1, 2, 0, one},
              {2, 2, 1, flip ? -one : one}};
  std::vector<SMatrix> act;
  for (long g = 0; g < 3; ++g)
    act.push_back(diag({one, Scalar::root_of_unity(k, 3, g), Scalar::root_of_unity(k, 3, 2 * g)}));
  return algebra_from_constants(c3, k, 3, c, {one, Scalar::zero(k), Scalar::zero(k)}, act);
}

std::vector<FiniteGroup> catalog() {
  return {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3),   FiniteGroup::cyclic(4), FiniteGroup::parse("CnxCm:2,2"),
          FiniteGroup::symmetric(3), FiniteGroup::dihedral(4), FiniteGroup::quaternion(), FiniteGroup::alternating(4)};
}

} // namespace

TEST_CASE("builders are valid") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  IrrepSet irr = irreps(s3);
  const Field &k = irr.field();
  CHECK(check_algebra(functions_on_group(s3, k)).ok);
  CHECK(check_algebra(point_algebra(s3, k)).ok);
  for (const auto &h : s3.subgroups())
    CHECK(check_algebra(functions_on_cosets(s3, h, k)).ok);
  CHECK(check_algebra(square_zero_extension(s3, irr[2])).ok);
  CHECK(check_algebra(graded_truncated(s3, irr[1], 3)).ok);
  EquivariantAlgebra t = tensor(functions_on_cosets(s3, s3.commutator_subgroup(), k), square_zero_extension(s3, irr[1]));
  CHECK(check_algebra(t).ok);
  CHECK(check_algebra(product(t, point_algebra(s3, k))).ok);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10; ++i) {
    EquivariantAlgebra r = random_algebra(irr, rng, 10);
    CHECK(r.dim() <= 10);
    CHECK(check_algebra(r).ok);
  }
}

TEST_CASE("negative control") {
  const Field k = Field::cyclotomic(3);
  CHECK_NOTHROW(cubic(k, false));
  try {
    cubic(k, true);
    FAIL("expected NotAssociative");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::NotAssociative);
  }
  // non-commutative constants
  FiniteGroup c1 = FiniteGroup::trivial();
  const Scalar one = Scalar::one(k);
  std::vector<SMatrix> left(2, zeros(2, 2, k));
  left[0] = identity(2, k);
  left[1](1, 0) = one;
  left[1](1, 1) = one;
  // e1 e0 = e1 but e0 e1 = e1 too; break it
  left[0](0, 1) = one;
  try {
    make_algebra(c1, k, left, {one, Scalar::zero(k)}, {identity(2, k)});
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK((e.kind() == ErrorKind::NotCommutative || e.kind() == ErrorKind::NoUnit));
  }
}

TEST_CASE("omega examples") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  IrrepSet irr = irreps(s3);
  FunctorData reg = omega(functions_on_group(s3, irr.field()), irr);
  CHECK(reg.ranks == irr.dims());
  CHECK_FALSE(reg.unit.empty());
  CHECK_FALSE(reg.unit[0].is_zero());

  FunctorData pt = omega(point_algebra(s3, irr.field()), irr);
  CHECK(pt.ranks == std::vector<std::size_t>{1, 0, 0});

  IrrepSet i3 = irreps(FiniteGroup::cyclic(3));
  EquivariantAlgebra ex = degree_one_algebra(i3.field());
  CHECK(omega(ex, i3).ranks == std::vector<std::size_t>{1, 2, 0});
  CHECK_FALSE(is_g_cover(ex, i3));

  // Gamma_triv recovers A^G
  EquivariantAlgebra a = square_zero_extension(s3, direct_sum(irr[0], irr[2]));
  CHECK(omega(a, irr).ranks[0] == invariants(a).rows());
}

TEST_CASE("rational irreducibles of Z/3 are refused") {
  const Field Q = Field::rational();
  FiniteGroup c3 = FiniteGroup::cyclic(3);
  SMatrix r = zeros(2, 2, Q);
  r(0, 1) = Scalar::integer(Q, -1);
  r(1, 0) = Scalar::integer(Q, 1);
  r(1, 1) = Scalar::integer(Q, -1);
  Representation two = make_representation(c3, Q, {identity(2, Q), r, r * r});
  std::vector<Representation> bad{trivial_representation(c3, Q), two};
  CHECK_FALSE(validate_good_set(c3, bad).good);
  EquivariantAlgebra fun = functions_on_group(c3, Q);
  try {
    is_g_cover(fun, bad);
    FAIL("expected NotGoodSet");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::NotGoodSet);
  }
}

TEST_CASE("g-cover and torsor predicates") {
  for (auto g : catalog()) {
    IrrepSet irr = irreps(g);
    EquivariantAlgebra fun = functions_on_group(g, irr.field());
    CAPTURE(g.name());
    CHECK(is_g_cover(fun, irr));
    CHECK(is_torsor(fun));
    CHECK_FALSE(is_g_cover(point_algebra(g, irr.field()), irr));
  }
  const Field Q = Field::rational();
  FiniteGroup c2 = FiniteGroup::cyclic(2);
  // k[x]/(x^2), x -> -x
  const Scalar one = Scalar::one(Q);
  EquivariantAlgebra dual_numbers =
      algebra_from_constants(c2, Q, 2, {{0, 0, 0, one}, {0, 1, 1, one}}, {one, Scalar::zero(Q)},
                             {identity(2, Q), diag({one, -one})});
  CHECK_FALSE(is_torsor(dual_numbers));
  SMatrix gram = dual_numbers.alg.trace_gram();
  CHECK(gram(0, 0) == Scalar::integer(Q, 2));
  CHECK(gram(1, 1).is_zero());

  // k x k x k with the cyclic shift
  FiniteGroup c3 = FiniteGroup::cyclic(3);
  EquivariantAlgebra k3 = functions_on_cosets(c3, c3.trivial_subgroup(), Q);
  CHECK(is_torsor(k3));
}

TEST_CASE("f_gamma examples") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  IrrepSet irr = irreps(s3);
  FunctorData pt = square_zero_data(irr, {1, 0, 0});
  EquivariantAlgebra k = f_gamma(pt);
  CHECK(k.dim() == 1);
  CHECK(invariants(k).rows() == 1);

  FunctorData sz = square_zero_data(irr, {1, 2, 1});
  EquivariantAlgebra b = f_gamma(sz);
  CHECK(b.dim() == sz.algebra_dim());
  CHECK(b.dim() == 1 + 2 + 2);
  // F^2 = 0 on the augmentation part
  for (std::size_t i = 1; i < b.dim(); ++i)
    for (std::size_t j = 1; j < b.dim(); ++j)
      CHECK(b.alg.product(i, j).empty());
  CHECK(roundtrip_data(sz));

  // a unit outside Gamma_triv's span of the unit law fails
  FunctorData broken = sz;
  broken.unit = {Scalar::integer(irr.field(), 2)};
  try {
    f_gamma(broken);
    FAIL("expected NoUnit");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::NoUnit);
  }
}

TEST_CASE("roundtrips") {
  for (auto g : catalog()) {
    IrrepSet irr = irreps(g);
    CAPTURE(g.name());
    EquivariantAlgebra fun = functions_on_group(g, irr.field());
    IsoCheck c = roundtrip_algebra(fun, irr);
    CHECK_MESSAGE(c.ok(), c.describe());
    CHECK(roundtrip_data(omega(fun, irr)));
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 3; ++i) {
      FunctorData d = random_functor_data(irr, rng, 8);
      CHECK(roundtrip_data(d));
      EquivariantAlgebra fa = f_gamma(d);
      CHECK(fa.dim() == d.algebra_dim());
      IsoCheck r = roundtrip_algebra(fa, irr);
      CHECK_MESSAGE(r.ok(), r.describe());
    }
  }
}

TEST_CASE("rank function extension") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  IrrepSet irr = irreps(s3);
  RankFunction f{{1, 2, 0}};
  CHECK(f.extend(irr, irr[2]) == 0);
  CHECK(f.extend(irr, direct_sum(irr[1], irr[2])) == 2);
  RankFunction rk{irr.dims()};
  for (std::size_t v = 0; v < irr.size(); ++v)
    CHECK(rk.extend(irr, irr[v]) == irr.dim(v));
  Representation reg = regular_representation(s3, irr.field());
  CHECK(rk.extend(irr, reg) == 1 + 1 + 2 * 2);
}

TEST_CASE("component decomposition") {
  const Field Q = Field::rational();
  FiniteGroup c2 = FiniteGroup::cyclic(2);
  ComponentDecomposition kk = component_decompose(functions_on_group(c2, Q));
  CHECK(kk.idempotents.size() == 2);
  for (const auto &s : kk.stabilizers)
    CHECK(s.order() == 1);

  FiniteGroup s3 = FiniteGroup::symmetric(3);
  EquivariantAlgebra fun = functions_on_group(s3, Q);
  ComponentDecomposition cd = component_decompose(fun);
  CHECK(cd.idempotents.size() == 6);
  CHECK(cd.orbits.size() == 1);
  for (const auto &s : cd.stabilizers)
    CHECK(s.order() == 1);
  // the component of delta_x is sent by g to that of delta_{x g^-1}
  for (std::size_t g = 0; g < 6; ++g)
    for (std::size_t i = 0; i < 6; ++i)
      CHECK(cd.idempotents[cd.permutation[g][i]] == fun.alg.basis_vector(s3.mul(i, s3.inv(g))));

  std::mt19937_64 rng(99);
  IrrepSet irr = irreps(s3);
  for (int t = 0; t < 5; ++t) {
    EquivariantAlgebra a = random_algebra(irr, rng, 12);
    ComponentDecomposition c = component_decompose(a);
    SVector sum = a.alg.zero_vector();
    for (std::size_t i = 0; i < c.idempotents.size(); ++i) {
      sum = add(sum, c.idempotents[i]);
      CHECK(a.alg.mul(c.idempotents[i], c.idempotents[i]) == c.idempotents[i]);
      for (std::size_t j = i + 1; j < c.idempotents.size(); ++j)
        CHECK(is_zero(a.alg.mul(c.idempotents[i], c.idempotents[j])));
    }
    CHECK(sum == a.alg.unit());
    for (const auto &orbit : c.orbits)
      for (auto i : orbit)
        CHECK(orbit.size() * c.stabilizers[i].order() == 6);
  }
}

TEST_CASE("non-split algebras are reported") {
  const Field Q = Field::rational();
  FiniteGroup c1 = FiniteGroup::trivial();
  // Q[x]/(x^2 + 1)
  const Scalar one = Scalar::one(Q);
  EquivariantAlgebra a = algebra_from_constants(c1, Q, 2, {{0, 0, 0, one}, {0, 1, 1, one}, {1, 1, 0, -one}},
                                                {one, Scalar::zero(Q)}, {identity(2, Q)});
  try {
    component_decompose(a);
    FAIL("expected NonSplitAlgebra");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::NonSplitAlgebra);
  }
}
