#include "doctest.h"

#include <algorithm>

#include "galcov/induce.hpp"

using namespace galcov;

namespace {

std::vector<FiniteGroup> catalog() {
  return {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3),   FiniteGroup::cyclic(4), FiniteGroup::parse("CnxCm:2,2"),
          FiniteGroup::symmetric(3), FiniteGroup::dihedral(4), FiniteGroup::quaternion(), FiniteGroup::alternating(4)};
}

Subgroup a3_in(const FiniteGroup &s3) {
  for (const auto &h : s3.subgroups())
    if (h.order() == 3)
      return h;
  FAIL("S3 has no subgroup of order 3");
  return {};
}

// k + chi_1^dual (x) k^2 over A3, square zero
EquivariantAlgebra s3_slice(const FiniteGroup &s3, const Field &k) {
  const FiniteGroup a3 = s3.subgroup_as_group(a3_in(s3));
  IrrepSet irr = irreps(a3, k.level());
  return f_gamma(square_zero_data(irr, {1, 2, 0}));
}

bool conjugate(const FiniteGroup &g, const Subgroup &a, const Subgroup &b) {
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::vector<std::size_t> c;
    for (auto y : a.elements)
      c.push_back(g.conj(x, y));
    std::sort(c.begin(), c.end());
    if (c == b.elements)
      return true;
  }
  return false;
}

// connected H-algebra with invariants k
EquivariantAlgebra connected_slice(const FiniteGroup &hg, const Field &k) {
  if (hg.order() == 1)
    return point_algebra(hg, k);
  IrrepSet irr = irreps(hg, k.level());
  return square_zero_extension(hg, irr[1]);
}

std::size_t component_at(const ComponentDecomposition &cd, std::size_t coordinate) {
  for (std::size_t i = 0; i < cd.idempotents.size(); ++i)
    if (!cd.idempotents[i][coordinate].is_zero())
      return i;
  FAIL("no component at coordinate");
  return 0;
}

} // namespace

TEST_CASE("induction from the whole group and from the trivial subgroup") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  IrrepSet irr = irreps(s3);
  const Field &k = irr.field();
  std::mt19937_64 rng(11);
  EquivariantAlgebra b = restrict(random_algebra(irr, rng, 8), s3.whole());
  InducedModel m = ind_algebra(s3, s3.whole(), b);
  CHECK(m.algebra.dim() == b.dim());
  CHECK(check_cocycle(s3, m));
  CHECK(check_isomorphism(b, m.algebra, identity(b.dim(), k)).ok());
  CHECK(m.projection() == identity(b.dim(), k));

  const Subgroup e = s3.trivial_subgroup();
  InducedModel f = ind_algebra(s3, e, point_algebra(s3.subgroup_as_group(e), k));
  CHECK(f.algebra.dim() == 6);
  CHECK(check_cocycle(s3, f));
  CHECK(check_isomorphism(functions_on_group(s3, k), f.algebra, identity(6, k)).ok());
  CHECK(is_torsor(f.algebra));
}

TEST_CASE("rejects a non-subgroup") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  const Field k = irreps(s3).field();
  Subgroup bad{{0, 1, 2}};
  if (s3.is_subgroup(bad.elements))
    bad = Subgroup{{0, 3, 4}};
  REQUIRE_FALSE(s3.is_subgroup(bad.elements));
  try {
    ind_algebra(s3, bad, point_algebra(FiniteGroup::cyclic(3), k));
    FAIL("expected NotSubgroup");
  } catch (const Error &err) {
    CHECK(err.kind() == ErrorKind::NotSubgroup);
  }
}

TEST_CASE("the S3 witness through induction") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  IrrepSet irr = irreps(s3);
  const Field &k = irr.field();
  const Subgroup h = a3_in(s3);
  IrrepSet irr_h = irreps(s3.subgroup_as_group(h), k.level());
  EquivariantAlgebra b = s3_slice(s3, k);
  CHECK(b.dim() == 3);
  InducedModel m = ind_algebra(s3, h, b);
  CHECK(m.algebra.dim() == 6);
  CHECK(check_algebra(m.algebra).ok);
  CHECK(check_cocycle(s3, m));
  CHECK(is_g_cover(m.algebra, irr));
  CHECK_FALSE(is_etale(m.algebra));

  OmegaInducedReport r = omega_of_induced_check(s3, h, b, irr, irr_h);
  CHECK(r.holds);
  CHECK(r.induced_ranks == std::vector<std::size_t>{1, 1, 2});
  CHECK(r.restricted_ranks == std::vector<std::size_t>{1, 1, 2});

  OmegaInducedReport p = omega_of_induced_check(s3, h, point_algebra(s3.subgroup_as_group(h), k), irr, irr_h);
  CHECK(p.holds);
  CHECK(p.induced_ranks == std::vector<std::size_t>{1, 1, 0});

  OmegaInducedReport t = omega_of_induced_check(s3, h, functions_on_group(s3.subgroup_as_group(h), k), irr, irr_h);
  CHECK(t.holds);
  CHECK(t.induced_ranks == irr.dims());
}

TEST_CASE("induction criterion") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  const Field k = irreps(s3).field();
  EquivariantAlgebra fg = functions_on_group(s3, k);
  const ComponentDecomposition cd = component_decompose(fg);
  const std::size_t z = component_at(cd, s3.identity());
  IndCriterion c = check_ind_criterion(fg, {z}, s3.trivial_subgroup());
  CHECK(c.holds);
  CHECK(c.iso.ok());
  CHECK(c.slice.dim() == 1);
  for (const auto &h : s3.subgroups())
    if (h.order() > 1)
      CHECK_FALSE(check_ind_criterion(fg, {z}, h).holds);

  const Subgroup h = a3_in(s3);
  InducedModel m = ind_algebra(s3, h, s3_slice(s3, k));
  const ComponentDecomposition md = component_decompose(m.algebra);
  std::vector<std::size_t> zs;
  for (std::size_t i = 0; i < md.idempotents.size(); ++i)
    if (!md.idempotents[i][m.identity_block * 3].is_zero())
      zs.push_back(i);
  IndCriterion mc = check_ind_criterion(m.algebra, zs, h);
  CHECK(mc.holds);
  CHECK(mc.iso.ok());
  CHECK(mc.map == identity(6, k));

  // Z not stable under H
  CHECK_FALSE(check_ind_criterion(fg, {z}, a3_in(s3)).holds);
}

TEST_CASE("splitting as induced") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  const Field k = irreps(s3).field();
  SplitResult f = split_as_induced(functions_on_group(s3, k));
  CHECK_FALSE(f.indecomposable);
  CHECK(f.h.order() == 1);
  CHECK(f.slice.dim() == 1);
  CHECK(f.iso.ok());

  const Subgroup h = a3_in(s3);
  SplitResult w = split_as_induced(ind_algebra(s3, h, s3_slice(s3, k)).algebra);
  CHECK_FALSE(w.indecomposable);
  CHECK(w.h == h);
  CHECK(w.slice.dim() == 3);
  CHECK(w.iso.ok());

  FiniteGroup c3 = FiniteGroup::cyclic(3);
  IrrepSet irr3 = irreps(c3);
  SplitResult t = split_as_induced(graded_truncated(c3, irr3[1], 3));
  CHECK(t.indecomposable);
  CHECK(t.h == c3.whole());
  CHECK(t.iso.ok());

  try {
    split_as_induced(product(point_algebra(s3, k), point_algebra(s3, k)));
    FAIL("expected NotTransitive");
  } catch (const Error &err) {
    CHECK(err.kind() == ErrorKind::NotTransitive);
  }
}

TEST_CASE("torsor transfer") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  const Field k = irreps(s3).field();
  for (const auto &h : s3.subgroups()) {
    const FiniteGroup hg = s3.subgroup_as_group(h);
    TorsorTransfer t = torsor_transfer_check(s3, h, functions_on_group(hg, k));
    CHECK(t.base_torsor);
    CHECK(t.consistent());
    TorsorTransfer p = torsor_transfer_check(s3, h, point_algebra(hg, k));
    CHECK(p.consistent());
    CHECK(p.base_torsor == (h.order() == 1));
  }
  // k[x]/(x^2 - 2) with the swap x -> -x
  Subgroup swap;
  for (const auto &h : s3.subgroups())
    if (h.order() == 2) {
      swap = h;
      break;
    }
  const FiniteGroup c2 = s3.subgroup_as_group(swap);
  const Scalar one = Scalar::one(k), zero = Scalar::zero(k);
  std::vector<SMatrix> act;
  for (std::size_t g = 0; g < 2; ++g) {
    SMatrix m = identity(2, k);
    if (g != c2.identity())
      m(1, 1) = -one;
    act.push_back(m);
  }
  EquivariantAlgebra b = algebra_from_constants(c2, k, 2, {{0, 0, 0, one}, {0, 1, 1, one}, {1, 1, 0, Scalar::integer(k, 2)}},
                                                {one, zero}, act);
  TorsorTransfer t = torsor_transfer_check(s3, swap, b);
  CHECK(t.base_torsor);
  CHECK(t.induced_torsor);
}

TEST_CASE("catalog pairs: dimension, restriction, splitting and transitivity") {
  for (const FiniteGroup &g : catalog()) {
    CAPTURE(g.describe());
    IrrepSet irr = irreps(g);
    const Field &k = irr.field();
    for (const Subgroup &h : g.subgroups()) {
      const FiniteGroup hg = g.subgroup_as_group(h);
      EquivariantAlgebra b = connected_slice(hg, k);
      InducedModel m = ind_algebra(g, h, b);
      CHECK(m.algebra.dim() * h.order() == g.order() * b.dim());
      CHECK(check_cocycle(g, m));
      CHECK(check_algebra(m.algebra).ok);
      IrrepSet irr_h = irreps(hg, k.level());
      CHECK(omega_of_induced_check(g, h, b, irr, irr_h).holds);

      SplitResult s = split_as_induced(m.algebra);
      CHECK(s.indecomposable == (h.order() == g.order()));
      CHECK(conjugate(g, h, s.h));
      CHECK(s.slice.dim() == b.dim());
      CHECK(s.iso.ok());

      for (const Subgroup &t : hg.subgroups()) {
        const FiniteGroup tg = hg.subgroup_as_group(t);
        Transitivity tr = induction_transitivity(g, h, t, connected_slice(tg, k));
        CHECK(tr.iso.ok());
      }
    }
  }
}
