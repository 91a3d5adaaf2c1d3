#include "galcov/induce.hpp"

#include <algorithm>
#include <set>

namespace galcov {

namespace {

std::size_t position(const Subgroup &h, std::size_t x) {
  auto it = std::lower_bound(h.elements.begin(), h.elements.end(), x);
  require(it != h.elements.end() && *it == x, ErrorKind::Internal, "element outside the subgroup");
  return static_cast<std::size_t>(it - h.elements.begin());
}

} // namespace

SMatrix InducedModel::projection() const {
  const std::size_t db = base.dim();
  SMatrix p = zeros(db, algebra.dim(), base.field());
  for (std::size_t i = 0; i < db; ++i)
    p(i, identity_block * db + i) = Scalar::one(base.field());
  return p;
}

InducedModel ind_algebra(const FiniteGroup &g, const Subgroup &h, const EquivariantAlgebra &b) {
  require(g.is_subgroup(h.elements), ErrorKind::NotSubgroup, "not a subgroup");
  require(b.group.order() == h.order(), ErrorKind::InvalidArgument, "base algebra is not one of the subgroup");
  InducedModel m{h, g.right_cosets(h), b, {}, {}, 0};
  const std::size_t k = m.cosets.reps.size(), db = b.dim(), d = k * db;
  const Field &f = b.field();
  std::vector<SMatrix> left;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t i = 0; i < db; ++i) {
      SMatrix l = zeros(d, d, f);
      l.set_block(a * db, a * db, b.alg.left()[i]);
      left.push_back(std::move(l));
    }
  SVector unit;
  for (std::size_t a = 0; a < k; ++a)
    unit.insert(unit.end(), b.alg.unit().begin(), b.alg.unit().end());
  m.cocycle.assign(k, std::vector<std::pair<std::size_t, std::size_t>>(g.order()));
  std::vector<SMatrix> action;
  for (std::size_t x = 0; x < g.order(); ++x) {
    SMatrix mat = zeros(d, d, f);
    for (std::size_t a = 0; a < k; ++a) {
      const std::size_t rg = g.mul(m.cosets.reps[a], x);
      const std::size_t bb = m.cosets.coset_of[rg];
      const std::size_t hh = position(h, g.mul(rg, g.inv(m.cosets.reps[bb])));
      m.cocycle[a][x] = {hh, bb};
      mat.set_block(a * db, bb * db, b.action[hh]);
    }
    action.push_back(std::move(mat));
  }
  m.identity_block = m.cosets.coset_of[g.identity()];
  m.algebra = EquivariantAlgebra{g, CommutativeAlgebra(f, std::move(left), std::move(unit)), std::move(action)};
  return m;
}

bool check_cocycle(const FiniteGroup &g, const InducedModel &m) {
  const FiniteGroup hg = g.subgroup_as_group(m.h);
  for (std::size_t a = 0; a < m.cocycle.size(); ++a)
    for (std::size_t x = 0; x < g.order(); ++x) {
      const auto [hx, ax] = m.cocycle[a][x];
      // r_a x = h r'
      if (g.mul(m.cosets.reps[a], x) != g.mul(m.h.elements[hx], m.cosets.reps[ax]))
        return false;
      for (std::size_t y = 0; y < g.order(); ++y) {
        const auto [hy, ay] = m.cocycle[ax][y];
        const auto [hxy, axy] = m.cocycle[a][g.mul(x, y)];
        if (axy != ay || hxy != hg.mul(hx, hy))
          return false;
      }
    }
  return true;
}

OmegaInducedReport omega_of_induced_check(const FiniteGroup &g, const Subgroup &h, const EquivariantAlgebra &b,
                                          const IrrepSet &irr_g, const IrrepSet &irr_h) {
  OmegaInducedReport r;
  const InducedModel m = ind_algebra(g, h, b);
  r.induced_ranks = omega_ranks(m.algebra, irr_g);
  const RankFunction f{omega_ranks(b, irr_h)};
  for (std::size_t v = 0; v < irr_g.size(); ++v)
    r.restricted_ranks.push_back(f.extend(irr_h, restrict(irr_g[v], h)));
  r.holds = r.induced_ranks == r.restricted_ranks;
  return r;
}

IndCriterion check_ind_criterion(const EquivariantAlgebra &a, const std::vector<std::size_t> &z, const Subgroup &h) {
  const FiniteGroup &g = a.group;
  require(g.is_subgroup(h.elements), ErrorKind::NotSubgroup, "not a subgroup");
  const ComponentDecomposition cd = component_decompose(a);
  const std::size_t n = cd.idempotents.size();
  IndCriterion out;
  std::set<std::size_t> zs(z.begin(), z.end());
  for (auto i : zs)
    require(i < n, ErrorKind::InvalidArgument, "component index out of range");
  if (zs.empty()) {
    out.reason = "Z is empty";
    return out;
  }
  for (std::size_t x : h.elements)
    for (auto i : zs)
      if (!zs.count(cd.permutation[x][i])) {
        out.reason = "Z is not stable under " + g.label(x);
        return out;
      }
  std::vector<bool> covered(n, false);
  for (std::size_t x = 0; x < g.order(); ++x) {
    const bool inside = h.contains(x);
    for (auto i : zs) {
      const std::size_t j = cd.permutation[x][i];
      covered[j] = true;
      if (!inside && zs.count(j)) {
        out.reason = g.label(x) + " lies outside H but moves Z onto itself";
        return out;
      }
    }
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
    out.reason = "translates of Z do not cover every component";
    return out;
  }
  out.holds = true;
  out.reason = "criterion holds";
  out.idempotent = a.alg.zero_vector();
  for (auto i : zs)
    out.idempotent = add(out.idempotent, cd.idempotents[i]);
  SMatrix basis;
  out.slice = corner(a, out.idempotent, h, &basis);
  const Echelon ech = rref(basis);
  const InducedModel ind = ind_algebra(g, h, out.slice);
  const std::size_t ds = out.slice.dim(), k = ind.cosets.reps.size();
  out.map = zeros(ind.algebra.dim(), a.dim(), a.field());
  // f_x(r) = e_Z (r . x)
  for (std::size_t j = 0; j < a.dim(); ++j)
    for (std::size_t r = 0; r < k; ++r) {
      const SVector moved = a.action[ind.cosets.reps[r]].col(j);
      const auto c = rref_coordinates(ech, a.alg.mul(out.idempotent, moved));
      require(c.has_value(), ErrorKind::Internal, "projection left the slice");
      for (std::size_t p = 0; p < ds; ++p)
        out.map(r * ds + p, j) = (*c)[p];
    }
  out.iso = check_isomorphism(a, ind.algebra, out.map);
  return out;
}

SplitResult split_as_induced(const EquivariantAlgebra &a) {
  const std::size_t inv = invariants(a).rows();
  if (inv != 1)
    fail(ErrorKind::NotTransitive, "A^G has dimension " + std::to_string(inv));
  const ComponentDecomposition cd = component_decompose(a);
  SplitResult out;
  if (cd.idempotents.size() == 1) {
    out.indecomposable = true;
    out.h = a.group.whole();
    out.slice = restrict(a, out.h);
    out.map = identity(a.dim(), a.field());
    out.iso = check_isomorphism(a, a, out.map);
    return out;
  }
  out.h = cd.stabilizers[0];
  IndCriterion c = check_ind_criterion(a, {0}, out.h);
  require(c.holds, ErrorKind::Internal, "transitive algebra fails the induction criterion: " + c.reason);
  out.slice = std::move(c.slice);
  out.map = std::move(c.map);
  out.iso = c.iso;
  return out;
}

TorsorTransfer torsor_transfer_check(const FiniteGroup &g, const Subgroup &h, const EquivariantAlgebra &b) {
  TorsorTransfer t;
  t.base_torsor = is_torsor(b);
  t.induced_torsor = is_torsor(ind_algebra(g, h, b).algebra);
  return t;
}

Subgroup lift_subgroup(const FiniteGroup &g, const Subgroup &h, const Subgroup &t) {
  std::vector<std::size_t> el;
  for (auto x : t.elements) {
    require(x < h.order(), ErrorKind::NotSubgroup, "element outside the intermediate subgroup");
    el.push_back(h.elements[x]);
  }
  std::sort(el.begin(), el.end());
  return g.subgroup(std::move(el));
}

Subgroup relative_subgroup(const Subgroup &k, const Subgroup &h) {
  Subgroup out;
  for (auto x : h.elements) {
    auto it = std::lower_bound(k.elements.begin(), k.elements.end(), x);
    require(it != k.elements.end() && *it == x, ErrorKind::NotSubgroup, "subgroup is not contained in the larger one");
    out.elements.push_back(static_cast<std::size_t>(it - k.elements.begin()));
  }
  return out;
}

Transitivity induction_transitivity(const FiniteGroup &g, const Subgroup &h, const Subgroup &t,
                                    const EquivariantAlgebra &c) {
  const FiniteGroup hg = g.subgroup_as_group(h);
  InducedModel inner = ind_algebra(hg, t, c);
  Transitivity out{ind_algebra(g, h, inner.algebra), {}, {}, {}};
  const Subgroup tg = lift_subgroup(g, h, t);
  out.direct = ind_algebra(g, tg, c);
  const std::size_t dc = c.dim(), di = inner.algebra.dim();
  out.map = zeros(out.direct.algebra.dim(), out.outer.algebra.dim(), c.field());
  for (std::size_t qpos = 0; qpos < out.direct.cosets.reps.size(); ++qpos) {
    const std::size_t q = out.direct.cosets.reps[qpos];
    // q = h r_a, h = t s_b
    const std::size_t a = out.outer.cosets.coset_of[q];
    const std::size_t hh = position(h, g.mul(q, g.inv(out.outer.cosets.reps[a])));
    const std::size_t b = inner.cosets.coset_of[hh];
    const std::size_t tt = position(t, hg.mul(hh, hg.inv(inner.cosets.reps[b])));
    out.map.set_block(qpos * dc, a * di + b * dc, c.action[tt]);
  }
  out.iso = check_isomorphism(out.outer.algebra, out.direct.algebra, out.map);
  return out;
}

} // namespace galcov
