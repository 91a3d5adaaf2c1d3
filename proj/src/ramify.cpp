#include "galcov/ramify.hpp"

#include <algorithm>
#include <numeric>

#include "galcov/factor.hpp"
#include "galcov/parallel.hpp"

namespace galcov {

namespace {

Poly pzero(const Field &f) { return Poly(f); }
Poly pone(const Field &f) { return Poly::constant(Scalar::one(f)); }

bool row_is_zero(const std::vector<Poly> &r) {
  return std::all_of(r.begin(), r.end(), [](const Poly &p) { return p.is_zero(); });
}

PMatrix kron(const PMatrix &a, const PMatrix &b, const Field &f) {
  PMatrix m = poly_zeros(a.rows() * b.rows(), a.cols() * b.cols(), f);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero())
        continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero())
            m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

PMatrix lift(const PMatrix &m, const Field &f) {
  PMatrix r = poly_zeros(m.rows(), m.cols(), f);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r(i, j) = m(i, j).lift_to(f);
  return r;
}

SMatrix evaluate(const PMatrix &m, const Scalar &c) {
  SMatrix r = zeros(m.rows(), m.cols(), c.field());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r(i, j) = m(i, j).evaluate(c);
  return r;
}

PMatrix scaled(PMatrix m, const Poly &c) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero())
        m(i, j) = m(i, j) * c;
  return m;
}

// multiplication by sum v_j e_j
PMatrix left_of(const CoverOverDVR &a, const std::vector<Poly> &v) {
  PMatrix m = poly_zeros(a.dim(), a.dim(), a.field);
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!v[j].is_zero())
      m += scaled(a.left[j], v[j]);
  return m;
}

std::vector<Poly> apply(const PMatrix &m, const std::vector<Poly> &v, const Field &f) {
  std::vector<Poly> r(m.rows(), pzero(f));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !v[j].is_zero())
        r[i] += m(i, j) * v[j];
  return r;
}

// nonzero rows of the echelon form: a basis of the row module
PMatrix row_lattice(const PMatrix &m, const Field &f) {
  const PMatrix e = pid_row_echelon(m);
  std::vector<std::vector<Poly>> rows;
  for (std::size_t i = 0; i < e.rows(); ++i) {
    auto r = e.row(i);
    if (!row_is_zero(r))
      rows.push_back(std::move(r));
  }
  return PMatrix::from_rows(rows, m.cols(), pzero(f));
}

std::vector<std::size_t> divisor_valuations(const PMatrix &m) {
  std::vector<std::size_t> v;
  if (m.rows() == 0 || m.cols() == 0)
    return v;
  for (const auto &d : smith_normal_form(m).divisors)
    v.push_back(d.valuation());
  return v;
}

void require_invertible(const CoverOverDVR &a) {
  const auto p = a.field.characteristic();
  if (p != 0 && a.group.order() % p == 0)
    fail(ErrorKind::NonInvertibleOrder,
         "|G| = " + std::to_string(a.group.order()) + " is divisible by the characteristic " + std::to_string(p));
}

// (1/|G|) sum rho_A(g) (x) rho_V(g), coordinates a * dim V + i
PMatrix reynolds(const CoverOverDVR &a, const Representation &v) {
  const Field &f = a.field;
  const std::size_t n = a.dim() * v.dim;
  PMatrix p = poly_zeros(n, n, f);
  for (std::size_t g = 0; g < a.group.order(); ++g)
    p += kron(a.action[g], to_poly_matrix(v.mats[g]), f);
  return scaled(p, Poly::constant(Scalar::integer(f, static_cast<long>(a.group.order())).inv()));
}

// rows: k[t]-basis of (A (x) V)^G, the image of the Reynolds idempotent
PMatrix omega_lattice(const CoverOverDVR &a, const Representation &v) {
  return row_lattice(reynolds(a, v).transpose(), a.field);
}

} // namespace

EquivariantAlgebra CoverOverDVR::fiber(const Scalar &c) const {
  std::vector<SMatrix> l, act;
  for (const auto &m : left)
    l.push_back(evaluate(m, c));
  SVector u;
  for (const auto &p : unit)
    u.push_back(p.evaluate(c));
  for (const auto &m : action)
    act.push_back(evaluate(m, c));
  return make_algebra(group, field, std::move(l), std::move(u), std::move(act));
}

void validate(const CoverOverDVR &a) {
  const std::size_t d = a.dim();
  const Field &f = a.field;
  require(a.left.size() == d, ErrorKind::SchemaError, "need one multiplication matrix per basis element");
  require(a.action.size() == a.group.order(), ErrorKind::SchemaError, "need one action matrix per group element");
  for (const auto &m : a.left)
    require(m.rows() == d && m.cols() == d, ErrorKind::SchemaError, "multiplication matrix has the wrong shape");
  for (const auto &m : a.action)
    require(m.rows() == d && m.cols() == d, ErrorKind::SchemaError, "action matrix has the wrong shape");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (a.left[i](k, j) != a.left[j](k, i))
          fail(ErrorKind::NotCommutative, "e" + std::to_string(i) + " e" + std::to_string(j));
  if (left_of(a, a.unit) != poly_identity(d, f))
    fail(ErrorKind::NoUnit, "unit vector does not act as the identity");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      if (a.left[i] * a.left[j] != left_of(a, a.left[i].col(j)))
        fail(ErrorKind::NotAssociative, "L(e" + std::to_string(i) + ") L(e" + std::to_string(j) + ")");
  const FiniteGroup &g = a.group;
  if (a.action[g.identity()] != poly_identity(d, f))
    fail(ErrorKind::InvalidAction, "identity acts nontrivially");
  for (std::size_t x : g.generators()) {
    if (det_bareiss(a.action[x]).valuation() != 0)
      fail(ErrorKind::InvalidAction, "action of " + g.label(x) + " is not invertible at t = 0");
    const PMatrix &r = a.action[x];
    if (apply(r, a.unit, f) != a.unit)
      fail(ErrorKind::InvalidAction, g.label(x) + " moves the unit");
    for (std::size_t i = 0; i < d; ++i)
      if (r * a.left[i] != left_of(a, r.col(i)) * r)
        fail(ErrorKind::InvalidAction, g.label(x) + " is not multiplicative on e" + std::to_string(i));
  }
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y : g.generators())
      if (a.action[g.mul(x, y)] != a.action[x] * a.action[y])
        fail(ErrorKind::InvalidAction, "not a homomorphism at (" + g.label(x) + ", " + g.label(y) + ")");
}

CoverOverDVR constant_cover(const EquivariantAlgebra &a) {
  CoverOverDVR c{a.group, a.field(), {}, {}, {}};
  for (const auto &m : a.alg.left())
    c.left.push_back(to_poly_matrix(m));
  for (const auto &s : a.alg.unit())
    c.unit.push_back(Poly::constant(s));
  for (const auto &m : a.action)
    c.action.push_back(to_poly_matrix(m));
  return c;
}

CoverOverDVR lift_to(const CoverOverDVR &a, const Field &f) {
  if (a.field == f)
    return a;
  CoverOverDVR c{a.group, f, {}, {}, {}};
  for (const auto &m : a.left)
    c.left.push_back(lift(m, f));
  for (const auto &p : a.unit)
    c.unit.push_back(p.lift_to(f));
  for (const auto &m : a.action)
    c.action.push_back(lift(m, f));
  return c;
}

CoverOverDVR change_basis(const CoverOverDVR &a, const PMatrix &p, const PMatrix &p_inv) {
  const std::size_t d = a.dim();
  require(p.rows() == d && p.cols() == d && p * p_inv == poly_identity(d, a.field), ErrorKind::InvalidArgument,
          "basis change is not invertible over k[t]");
  CoverOverDVR c{a.group, a.field, {}, apply(p_inv, a.unit, a.field), {}};
  for (std::size_t i = 0; i < d; ++i)
    c.left.push_back(p_inv * left_of(a, p.col(i)) * p);
  for (const auto &m : a.action)
    c.action.push_back(p_inv * m * p);
  return c;
}

CoverOverDVR tensor(const CoverOverDVR &a, const CoverOverDVR &b) {
  require(a.field == b.field, ErrorKind::FieldMismatch, "covers over different fields");
  const Field &f = a.field;
  CoverOverDVR c{FiniteGroup::direct_product(a.group, b.group), f, {}, {}, {}};
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      c.left.push_back(kron(a.left[i], b.left[j], f));
      c.unit.push_back(a.unit[i] * b.unit[j]);
    }
  for (std::size_t g = 0; g < a.group.order(); ++g)
    for (std::size_t h = 0; h < b.group.order(); ++h)
      c.action.push_back(kron(a.action[g], b.action[h], f));
  return c;
}

CoverOverDVR induce(const FiniteGroup &g, const Subgroup &h, const CoverOverDVR &b) {
  require(g.is_subgroup(h.elements), ErrorKind::NotSubgroup, "not a subgroup");
  require(b.group.order() == h.order(), ErrorKind::InvalidArgument, "base cover is not one of the subgroup");
  const CosetData cos = g.right_cosets(h);
  const std::size_t k = cos.reps.size(), db = b.dim(), d = k * db;
  const Field &f = b.field;
  CoverOverDVR c{g, f, {}, {}, {}};
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t i = 0; i < db; ++i) {
      PMatrix l = poly_zeros(d, d, f);
      l.set_block(a * db, a * db, b.left[i]);
      c.left.push_back(std::move(l));
      c.unit.push_back(b.unit[i]);
    }
  for (std::size_t x = 0; x < g.order(); ++x) {
    PMatrix m = poly_zeros(d, d, f);
    for (std::size_t a = 0; a < k; ++a) {
      const std::size_t rg = g.mul(cos.reps[a], x);
      const std::size_t bb = cos.coset_of[rg];
      const std::size_t hx = g.mul(rg, g.inv(cos.reps[bb]));
      const auto pos = static_cast<std::size_t>(std::lower_bound(h.elements.begin(), h.elements.end(), hx) -
                                                h.elements.begin());
      m.set_block(a * db, bb * db, b.action[pos]);
    }
    c.action.push_back(std::move(m));
  }
  return c;
}

CoverOverDVR kummer_builder(std::size_t n, std::size_t m, const Field &f) {
  require(n >= 1 && m >= 1, ErrorKind::InvalidArgument, "need n >= 1 and m >= 1");
  require(f.kind() != FieldKind::PrimeField || n % f.characteristic() != 0, ErrorKind::InvalidArgument,
          "n is divisible by the characteristic");
  if (!f.contains_root_of_unity(static_cast<std::uint32_t>(n)))
    fail(ErrorKind::MissingRootOfUnity, f.to_string() + " does not contain a primitive " + std::to_string(n) +
                                            "-th root of unity");
  CoverOverDVR c{FiniteGroup::cyclic(n), f, {}, std::vector<Poly>(n, pzero(f)), {}};
  c.unit[0] = pone(f);
  const Poly tm = Poly::monomial(Scalar::one(f), m);
  for (std::size_t i = 0; i < n; ++i) {
    PMatrix l = poly_zeros(n, n, f);
    for (std::size_t j = 0; j < n; ++j) {
      if (i + j < n)
        l(i + j, j) = pone(f);
      else
        l(i + j - n, j) = tm;
    }
    c.left.push_back(std::move(l));
  }
  for (std::size_t g = 0; g < n; ++g) {
    PMatrix a = poly_zeros(n, n, f);
    for (std::size_t i = 0; i < n; ++i)
      a(i, i) = Poly::constant(Scalar::root_of_unity(f, static_cast<std::uint32_t>(n), static_cast<std::int64_t>(g * i)));
    c.action.push_back(std::move(a));
  }
  validate(c);
  return c;
}

CoverOverDVR quadratic_cover(const Poly &b, const Poly &c) {
  const Field &f = b.field();
  CoverOverDVR q{FiniteGroup::cyclic(2), f, {}, {pone(f), pzero(f)}, {}};
  q.left.push_back(poly_identity(2, f));
  PMatrix x = poly_zeros(2, 2, f);
  x(1, 0) = pone(f);
  x(0, 1) = -c;
  x(1, 1) = -b;
  q.left.push_back(std::move(x));
  q.action.push_back(poly_identity(2, f));
  PMatrix s = poly_zeros(2, 2, f);
  s(0, 0) = pone(f);
  s(0, 1) = -b;
  s(1, 1) = -pone(f);
  q.action.push_back(std::move(s));
  validate(q);
  return q;
}

Poly resultant(const std::vector<Poly> &f, const std::vector<Poly> &g) {
  require(!f.empty() && !g.empty(), ErrorKind::InvalidArgument, "empty polynomial");
  const Field &k = f.front().field();
  const std::size_t m = f.size() - 1, n = g.size() - 1, s = m + n;
  if (s == 0)
    return pone(k);
  PMatrix syl = poly_zeros(s, s, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j)
      syl(i, i + j) = f[m - j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j)
      syl(n + i, i + j) = g[n - j];
  return det_bareiss(std::move(syl));
}

Poly discriminant_oracle(const std::vector<Poly> &f) {
  require(f.size() >= 2, ErrorKind::InvalidArgument, "need degree at least one");
  const Field &k = f.front().field();
  std::vector<Poly> d;
  for (std::size_t i = 1; i < f.size(); ++i)
    d.push_back(f[i] * Scalar::integer(k, static_cast<long>(i)));
  return resultant(f, d);
}

IrrepSet cover_irreps(CoverOverDVR &a) {
  require_invertible(a);
  if (a.field.kind() == FieldKind::PrimeField)
    fail(ErrorKind::HypothesisUnmet, "irreducibles are only computed over cyclotomic fields");
  const std::uint32_t e = static_cast<std::uint32_t>(a.group.exponent());
  const std::uint32_t level = std::lcm(a.field.level(), e);
  IrrepSet irr = irreps(a.group, level);
  a = lift_to(a, irr.field());
  return irr;
}

TracePackage trace_package(const CoverOverDVR &a, const IrrepSet *irr) {
  const std::size_t d = a.dim();
  const Field &f = a.field;
  TracePackage t;
  for (std::size_t i = 0; i < d; ++i) {
    Poly s = pzero(f);
    for (std::size_t k = 0; k < d; ++k)
      s += a.left[i](k, k);
    t.trace.push_back(std::move(s));
  }
  t.gram = poly_zeros(d, d, f);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (!a.left[i](k, j).is_zero())
          t.gram(i, j) += a.left[i](k, j) * t.trace[k];
  t.s_f = det_bareiss(t.gram);
  t.v_s_f = t.s_f.valuation();
  t.gram_divisor_valuations = divisor_valuations(t.gram);

  if (!irr) {
    t.equivariant_note = "no irreducible set supplied";
    return t;
  }
  const auto p = f.characteristic();
  if (p != 0 && a.group.order() % p == 0) {
    t.equivariant_note = "the characteristic divides |G|";
    return t;
  }
  require(irr->field() == f, ErrorKind::FieldMismatch, "irreducibles and cover live over different fields");
  const FiniteGroup &g = a.group;
  t.sections.resize(irr->size());
  parallel_for(irr->size(), [&](std::size_t v) {
    const Representation &rv = (*irr)[v];
    const Representation rd = dual(g, rv);
    const PMatrix gv = omega_lattice(a, rv), gd = omega_lattice(a, rd);
    IrrepSection &s = t.sections[v];
    s.rank = gv.rows();
    s.dual_rank = gd.rows();
    s.quotient_rank = rv.dim - fixed_vectors(g, rv).rows();
    if (s.rank != s.dual_rank)
      fail(ErrorKind::NotSquare, "Omega has rank " + std::to_string(s.rank) + " on irreducible " + std::to_string(v) +
                                     " but rank " + std::to_string(s.dual_rank) + " on its dual");
    const std::size_t n = rv.dim;
    // (a (x) v_i) . (b (x) v^i) -> tr(ab)
    PMatrix pairing = kron(t.gram, poly_identity(n, f), f);
    s.xi = gv * pairing * gd.transpose();
    s.s = s.rank ? det_bareiss(s.xi) : pone(f);
    s.valuation = s.s.valuation();
    s.divisor_valuations = divisor_valuations(s.xi);
  });
  t.equivariant = true;
  return t;
}

TameVerdict tame_check(const CoverOverDVR &a, const IrrepSet *irr) {
  TameVerdict v;
  const std::size_t d = a.dim();
  std::string unmet;
  const auto p = a.field.characteristic();
  if (!irr)
    unmet = "no irreducible set (the characteristic divides |G| or the field is not cyclotomic)";
  else if (p != 0 && a.group.order() % p == 0)
    unmet = "the characteristic divides |G|";
  else if (d != a.group.order())
    unmet = "rk A = " + std::to_string(d) + " differs from |G| = " + std::to_string(a.group.order());
  else {
    for (std::size_t i = 0; i < irr->size() && unmet.empty(); ++i)
      if (omega_lattice(a, (*irr)[i]).rows() != irr->dim(i))
        unmet = "the generic fiber is not a G-cover (irreducible " + std::to_string(i) + ")";
  }
  v.package = trace_package(a, unmet.empty() ? irr : nullptr);
  v.cond2 = v.package.v_s_f < d;
  v.unmet = unmet;
  if (unmet.empty()) {
    bool c4 = true, c5 = true;
    for (const auto &s : v.package.sections)
      c4 = c4 && s.valuation <= s.quotient_rank;
    for (auto e : v.package.gram_divisor_valuations)
      c5 = c5 && e <= 1;
    v.cond4 = c4;
    v.cond5 = c5;
    v.consistent = v.cond2 == c4 && c4 == c5;
  }
  return v;
}

TraceDecomposition trace_decomposition_check(const CoverOverDVR &a, const IrrepSet &irr) {
  const Field &f = a.field;
  const std::size_t d = a.dim();
  const FiniteGroup &g = a.group;
  const auto p = f.characteristic();
  if (p != 0 && g.order() % p == 0)
    fail(ErrorKind::HypothesisUnmet, "the characteristic divides |G|");
  if (d != g.order())
    fail(ErrorKind::HypothesisUnmet, "rk A differs from |G|");
  require(irr.field() == f, ErrorKind::FieldMismatch, "irreducibles and cover live over different fields");
  const PMatrix inv = omega_lattice(a, irr[0]);
  bool base = inv.rows() == 1;
  if (base) {
    // A^G = k[t] . 1 up to a constant
    std::size_t j = 0;
    while (j < d && inv(0, j).is_zero())
      ++j;
    const auto [q, r] = divmod(a.unit[j], inv(0, j));
    base = r.is_zero() && q.degree() == 0;
    for (std::size_t i = 0; base && i < d; ++i)
      base = inv(0, i) * q == a.unit[i];
  }
  if (!base)
    fail(ErrorKind::HypothesisUnmet, "A^G is not the base ring");

  TraceDecomposition r;
  const TracePackage pkg = trace_package(a, &irr);
  // sum over nontrivial V of (dim V / |G|) sum chi_V(g^-1) rho(g)
  const Poly order_inv = Poly::constant(Scalar::integer(f, static_cast<long>(g.order())).inv());
  PMatrix nontrivial = poly_zeros(d, d, f);
  for (std::size_t v = 1; v < irr.size(); ++v)
    for (std::size_t x = 0; x < g.order(); ++x) {
      const Scalar c = irr.character(v)[g.inv(x)] * Scalar::integer(f, static_cast<long>(irr.dim(v)));
      nontrivial += scaled(a.action[x], Poly::constant(c) * order_inv);
    }
  PMatrix e_triv = poly_zeros(d, d, f);
  for (std::size_t x = 0; x < g.order(); ++x)
    e_triv += scaled(a.action[x], order_inv);
  PMatrix tr_row = poly_zeros(1, d, f);
  for (std::size_t i = 0; i < d; ++i)
    tr_row(0, i) = pkg.trace[i];
  // both sides saturated of rank d - 1, one inside the other
  r.kernel_matches = nontrivial + e_triv == poly_identity(d, f) && (tr_row * nontrivial).is_zero() &&
                     !tr_row.is_zero() && row_lattice(nontrivial.transpose(), f).rows() + 1 == d;
  r.v_s_f = pkg.v_s_f;
  for (std::size_t v = 0; v < irr.size(); ++v)
    r.weighted_sum += irr.dim(v) * pkg.sections[v].valuation;
  r.valuation_matches = r.v_s_f == r.weighted_sum;
  return r;
}

std::vector<FiberPoint> fiber_regularity(const CoverOverDVR &a) {
  const std::size_t d = a.dim();
  const Field &f = a.field;
  const EquivariantAlgebra a0 = a.special_fiber();
  IdempotentSplit split;
  try {
    split = split_idempotents(a0.alg);
  } catch (const Error &e) {
    if (e.kind() != ErrorKind::NonSplitAlgebra)
      throw;
    fail(ErrorKind::NonSplitFiber, std::string("special fiber does not split: ") + e.what());
  }
  // A / t^2 A: pairs (u0, u1) for u0 + t u1
  std::vector<SMatrix> c0, c1;
  for (const auto &m : a.left) {
    SMatrix z0 = zeros(d, d, f), z1 = zeros(d, d, f);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        z0(i, j) = m(i, j).coeff(0);
        z1(i, j) = m(i, j).coeff(1);
      }
    c0.push_back(std::move(z0));
    c1.push_back(std::move(z1));
  }
  auto bil = [&](const std::vector<SMatrix> &c, const SVector &u, const SVector &v) {
    SVector r(d, Scalar::zero(f));
    for (std::size_t i = 0; i < d; ++i) {
      if (u[i].is_zero())
        continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (v[j].is_zero())
          continue;
        const Scalar uv = u[i] * v[j];
        for (std::size_t k = 0; k < d; ++k)
          if (!c[i](k, j).is_zero())
            r[k].add_mul(uv, c[i](k, j));
      }
    }
    return r;
  };
  auto mulbar = [&](const SVector &u, const SVector &v) {
    const SVector u0(u.begin(), u.begin() + d), u1(u.begin() + d, u.end());
    const SVector v0(v.begin(), v.begin() + d), v1(v.begin() + d, v.end());
    SVector r = bil(c0, u0, v0);
    const SVector r1 = add(add(bil(c0, u0, v1), bil(c0, u1, v0)), bil(c1, u0, v0));
    r.insert(r.end(), r1.begin(), r1.end());
    return r;
  };

  std::vector<FiberPoint> points;
  const auto p = f.characteristic();
  for (const auto &e : split.idempotents) {
    FiberPoint pt;
    pt.idempotent = e;
    pt.length = rank(a0.alg.left_matrix(e));
    // residue character phi(e_i): the eigenvalue of e e_i on e A0
    SMatrix phi = zeros(1, 2 * d, f);
    for (std::size_t i = 0; i < d; ++i) {
      const Poly mp = a0.alg.minimal_polynomial(a0.alg.mul(e, a0.alg.basis_vector(i)), e);
      const auto rs = roots(mp);
      if (rs.size() != 1 || distinct_factors(mp).size() != 1)
        fail(ErrorKind::NonSplitFiber, "residue field at a point over t = 0 is not k");
      phi(0, i) = rs.front();
    }
    const SMatrix m = nullspace(phi);
    std::vector<SVector> prods;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = i; j < m.rows(); ++j)
        prods.push_back(mulbar(m.row(i), m.row(j)));
    const std::size_t sq = prods.empty() ? 0 : rank(SMatrix::from_rows(prods, 2 * d, Scalar::zero(f)));
    pt.cotangent_dim = m.rows() - sq;
    pt.regular = pt.cotangent_dim == 1;
    if (pt.regular)
      pt.tameness = (p != 0 && pt.length % p == 0) ? Tameness::Wild : Tameness::Tame;
    points.push_back(std::move(pt));
  }
  return points;
}

std::string tameness_name(Tameness t) {
  switch (t) {
  case Tameness::Tame: return "tame";
  case Tameness::Wild: return "wild";
  case Tameness::Undetermined: return "undetermined";
  }
  return "undetermined";
}

std::pair<PMatrix, PMatrix> random_poly_unimodular(std::size_t n, const Field &f, std::mt19937_64 &rng) {
  PMatrix p = poly_identity(n, f), q = poly_identity(n, f);
  if (n == 0)
    return {p, q};
  std::uniform_int_distribution<long> coef(-2, 2);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1), deg(0, 1);
  const std::size_t moves = n + 2;
  for (std::size_t s = 0; s < moves; ++s) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j) {
      // negate a basis vector
      PMatrix e = poly_identity(n, f);
      e(i, i) = -pone(f);
      p = p * e;
      q = e * q;
      continue;
    }
    long c = coef(rng);
    if (c == 0)
      c = 1;
    const Poly x = Poly::monomial(Scalar::integer(f, c), deg(rng));
    PMatrix e = poly_identity(n, f), ei = poly_identity(n, f);
    e(i, j) = x;
    ei(i, j) = -x;
    p = p * e;
    q = ei * q;
  }
  return {p, q};
}

} // namespace galcov
