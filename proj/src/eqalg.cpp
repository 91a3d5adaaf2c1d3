#include "galcov/eqalg.hpp"

#include <algorithm>
#include <numeric>

#include "galcov/parallel.hpp"

namespace galcov {

namespace {

using Sparse = CommutativeAlgebra::Sparse;

// acc += c * v over a dense accumulator that remembers touched slots
struct Accumulator {
  SVector vals;
  std::vector<std::size_t> touched;
  std::vector<char> used;

  Accumulator(std::size_t n, const Field &f) : vals(n, Scalar::zero(f)), used(n, 0) {}
  void add(const Scalar &c, const Sparse &v) {
    for (const auto &[k, x] : v) {
      if (!used[k]) {
        used[k] = 1;
        touched.push_back(k);
      }
      vals[k].add_mul(c, x);
    }
  }
  void clear(const Field &f) {
    for (auto k : touched) {
      vals[k] = Scalar::zero(f);
      used[k] = 0;
    }
    touched.clear();
  }
};

// (e_i e_j) e_k into acc
void triple(const CommutativeAlgebra &a, std::size_t i, std::size_t j, std::size_t k, Accumulator &acc) {
  for (const auto &[m, c] : a.product(i, j))
    acc.add(c, a.product(m, k));
}

SVector column_of(const SMatrix &m, std::size_t j) { return m.col(j); }

SVector coordinates_or_throw(const Echelon &e, const SVector &v, const char *what) {
  auto c = rref_coordinates(e, v);
  require(c.has_value(), ErrorKind::Internal, what);
  return *c;
}

} // namespace

AlgebraCheck check_algebra(const EquivariantAlgebra &A) {
  const CommutativeAlgebra &a = A.alg;
  const std::size_t d = a.dim();
  const Field &f = a.field();
  auto bad = [](ErrorKind k, std::string s) { return AlgebraCheck{false, k, std::move(s)}; };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (a.product(i, j) != a.product(j, i))
        return bad(ErrorKind::NotCommutative, "e" + std::to_string(i) + " e" + std::to_string(j) + " != e" +
                                                  std::to_string(j) + " e" + std::to_string(i));
  for (std::size_t j = 0; j < d; ++j)
    if (a.mul(a.unit(), a.basis_vector(j)) != a.basis_vector(j))
      return bad(ErrorKind::NoUnit, "unit does not fix e" + std::to_string(j));
  // with commutativity, (ij)k = (jk)i = (ki)j on i <= j <= k covers every triple
  Accumulator x(d, f), y(d, f), z(d, f);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      for (std::size_t k = j; k < d; ++k) {
        triple(a, i, j, k, x);
        triple(a, j, k, i, y);
        triple(a, k, i, j, z);
        const bool same = x.vals == y.vals && y.vals == z.vals;
        x.clear(f);
        y.clear(f);
        z.clear(f);
        if (!same)
          return bad(ErrorKind::NotAssociative, "associativity fails on (e" + std::to_string(i) + ", e" +
                                                    std::to_string(j) + ", e" + std::to_string(k) + ")");
      }
  try {
    check_representation(A.group, A.representation());
  } catch (const Error &e) {
    return bad(ErrorKind::InvalidAction, e.what());
  }
  for (std::size_t s : A.group.generators()) {
    const SMatrix &g = A.action[s];
    for (std::size_t i = 0; i < d; ++i)
      if (g * a.left()[i] != a.left_matrix(column_of(g, i)) * g)
        return bad(ErrorKind::InvalidAction,
                   A.group.label(s) + " is not multiplicative on e" + std::to_string(i));
    if (g.apply(a.unit()) != a.unit())
      return bad(ErrorKind::InvalidAction, A.group.label(s) + " moves the unit");
  }
  return {};
}

void validate(const EquivariantAlgebra &a) {
  AlgebraCheck c = check_algebra(a);
  if (!c.ok)
    fail(c.kind, c.detail);
}

EquivariantAlgebra make_algebra(FiniteGroup g, const Field &f, std::vector<SMatrix> left, SVector unit,
                                std::vector<SMatrix> action) {
  EquivariantAlgebra a{std::move(g), CommutativeAlgebra(f, std::move(left), std::move(unit)), std::move(action)};
  validate(a);
  return a;
}

EquivariantAlgebra algebra_from_constants(FiniteGroup g, const Field &f, std::size_t dim,
                                          const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>> &c,
                                          SVector unit, std::vector<SMatrix> action) {
  std::vector<SMatrix> left(dim, zeros(dim, dim, f));
  for (const auto &[i, j, k, v] : c) {
    require(i < dim && j < dim && k < dim, ErrorKind::InvalidArgument, "structure constant index out of range");
    left[i](k, j) = v;
    left[j](k, i) = v;
  }
  return make_algebra(std::move(g), f, std::move(left), std::move(unit), std::move(action));
}

EquivariantAlgebra point_algebra(const FiniteGroup &g, const Field &f) {
  return EquivariantAlgebra{g, CommutativeAlgebra(f, {identity(1, f)}, {Scalar::one(f)}),
                            std::vector<SMatrix>(g.order(), identity(1, f))};
}

EquivariantAlgebra functions_on_group(const FiniteGroup &g, const Field &f) {
  const std::size_t n = g.order();
  std::vector<SMatrix> left(n, zeros(n, n, f));
  for (std::size_t i = 0; i < n; ++i)
    left[i](i, i) = Scalar::one(f);
  return EquivariantAlgebra{g, CommutativeAlgebra(f, std::move(left), SVector(n, Scalar::one(f))),
                            regular_representation(g, f).mats};
}

EquivariantAlgebra functions_on_cosets(const FiniteGroup &g, const Subgroup &h, const Field &f) {
  require(g.is_subgroup(h.elements), ErrorKind::NotSubgroup, "not a subgroup");
  const CosetData cos = g.right_cosets(h);
  const std::size_t m = cos.reps.size();
  std::vector<SMatrix> left(m, zeros(m, m, f));
  for (std::size_t i = 0; i < m; ++i)
    left[i](i, i) = Scalar::one(f);
  std::vector<SMatrix> action;
  for (std::size_t x = 0; x < g.order(); ++x) {
    SMatrix a = zeros(m, m, f);
    for (std::size_t b = 0; b < m; ++b)
      a(cos.coset_of[g.mul(cos.reps[b], g.inv(x))], b) = Scalar::one(f);
    action.push_back(std::move(a));
  }
  return EquivariantAlgebra{g, CommutativeAlgebra(f, std::move(left), SVector(m, Scalar::one(f))), std::move(action)};
}

EquivariantAlgebra square_zero_extension(const FiniteGroup &g, const Representation &m) {
  const Field &f = m.field;
  const std::size_t d = 1 + m.dim;
  std::vector<SMatrix> left(d, zeros(d, d, f));
  left[0] = identity(d, f);
  for (std::size_t i = 1; i < d; ++i)
    left[i](i, 0) = Scalar::one(f);
  SVector unit(d, Scalar::zero(f));
  unit[0] = Scalar::one(f);
  std::vector<SMatrix> action;
  for (std::size_t x = 0; x < g.order(); ++x) {
    SMatrix a = zeros(d, d, f);
    a(0, 0) = Scalar::one(f);
    a.set_block(1, 1, m.mats[x]);
    action.push_back(std::move(a));
  }
  return EquivariantAlgebra{g, CommutativeAlgebra(f, std::move(left), std::move(unit)), std::move(action)};
}

EquivariantAlgebra product(const EquivariantAlgebra &a, const EquivariantAlgebra &b) {
  require(a.group.order() == b.group.order(), ErrorKind::InvalidArgument, "product over different groups");
  const Field f = common_field(a.field(), b.field());
  const std::size_t da = a.dim(), db = b.dim(), d = da + db;
  std::vector<SMatrix> left;
  for (std::size_t i = 0; i < da; ++i) {
    SMatrix l = zeros(d, d, f);
    l.set_block(0, 0, a.alg.left()[i]);
    left.push_back(std::move(l));
  }
  for (std::size_t i = 0; i < db; ++i) {
    SMatrix l = zeros(d, d, f);
    l.set_block(da, da, b.alg.left()[i]);
    left.push_back(std::move(l));
  }
  SVector unit = a.alg.unit();
  unit.insert(unit.end(), b.alg.unit().begin(), b.alg.unit().end());
  for (auto &u : unit)
    u = u.lift_to(f);
  std::vector<SMatrix> action;
  for (std::size_t x = 0; x < a.group.order(); ++x) {
    SMatrix m = zeros(d, d, f);
    m.set_block(0, 0, a.action[x]);
    m.set_block(da, da, b.action[x]);
    action.push_back(std::move(m));
  }
  return EquivariantAlgebra{a.group, CommutativeAlgebra(f, std::move(left), std::move(unit)), std::move(action)};
}

EquivariantAlgebra tensor(const EquivariantAlgebra &a, const EquivariantAlgebra &b) {
  require(a.group.order() == b.group.order(), ErrorKind::InvalidArgument, "tensor over different groups");
  const Field f = common_field(a.field(), b.field());
  std::vector<SMatrix> left;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      left.push_back(kron(a.alg.left()[i], b.alg.left()[j]));
  SVector unit;
  for (const auto &x : a.alg.unit())
    for (const auto &y : b.alg.unit())
      unit.push_back(x * y);
  std::vector<SMatrix> action;
  for (std::size_t x = 0; x < a.group.order(); ++x)
    action.push_back(kron(a.action[x], b.action[x]));
  return EquivariantAlgebra{a.group, CommutativeAlgebra(f, std::move(left), std::move(unit)), std::move(action)};
}

EquivariantAlgebra change_basis(const EquivariantAlgebra &a, const SMatrix &p) {
  const SMatrix pinv = inverse(p);
  std::vector<SMatrix> left;
  for (std::size_t j = 0; j < a.dim(); ++j)
    left.push_back(pinv * a.alg.left_matrix(column_of(p, j)) * p);
  SVector unit = pinv.apply(a.alg.unit());
  std::vector<SMatrix> action;
  for (const auto &m : a.action)
    action.push_back(pinv * m * p);
  return EquivariantAlgebra{a.group, CommutativeAlgebra(a.field(), std::move(left), std::move(unit)),
                            std::move(action)};
}

EquivariantAlgebra restrict(const EquivariantAlgebra &a, const Subgroup &h) {
  require(a.group.is_subgroup(h.elements), ErrorKind::NotSubgroup, "not a subgroup");
  std::vector<SMatrix> action;
  for (std::size_t x : h.elements)
    action.push_back(a.action[x]);
  return EquivariantAlgebra{a.group.subgroup_as_group(h), a.alg, std::move(action)};
}

SMatrix invariants(const EquivariantAlgebra &a) { return fixed_vectors(a.group, a.representation()); }

// ---------------------------------------------------------------------------

std::size_t FunctorData::algebra_dim() const {
  std::size_t d = 0;
  for (std::size_t v = 0; v < ranks.size(); ++v)
    d += irreps.dim(v) * ranks[v];
  return d;
}

bool FunctorData::same_values(const FunctorData &o) const {
  return ranks == o.ranks && unit == o.unit && blocks == o.blocks;
}

FunctorData zero_data(const IrrepSet &irr, std::vector<std::size_t> ranks) {
  require(ranks.size() == irr.size(), ErrorKind::InvalidArgument, "one rank per irreducible expected");
  FunctorData d{irr, std::move(ranks), {}, {}};
  const Field &f = irr.field();
  d.unit = SVector(d.ranks[0], Scalar::zero(f));
  const std::size_t n = irr.size();
  d.blocks.assign(n, std::vector<std::vector<std::vector<SMatrix>>>(n, std::vector<std::vector<SMatrix>>(n)));
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t u = 0; u < n; ++u)
        d.blocks[v][w][u].assign(irr.tensor_basis(v, w, u).size(),
                                 zeros(d.ranks[u], d.ranks[v] * d.ranks[w], f));
  return d;
}

FunctorData square_zero_data(const IrrepSet &irr, std::vector<std::size_t> ranks) {
  require(!ranks.empty() && ranks[0] == 1, ErrorKind::InvalidArgument, "square-zero data needs r_triv = 1");
  FunctorData d = zero_data(irr, std::move(ranks));
  const Field &f = irr.field();
  d.unit = {Scalar::one(f)};
  for (std::size_t w = 0; w < irr.size(); ++w) {
    // triv (x) W = W (x) triv = W with the same matrices; the basis element is
    // a scalar lambda times the identity, so the block is lambda^-1
    for (int side = 0; side < 2; ++side) {
      const std::size_t a = side == 0 ? 0 : w, b = side == 0 ? w : 0;
      const auto &basis = irr.tensor_basis(a, b, w);
      require(basis.size() == 1, ErrorKind::Internal, "unit intertwiner space is not a line");
      SMatrix blk = identity(d.ranks[w], f);
      blk.scale(basis[0](0, 0).inv());
      d.blocks[a][b][w][0] = std::move(blk);
    }
  }
  return d;
}

FunctorData change_basis(const FunctorData &d, const std::vector<SMatrix> &p) {
  require(p.size() == d.ranks.size(), ErrorKind::InvalidArgument, "one basis change per irreducible expected");
  std::vector<SMatrix> pinv;
  for (std::size_t v = 0; v < p.size(); ++v) {
    require(p[v].rows() == d.ranks[v] && p[v].cols() == d.ranks[v], ErrorKind::InvalidArgument,
            "basis change of wrong size");
    pinv.push_back(inverse(p[v]));
  }
  FunctorData out = d;
  out.unit = pinv[0].apply(d.unit);
  const std::size_t n = d.ranks.size();
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w) {
      const SMatrix pvw = kron(p[v], p[w]);
      for (std::size_t u = 0; u < n; ++u)
        for (auto &blk : out.blocks[v][w][u])
          if (!blk.empty())
            blk = pinv[u] * blk * pvw;
    }
  return out;
}

// ---------------------------------------------------------------------------

Omega omega_full(const EquivariantAlgebra &a, const IrrepSet &irr) {
  require_invertible_order(a.group, a.field());
  require(a.group.order() == irr.group().order(), ErrorKind::InvalidArgument, "irreducibles of another group");
  const std::size_t n = irr.size(), d = a.dim();
  const Representation ra = a.representation();
  Omega om;
  om.gamma.resize(n);
  std::vector<Echelon> ech(n);
  parallel_for(n, [&](std::size_t v) {
    om.gamma[v] = fixed_vectors(a.group, tensor(ra, irr[v]));
    ech[v] = rref(om.gamma[v]);
  });
  FunctorData &data = om.data;
  data.irreps = irr;
  for (std::size_t v = 0; v < n; ++v)
    data.ranks.push_back(om.gamma[v].rows());
  const Field f = common_field(a.field(), irr.field());
  {
    SVector u = a.alg.unit();
    for (auto &x : u)
      x = x.lift_to(f);
    data.unit = coordinates_or_throw(ech[0], u, "unit is not invariant");
  }
  data.blocks.assign(n, std::vector<std::vector<std::vector<SMatrix>>>(n, std::vector<std::vector<SMatrix>>(n)));

  // gamma_{v,j} as d x dim V matrix columns
  auto gamma_col = [&](std::size_t v, std::size_t j, std::size_t i) {
    const std::size_t nv = irr.dim(v);
    SVector c(d);
    for (std::size_t x = 0; x < d; ++x)
      c[x] = om.gamma[v](j, x * nv + i);
    return c;
  };

  parallel_for(n * n, [&](std::size_t vw) {
    const std::size_t v = vw / n, w = vw % n;
    const std::size_t nv = irr.dim(v), nw = irr.dim(w), rv = data.ranks[v], rw = data.ranks[w];
    // projections onto the isotypic pieces dual to the intertwiner bases
    SMatrix t = zeros(nv * nw, 0, f);
    std::vector<std::pair<std::size_t, std::size_t>> slots; // (u, s)
    std::vector<std::size_t> start;
    for (std::size_t u = 0; u < n; ++u) {
      const auto &basis = irr.tensor_basis(v, w, u);
      for (std::size_t s = 0; s < basis.size(); ++s) {
        start.push_back(t.cols());
        slots.emplace_back(u, s);
        t = t.cols() == 0 ? basis[s] : t.hstack(basis[s]);
      }
      data.blocks[v][w][u].assign(basis.size(), zeros(data.ranks[u], rv * rw, f));
    }
    if (rv == 0 || rw == 0)
      return;
    const SMatrix tinv = inverse(t);
    for (std::size_t j = 0; j < rv; ++j)
      for (std::size_t l = 0; l < rw; ++l) {
        // product gamma_j gamma_l in A (x) V (x) W, column i * nw + k
        std::vector<SVector> cols(nv * nw);
        for (std::size_t i = 0; i < nv; ++i) {
          const SVector gi = gamma_col(v, j, i);
          for (std::size_t k = 0; k < nw; ++k)
            cols[i * nw + k] = a.alg.mul(gi, gamma_col(w, l, k));
        }
        for (std::size_t q = 0; q < slots.size(); ++q) {
          const auto [u, s] = slots[q];
          const std::size_t nu = irr.dim(u);
          if (data.ranks[u] == 0)
            continue;
          SVector img(d * nu, Scalar::zero(f));
          for (std::size_t c = 0; c < nu; ++c)
            for (std::size_t col = 0; col < nv * nw; ++col) {
              const Scalar &pi = tinv(start[q] + c, col);
              if (pi.is_zero())
                continue;
              for (std::size_t x = 0; x < d; ++x)
                if (!cols[col][x].is_zero())
                  img[x * nu + c].add_mul(pi, cols[col][x]);
            }
          const SVector coords = coordinates_or_throw(ech[u], img, "product left the invariants");
          SMatrix &blk = data.blocks[v][w][u][s];
          for (std::size_t c = 0; c < coords.size(); ++c)
            blk(c, j * rw + l) = coords[c];
        }
      }
  });
  return om;
}

FunctorData omega(const EquivariantAlgebra &a, const IrrepSet &irr) { return omega_full(a, irr).data; }

std::vector<std::size_t> f_gamma_offsets(const FunctorData &d) {
  std::vector<std::size_t> off(d.ranks.size() + 1, 0);
  for (std::size_t v = 0; v < d.ranks.size(); ++v)
    off[v + 1] = off[v] + d.irreps.dim(v) * d.ranks[v];
  return off;
}

EquivariantAlgebra f_gamma(const FunctorData &d) {
  const IrrepSet &irr = d.irreps;
  const std::size_t n = irr.size();
  require(d.ranks.size() == n, ErrorKind::InvalidArgument, "one rank per irreducible expected");
  require(d.unit.size() == d.ranks[0], ErrorKind::InvalidArgument, "unit must have r_triv coordinates");
  const Field &f = irr.field();
  const auto off = f_gamma_offsets(d);
  const std::size_t D = off[n];
  std::vector<SMatrix> left(D, zeros(D, D, f));
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w) {
      const std::size_t nv = irr.dim(v), nw = irr.dim(w), rv = d.ranks[v], rw = d.ranks[w];
      if (rv == 0 || rw == 0)
        continue;
      for (std::size_t u = 0; u < n; ++u) {
        const std::size_t nu = irr.dim(u), ru = d.ranks[u];
        if (ru == 0)
          continue;
        const auto &basis = irr.tensor_basis(v, w, u);
        require(d.blocks[v][w][u].size() == basis.size(), ErrorKind::InvalidArgument, "block count mismatch");
        for (std::size_t s = 0; s < basis.size(); ++s) {
          const SMatrix &S = basis[s];
          const SMatrix &mu = d.blocks[v][w][u][s];
          require(mu.rows() == ru && mu.cols() == rv * rw, ErrorKind::InvalidArgument, "block of wrong size");
          for (std::size_t i = 0; i < nv; ++i)
            for (std::size_t k = 0; k < nw; ++k)
              for (std::size_t uu = 0; uu < nu; ++uu) {
                const Scalar &sv = S(i * nw + k, uu);
                if (sv.is_zero())
                  continue;
                for (std::size_t j = 0; j < rv; ++j)
                  for (std::size_t l = 0; l < rw; ++l)
                    for (std::size_t c = 0; c < ru; ++c) {
                      const Scalar &m = mu(c, j * rw + l);
                      if (m.is_zero())
                        continue;
                      left[off[v] + i * rv + j](off[u] + uu * ru + c, off[w] + k * rw + l).add_mul(sv, m);
                    }
              }
        }
      }
    }
  SVector unit(D, Scalar::zero(f));
  for (std::size_t j = 0; j < d.ranks[0]; ++j)
    unit[off[0] + j] = d.unit[j].lift_to(f);
  std::vector<SMatrix> action;
  for (std::size_t x = 0; x < irr.group().order(); ++x) {
    SMatrix m = zeros(D, D, f);
    const std::size_t xinv = irr.group().inv(x);
    for (std::size_t v = 0; v < n; ++v)
      if (d.ranks[v])
        m.set_block(off[v], off[v], kron(irr[v].mats[xinv].transpose(), identity(d.ranks[v], f)));
    action.push_back(std::move(m));
  }
  EquivariantAlgebra a{irr.group(), CommutativeAlgebra(f, std::move(left), std::move(unit)), std::move(action)};
  validate(a);
  return a;
}

SMatrix canonical_beta(const EquivariantAlgebra &a, const Omega &om) {
  const FunctorData &data = om.data;
  const auto off = f_gamma_offsets(data);
  const std::size_t d = a.dim();
  SMatrix b = zeros(d, off.back(), data.irreps.field());
  for (std::size_t v = 0; v < data.ranks.size(); ++v) {
    const std::size_t nv = data.irreps.dim(v), rv = data.ranks[v];
    for (std::size_t i = 0; i < nv; ++i)
      for (std::size_t j = 0; j < rv; ++j)
        for (std::size_t x = 0; x < d; ++x)
          b(x, off[v] + i * rv + j) = om.gamma[v](j, x * nv + i);
  }
  return b;
}

std::string IsoCheck::describe() const {
  std::string s;
  auto add = [&](bool ok, const char *name) {
    if (!ok)
      s += (s.empty() ? "" : ", ") + std::string(name);
  };
  add(invertible, "not invertible");
  add(equivariant, "not equivariant");
  add(multiplicative, "not multiplicative");
  add(unital, "unit not preserved");
  return s.empty() ? "isomorphism" : s;
}

IsoCheck check_isomorphism(const EquivariantAlgebra &src, const EquivariantAlgebra &dst, const SMatrix &m) {
  IsoCheck c;
  if (m.rows() != dst.dim() || m.cols() != src.dim())
    return c;
  c.invertible = m.is_square() && rank(m) == m.rows();
  c.equivariant = true;
  for (std::size_t s : src.group.generators())
    if (dst.action[s] * m != m * src.action[s]) {
      c.equivariant = false;
      break;
    }
  c.unital = m.apply(src.alg.unit()) == dst.alg.unit();
  c.multiplicative = true;
  std::vector<SVector> cols;
  for (std::size_t j = 0; j < src.dim(); ++j)
    cols.push_back(m.col(j));
  for (std::size_t i = 0; i < src.dim() && c.multiplicative; ++i)
    for (std::size_t j = i; j < src.dim(); ++j) {
      SVector lhs(dst.dim(), Scalar::zero(dst.field()));
      for (const auto &[k, x] : src.alg.product(i, j))
        for (std::size_t r = 0; r < dst.dim(); ++r)
          if (!cols[k][r].is_zero())
            lhs[r].add_mul(x, cols[k][r]);
      if (lhs != dst.alg.mul(cols[i], cols[j])) {
        c.multiplicative = false;
        break;
      }
    }
  return c;
}

IsoCheck roundtrip_algebra(const EquivariantAlgebra &a, const IrrepSet &irr) {
  const Omega om = omega_full(a, irr);
  const EquivariantAlgebra fa = f_gamma(om.data);
  return check_isomorphism(fa, a, canonical_beta(a, om));
}

bool roundtrip_data(const FunctorData &d) {
  const EquivariantAlgebra fa = f_gamma(d);
  return omega(fa, d.irreps).same_values(d);
}

std::size_t RankFunction::extend(const IrrepSet &irr, const Representation &u) const {
  const auto m = irr.multiplicities(u);
  std::size_t s = 0;
  for (std::size_t v = 0; v < m.size(); ++v)
    s += m[v] * values[v];
  return s;
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> omega_ranks(const EquivariantAlgebra &a, const IrrepSet &irr) {
  require_invertible_order(a.group, a.field());
  std::vector<std::size_t> r(irr.size());
  parallel_for(irr.size(), [&](std::size_t v) {
    r[v] = fixed_vectors(a.group, tensor(a.representation(), irr[v])).rows();
  });
  return r;
}

bool is_g_cover(const EquivariantAlgebra &a, const IrrepSet &irr) {
  require_invertible_order(a.group, a.field());
  if (a.dim() != a.group.order())
    return false;
  return omega_ranks(a, irr) == irr.dims();
}

bool is_g_cover(const EquivariantAlgebra &a, const std::vector<Representation> &irr) {
  require(!irr.empty(), ErrorKind::NotGoodSet, "empty collection");
  return is_g_cover(a, IrrepSet(a.group, irr.front().field, irr));
}

bool is_etale(const EquivariantAlgebra &a) {
  return rank(a.alg.trace_gram()) == a.dim();
}

bool is_torsor(const EquivariantAlgebra &a) {
  return a.dim() == a.group.order() && is_etale(a) && invariants(a).rows() == 1;
}

ComponentDecomposition component_decompose(const EquivariantAlgebra &a) {
  ComponentDecomposition out;
  out.idempotents = split_idempotents(a.alg).idempotents;
  const std::size_t m = out.idempotents.size();
  for (const auto &e : out.idempotents) {
    SMatrix rows = zeros(a.dim(), a.dim(), a.field());
    for (std::size_t b = 0; b < a.dim(); ++b)
      rows.set_row(b, a.alg.mul(e, a.alg.basis_vector(b)));
    out.components.push_back(row_basis(rows));
  }
  out.permutation.assign(a.group.order(), std::vector<std::size_t>(m));
  for (std::size_t g = 0; g < a.group.order(); ++g)
    for (std::size_t i = 0; i < m; ++i) {
      const SVector ge = a.action[g].apply(out.idempotents[i]);
      auto it = std::find(out.idempotents.begin(), out.idempotents.end(), ge);
      require(it != out.idempotents.end(), ErrorKind::Internal, "group does not permute the idempotents");
      out.permutation[g][i] = static_cast<std::size_t>(it - out.idempotents.begin());
    }
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::size_t> st;
    for (std::size_t g = 0; g < a.group.order(); ++g)
      if (out.permutation[g][i] == i)
        st.push_back(g);
    out.stabilizers.push_back(a.group.subgroup(std::move(st)));
  }
  std::vector<bool> seen(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    if (seen[i])
      continue;
    std::vector<std::size_t> orbit;
    for (std::size_t g = 0; g < a.group.order(); ++g) {
      const std::size_t j = out.permutation[g][i];
      if (!seen[j]) {
        seen[j] = true;
        orbit.push_back(j);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

EquivariantAlgebra corner(const EquivariantAlgebra &a, const SVector &e, const Subgroup &h, SMatrix *basis) {
  require(a.group.is_subgroup(h.elements), ErrorKind::NotSubgroup, "not a subgroup");
  const Field &f = a.field();
  SMatrix rows = zeros(a.dim(), a.dim(), f);
  for (std::size_t b = 0; b < a.dim(); ++b)
    rows.set_row(b, a.alg.mul(e, a.alg.basis_vector(b)));
  const Echelon ech = rref(rows);
  const std::size_t m = ech.rref.rows();
  std::vector<SVector> bvec;
  for (std::size_t p = 0; p < m; ++p)
    bvec.push_back(ech.rref.row(p));
  auto coords = [&](const SVector &v) {
    auto c = rref_coordinates(ech, v);
    require(c.has_value(), ErrorKind::InvalidArgument, "vector outside e A (is e stable under the subgroup?)");
    return *c;
  };
  std::vector<SMatrix> left(m, zeros(m, m, f));
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) {
      const SVector c = coords(a.alg.mul(bvec[p], bvec[q]));
      for (std::size_t r = 0; r < m; ++r)
        left[p](r, q) = c[r];
    }
  const SVector unit = coords(e);
  std::vector<SMatrix> action;
  for (std::size_t x : h.elements) {
    SMatrix mat = zeros(m, m, f);
    for (std::size_t q = 0; q < m; ++q) {
      const SVector c = coords(a.action[x].apply(bvec[q]));
      for (std::size_t r = 0; r < m; ++r)
        mat(r, q) = c[r];
    }
    action.push_back(std::move(mat));
  }
  if (basis)
    *basis = ech.rref;
  return EquivariantAlgebra{a.group.subgroup_as_group(h), CommutativeAlgebra(f, std::move(left), unit),
                            std::move(action)};
}

// ---------------------------------------------------------------------------

SMatrix random_unimodular(std::size_t n, const Field &f, std::mt19937_64 &rng) {
  SMatrix m = identity(n, f);
  if (n == 0)
    return m;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (std::size_t step = 0; step < 3 * n; ++step) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j)
      continue;
    const int c = coef(rng);
    if (c == 0)
      continue;
    // row_i += c row_j
    for (std::size_t k = 0; k < n; ++k)
      m(i, k) += Scalar::integer(f, c) * m(j, k);
  }
  for (std::size_t step = 0; step < n; ++step)
    m.swap_rows(idx(rng), idx(rng));
  return m;
}

SMatrix random_invertible(std::size_t n, const Field &f, std::mt19937_64 &rng) {
  SMatrix m = random_unimodular(n, f, rng);
  std::uniform_int_distribution<int> scale(1, 3);
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar s = Scalar::integer(f, scale(rng));
    for (std::size_t k = 0; k < n; ++k)
      m(i, k) *= s;
  }
  return m;
}

EquivariantAlgebra graded_truncated(const FiniteGroup &g, const Representation &chi, std::size_t n) {
  require(chi.dim == 1 && n >= 1, ErrorKind::InvalidArgument, "graded piece needs a character and n >= 1");
  const Field &f = chi.field;
  std::vector<SMatrix> left(n, zeros(n, n, f));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j)
      left[i](i + j, j) = Scalar::one(f);
  SVector unit(n, Scalar::zero(f));
  unit[0] = Scalar::one(f);
  std::vector<SMatrix> action;
  for (std::size_t x = 0; x < g.order(); ++x) {
    SMatrix m = zeros(n, n, f);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = chi.mats[x](0, 0).pow(static_cast<std::int64_t>(i));
    action.push_back(std::move(m));
  }
  return EquivariantAlgebra{g, CommutativeAlgebra(f, std::move(left), std::move(unit)), std::move(action)};
}

EquivariantAlgebra random_algebra(const IrrepSet &irr, std::mt19937_64 &rng, std::size_t max_dim) {
  const FiniteGroup &g = irr.group();
  const Field &f = irr.field();
  require(max_dim >= 1, ErrorKind::InvalidArgument, "max_dim must be positive");
  std::vector<std::size_t> linear;
  for (std::size_t v = 0; v < irr.size(); ++v)
    if (irr.dim(v) == 1)
      linear.push_back(v);
  const auto &subs = g.subgroups();
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };

  auto piece = [&](std::size_t budget) -> EquivariantAlgebra {
    for (int attempt = 0; attempt < 20; ++attempt) {
      switch (pick(4)) {
      case 0: {
        const Subgroup &h = subs[pick(subs.size())];
        if (g.order() / h.order() <= budget)
          return functions_on_cosets(g, h, f);
        break;
      }
      case 1: {
        Representation m = irr[pick(irr.size())];
        if (pick(2) && m.dim * 2 + 1 <= budget)
          m = direct_sum(m, irr[pick(irr.size())]);
        if (m.dim + 1 <= budget)
          return square_zero_extension(g, m);
        break;
      }
      case 2: {
        const std::size_t n = 2 + pick(2);
        if (n <= budget)
          return graded_truncated(g, irr[linear[pick(linear.size())]], n);
        break;
      }
      default:
        break;
      }
    }
    return point_algebra(g, f);
  };

  EquivariantAlgebra a = piece(max_dim);
  const std::size_t extra = pick(3);
  for (std::size_t k = 0; k < extra && a.dim() < max_dim; ++k) {
    EquivariantAlgebra b = piece(max_dim - a.dim());
    if (pick(4) == 0 && a.dim() * b.dim() <= max_dim)
      a = tensor(a, b);
    else if (a.dim() + b.dim() <= max_dim)
      a = product(a, b);
  }
  return change_basis(a, random_invertible(a.dim(), f, rng));
}

FunctorData random_functor_data(const IrrepSet &irr, std::mt19937_64 &rng, std::size_t max_dim) {
  const FunctorData d = omega(random_algebra(irr, rng, max_dim), irr);
  std::vector<SMatrix> p;
  for (std::size_t v = 0; v < irr.size(); ++v)
    p.push_back(random_invertible(d.ranks[v], irr.field(), rng));
  return change_basis(d, p);
}

} // namespace galcov
