#include "galcov/rep.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include "galcov/algebra.hpp"
#include "galcov/factor.hpp"
#include "galcov/parallel.hpp"

namespace galcov {

std::size_t &worker_threads() {
  static std::size_t n = 1;
  return n;
}

std::vector<Scalar> Representation::character() const {
  std::vector<Scalar> out;
  out.reserve(mats.size());
  for (const auto &m : mats)
    out.push_back(trace(m));
  return out;
}

void check_representation(const FiniteGroup &g, const Representation &v) {
  require(v.mats.size() == g.order(), ErrorKind::InvalidAction,
          "expected " + std::to_string(g.order()) + " matrices, got " + std::to_string(v.mats.size()));
  for (const auto &m : v.mats)
    require(m.rows() == v.dim && m.cols() == v.dim, ErrorKind::InvalidAction, "matrix of wrong size");
  for (const auto &m : v.mats)
    for (const auto &x : m.data())
      require(x.field() == v.field, ErrorKind::FieldMismatch, "matrix entry outside " + v.field.to_string());
  require(v.mats[g.identity()] == identity(v.dim, v.field), ErrorKind::InvalidAction, "identity does not act trivially");
  // rho(x s) = rho(x) rho(s) for generators s gives a homomorphism by induction
  for (std::size_t s : g.generators())
    for (std::size_t x = 0; x < g.order(); ++x)
      if (v.mats[x] * v.mats[s] != v.mats[g.mul(x, s)])
        fail(ErrorKind::InvalidAction, "rho(" + g.label(x) + ") rho(" + g.label(s) + ") != rho(" +
                                           g.label(g.mul(x, s)) + ")");
}

Representation make_representation(const FiniteGroup &g, const Field &f, std::vector<SMatrix> mats) {
  Representation v{f, mats.empty() ? 0 : mats.front().rows(), std::move(mats)};
  check_representation(g, v);
  return v;
}

Representation character_representation(const FiniteGroup &g, const std::vector<Scalar> &values) {
  require(values.size() == g.order(), ErrorKind::InvalidAction, "character needs one value per element");
  const Field f = values.front().field();
  std::vector<SMatrix> mats;
  for (const auto &x : values) {
    SMatrix m = zeros(1, 1, f);
    m(0, 0) = x;
    mats.push_back(std::move(m));
  }
  return make_representation(g, f, std::move(mats));
}

Representation trivial_representation(const FiniteGroup &g, const Field &f) {
  return Representation{f, 1, std::vector<SMatrix>(g.order(), identity(1, f))};
}

Representation regular_representation(const FiniteGroup &g, const Field &f) {
  const std::size_t n = g.order();
  Representation v{f, n, {}};
  v.mats.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    SMatrix m = zeros(n, n, f);
    for (std::size_t y = 0; y < n; ++y)
      m(g.mul(y, g.inv(x)), y) = Scalar::one(f);
    v.mats.push_back(std::move(m));
  }
  return v;
}

Representation dual(const FiniteGroup &g, const Representation &v) {
  Representation d{v.field, v.dim, {}};
  d.mats.reserve(v.mats.size());
  for (std::size_t x = 0; x < v.mats.size(); ++x)
    d.mats.push_back(v.mats[g.inv(x)].transpose());
  return d;
}

Representation tensor(const Representation &v, const Representation &w) {
  require(v.mats.size() == w.mats.size(), ErrorKind::InvalidArgument, "tensor of representations of different groups");
  Representation t{common_field(v.field, w.field), v.dim * w.dim, {}};
  t.mats.reserve(v.mats.size());
  for (std::size_t x = 0; x < v.mats.size(); ++x)
    t.mats.push_back(kron(v.mats[x], w.mats[x]));
  return t;
}

Representation direct_sum(const Representation &v, const Representation &w) {
  require(v.mats.size() == w.mats.size(), ErrorKind::InvalidArgument, "sum of representations of different groups");
  const Field f = common_field(v.field, w.field);
  Representation s{f, v.dim + w.dim, {}};
  for (std::size_t x = 0; x < v.mats.size(); ++x) {
    SMatrix m = zeros(s.dim, s.dim, f);
    m.set_block(0, 0, v.mats[x]);
    m.set_block(v.dim, v.dim, w.mats[x]);
    s.mats.push_back(std::move(m));
  }
  return s;
}

Representation change_basis(const Representation &v, const SMatrix &p) {
  const SMatrix pinv = inverse(p);
  Representation out{v.field, v.dim, {}};
  for (const auto &m : v.mats)
    out.mats.push_back(pinv * m * p);
  return out;
}

Representation restrict(const Representation &v, const Subgroup &h) {
  Representation r{v.field, v.dim, {}};
  for (std::size_t x : h.elements) {
    require(x < v.mats.size(), ErrorKind::NotSubgroup, "subgroup element out of range");
    r.mats.push_back(v.mats[x]);
  }
  return r;
}

Representation induce(const FiniteGroup &g, const Subgroup &h, const Representation &v) {
  require(g.is_subgroup(h.elements), ErrorKind::NotSubgroup, "not a subgroup");
  require(v.mats.size() == h.order(), ErrorKind::InvalidArgument, "representation is not one of the subgroup");
  const CosetData cos = g.right_cosets(h);
  const std::size_t m = cos.reps.size(), d = v.dim;
  auto pos = [&](std::size_t x) {
    return static_cast<std::size_t>(std::lower_bound(h.elements.begin(), h.elements.end(), x) - h.elements.begin());
  };
  Representation out{v.field, m * d, {}};
  for (std::size_t x = 0; x < g.order(); ++x) {
    SMatrix mat = zeros(m * d, m * d, v.field);
    for (std::size_t a = 0; a < m; ++a) {
      const std::size_t rg = g.mul(cos.reps[a], x);
      const std::size_t b = cos.coset_of[rg];
      const std::size_t hh = g.mul(rg, g.inv(cos.reps[b]));
      mat.set_block(a * d, b * d, v.mats[pos(hh)]);
    }
    out.mats.push_back(std::move(mat));
  }
  return out;
}

void require_invertible_order(const FiniteGroup &g, const Field &f) {
  const std::uint32_t p = f.characteristic();
  if (p != 0 && g.order() % p == 0)
    fail(ErrorKind::NonInvertibleOrder,
         "characteristic " + std::to_string(p) + " divides |G| = " + std::to_string(g.order()));
}

SMatrix reynolds_projector(const FiniteGroup &g, const Representation &v) {
  require_invertible_order(g, v.field);
  SMatrix p = zeros(v.dim, v.dim, v.field);
  for (const auto &m : v.mats)
    p += m;
  p.scale(Scalar::integer(v.field, static_cast<long>(g.order())).inv());
  return p;
}

SMatrix fixed_vectors(const FiniteGroup &g, const Representation &v) {
  const auto gens = g.generators();
  SMatrix stack = zeros(0, v.dim, v.field);
  const SMatrix id = identity(v.dim, v.field);
  for (std::size_t s : gens)
    stack = stack.vstack(v.mats[s] - id);
  if (stack.rows() == 0)
    return id;
  return nullspace(stack);
}

SMatrix invariant_subspace(const FiniteGroup &g, const Representation &v) {
  require_invertible_order(g, v.field);
  return fixed_vectors(g, v);
}

SMatrix vectorize(const SMatrix &m) {
  SMatrix v = zeros(1, m.rows() * m.cols(), m.zero().field());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      v(0, i * m.cols() + j) = m(i, j);
  return v;
}

SMatrix unvectorize(const SVector &v, std::size_t rows, std::size_t cols) {
  require(v.size() == rows * cols, ErrorKind::InvalidArgument, "vector length does not match shape");
  SMatrix m = zeros(rows, cols, v.empty() ? Field::rational() : v.front().field());
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = v[i * cols + j];
  return m;
}

std::vector<SMatrix> intertwiners(const FiniteGroup &g, const Representation &x, const Representation &y) {
  const Field f = common_field(x.field, y.field);
  const std::size_t dx = x.dim, dy = y.dim, n = dx * dy;
  if (n == 0)
    return {};
  const auto gens = g.generators();
  // rho_y(s) M - M rho_x(s) = 0, unknowns M(p, q) at p * dx + q
  SMatrix eq = zeros(gens.size() * n, n, f);
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const SMatrix &X = x.mats[gens[gi]], &Y = y.mats[gens[gi]];
    for (std::size_t i = 0; i < dy; ++i)
      for (std::size_t j = 0; j < dx; ++j) {
        const std::size_t row = gi * n + i * dx + j;
        for (std::size_t k = 0; k < dy; ++k)
          if (!Y(i, k).is_zero())
            eq(row, k * dx + j) += Y(i, k);
        for (std::size_t l = 0; l < dx; ++l)
          if (!X(l, j).is_zero())
            eq(row, i * dx + l) -= X(l, j);
      }
  }
  SMatrix basis = gens.empty() ? identity(n, f) : nullspace(eq);
  std::vector<SMatrix> out;
  for (std::size_t r = 0; r < basis.rows(); ++r)
    out.push_back(unvectorize(basis.row(r), dy, dx));
  return out;
}

static bool is_trivial_rep(const Representation &v) {
  if (v.dim != 1)
    return false;
  for (const auto &m : v.mats)
    if (!m(0, 0).is_one())
      return false;
  return true;
}

GoodReport validate_good_set(const FiniteGroup &g, const std::vector<Representation> &reps) {
  GoodReport rep;
  auto failure = [&](std::string s) {
    rep.good = false;
    rep.failures.push_back(std::move(s));
  };
  if (reps.empty()) {
    failure("empty collection");
    return rep;
  }
  std::vector<bool> valid(reps.size(), true);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (reps[i].field != reps.front().field) {
      failure("member " + std::to_string(i) + " is over a different field");
      valid[i] = false;
      continue;
    }
    try {
      check_representation(g, reps[i]);
    } catch (const Error &e) {
      failure("member " + std::to_string(i) + " is not a representation: " + e.what());
      valid[i] = false;
    }
    rep.sum_dim_squares += reps[i].dim * reps[i].dim;
  }
  if (!std::any_of(reps.begin(), reps.end(), is_trivial_rep))
    failure("trivial representation missing");
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (!valid[i])
      continue;
    const std::size_t e = intertwiners(g, reps[i], reps[i]).size();
    if (e != 1)
      failure("End^G of member " + std::to_string(i) + " has dimension " + std::to_string(e));
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      if (!valid[j])
        continue;
      const std::size_t h = intertwiners(g, reps[i], reps[j]).size();
      if (h != 0)
        failure("Hom^G between members " + std::to_string(i) + " and " + std::to_string(j) + " has dimension " +
                std::to_string(h));
    }
  }
  if (rep.sum_dim_squares != g.order())
    failure("sum of squared dimensions is " + std::to_string(rep.sum_dim_squares) + ", expected " +
            std::to_string(g.order()));
  return rep;
}

// ---------------------------------------------------------------------------

struct IrrepSet::Cache {
  std::mutex mu;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::vector<SMatrix>> tensor;
};

IrrepSet::IrrepSet(FiniteGroup g, Field f, std::vector<Representation> reps)
    : group_(std::move(g)), field_(std::move(f)), reps_(std::move(reps)), cache_(std::make_shared<Cache>()) {
  GoodReport r = validate_good_set(group_, reps_);
  if (r.good && !is_trivial_rep(reps_.front()))
    r = {false, {"trivial representation is not first"}, r.sum_dim_squares};
  if (!r.good) {
    std::string msg;
    for (const auto &s : r.failures)
      msg += (msg.empty() ? "" : "; ") + s;
    fail(ErrorKind::NotGoodSet, msg);
  }
  for (const auto &v : reps_) {
    require(v.field == field_, ErrorKind::FieldMismatch, "irreducible over a different field");
    chars_.push_back(v.character());
  }
}

std::vector<std::size_t> IrrepSet::dims() const {
  std::vector<std::size_t> d;
  for (const auto &v : reps_)
    d.push_back(v.dim);
  return d;
}

std::vector<std::size_t> IrrepSet::multiplicities(const Representation &v) const {
  std::vector<std::size_t> out(size(), 0);
  if (field_.characteristic() != 0) {
    for (std::size_t i = 0; i < size(); ++i)
      out[i] = intertwiners(group_, reps_[i], v).size();
    return out;
  }
  const auto chi = v.character();
  const Scalar inv_n = Scalar::integer(field_, static_cast<long>(group_.order())).inv();
  for (std::size_t i = 0; i < size(); ++i) {
    Scalar s = Scalar::zero(common_field(field_, v.field));
    for (std::size_t x = 0; x < group_.order(); ++x)
      s.add_mul(chi[x], chars_[i][group_.inv(x)]);
    s *= inv_n;
    auto q = s.as_rational();
    require(q && q->get_den() == 1 && *q >= 0, ErrorKind::Internal, "character inner product is not a natural number");
    out[i] = q->get_num().get_ui();
  }
  return out;
}

std::size_t IrrepSet::dual_index(std::size_t i) const {
  for (std::size_t j = 0; j < size(); ++j) {
    bool match = true;
    for (std::size_t x = 0; x < group_.order() && match; ++x)
      match = chars_[j][x] == chars_[i][group_.inv(x)];
    if (match)
      return j;
  }
  fail(ErrorKind::Internal, "dual of an irreducible not found");
}

const std::vector<SMatrix> &IrrepSet::tensor_basis(std::size_t v, std::size_t w, std::size_t u) const {
  const auto key = std::make_tuple(v, w, u);
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->tensor.find(key);
    if (it != cache_->tensor.end())
      return it->second;
  }
  auto basis = intertwiners(group_, reps_[u], tensor(reps_[v], reps_[w]));
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->tensor.emplace(key, std::move(basis)).first->second;
}

TensorDecomposition tensor_decompose(const Representation &v, const Representation &w, const IrrepSet &irr) {
  const Representation vw = tensor(v, w);
  TensorDecomposition out;
  for (std::size_t u = 0; u < irr.size(); ++u) {
    out.intertwiners.push_back(intertwiners(irr.group(), irr[u], vw));
    out.multiplicities.push_back(out.intertwiners.back().size());
  }
  return out;
}

// ---------------------------------------------------------------------------
// irreducibles through the centre of k[G]

namespace {

// rows of b multiplied on the right by h: (v h)_y = v_{y h^-1}
SMatrix right_translate(const FiniteGroup &g, const SMatrix &b, std::size_t h) {
  SMatrix out = zeros(b.rows(), b.cols(), field_of(b));
  const std::size_t hinv = g.inv(h);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t y = 0; y < b.cols(); ++y)
      out(i, y) = b(i, g.mul(y, hinv));
  return out;
}

// span of combinations c * b whose coefficient rows lie in the kernel of c -> c * m
SMatrix combine(const SMatrix &coeffs, const SMatrix &b) {
  if (coeffs.rows() == 0)
    return zeros(0, b.cols(), field_of(b));
  return row_basis(coeffs * b);
}

// S ∩ ker(R_h - lambda)
SMatrix eigen_slice(const FiniteGroup &g, const SMatrix &s, std::size_t h, const Scalar &lambda) {
  SMatrix m = right_translate(g, s, h);
  SMatrix scaled = s;
  scaled.scale(lambda);
  m -= scaled;
  return combine(nullspace(m.transpose()), s);
}

// matrices of left multiplication on the left ideal with RREF basis s
Representation left_action(const FiniteGroup &g, const Echelon &s, const Field &f) {
  const std::size_t d = s.rref.rows();
  Representation v{f, d, {}};
  for (std::size_t x = 0; x < g.order(); ++x) {
    SMatrix m = zeros(d, d, f);
    const std::size_t xinv = g.inv(x);
    // (x b)_y = b_{x^-1 y}; coordinates are read off at the pivots
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < d; ++i)
        m(i, j) = s.rref(j, g.mul(xinv, s.pivots[i]));
    v.mats.push_back(std::move(m));
  }
  return v;
}

SMatrix shrink_by_endomorphisms(const FiniteGroup &g, const SMatrix &s, const Field &f, std::size_t d) {
  SMatrix cur = s;
  while (cur.rows() > d) {
    const Echelon e = rref(cur);
    const Representation sigma = left_action(g, e, f);
    const auto ends = intertwiners(g, sigma, sigma);
    std::vector<SMatrix> trials = ends;
    for (std::size_t a = 0; a < ends.size(); ++a)
      for (std::size_t b = a + 1; b < ends.size(); ++b)
        trials.push_back(ends[a] + ends[b]);
    bool progressed = false;
    for (const auto &phi : trials) {
      // minimal polynomial of phi through its powers
      std::vector<SMatrix> powers{identity(cur.rows(), f)};
      Poly mu(f);
      while (true) {
        SMatrix next = powers.back() * phi;
        SMatrix lhs = zeros(0, next.rows() * next.cols(), f);
        for (const auto &p : powers)
          lhs = lhs.vstack(vectorize(p));
        auto sol = solve(lhs.transpose(), vectorize(next).transpose());
        if (sol) {
          std::vector<Scalar> c(powers.size() + 1, Scalar::zero(f));
          for (std::size_t i = 0; i < powers.size(); ++i)
            c[i] = -(*sol)(i, 0);
          c.back() = Scalar::one(f);
          mu = Poly(f, std::move(c));
          break;
        }
        powers.push_back(std::move(next));
      }
      for (const auto &lambda : roots(mu, kInfiniteValuation)) {
        SMatrix shifted = phi;
        for (std::size_t i = 0; i < phi.rows(); ++i)
          shifted(i, i) -= lambda;
        const SMatrix ker = nullspace(shifted);
        if (ker.rows() > 0 && ker.rows() < cur.rows()) {
          cur = combine(ker, e.rref);
          progressed = true;
          break;
        }
      }
      if (progressed)
        break;
    }
    if (!progressed)
      fail(ErrorKind::SplittingFailure, "no endomorphism of a component has an eigenvalue in " + f.to_string());
  }
  return cur;
}

struct Candidate {
  Representation rep;
  std::vector<Scalar> chi;
};

int compare_character_values(const Scalar &a, const Scalar &b) {
  auto ea = a.root_of_unity_exponent(), eb = b.root_of_unity_exponent();
  if (ea && eb)
    return *ea < *eb ? -1 : (*ea > *eb ? 1 : 0);
  if (ea)
    return -1;
  if (eb)
    return 1;
  return a.compare(b);
}

Candidate irrep_from_idempotent(const FiniteGroup &g, const Field &K, const std::vector<std::size_t> &class_of,
                                const SVector &central) {
  const std::size_t n = g.order();
  SVector e(n);
  for (std::size_t x = 0; x < n; ++x)
    e[x] = central[class_of[x]];
  // W = k[G] e, spanned by the left translates x e
  SMatrix gen = zeros(n, n, K);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t xinv = g.inv(x);
    for (std::size_t y = 0; y < n; ++y)
      gen(x, y) = e[g.mul(xinv, y)];
  }
  SMatrix s = row_basis(gen);
  std::size_t d = 1;
  while (d * d < s.rows())
    ++d;
  require(d * d == s.rows(), ErrorKind::SplittingFailure,
          "isotypic block of dimension " + std::to_string(s.rows()) + " is not a square");

  // right multiplications commute with the left action; their eigenspaces cut
  // the block V (x) V^* down to V (x) line
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return g.element_order(a) > g.element_order(b); });
  for (std::size_t h : order) {
    if (s.rows() == d)
      break;
    const std::size_t oh = g.element_order(h);
    if (oh == 1)
      continue;
    SMatrix best;
    for (std::size_t k = 0; k < oh; ++k) {
      SMatrix t = eigen_slice(g, s, h, Scalar::root_of_unity(K, static_cast<std::uint32_t>(oh), static_cast<long>(k)));
      if (t.rows() > 0 && (best.rows() == 0 || t.rows() < best.rows()))
        best = std::move(t);
    }
    if (best.rows() > 0 && best.rows() < s.rows())
      s = std::move(best);
  }
  if (s.rows() > d)
    s = shrink_by_endomorphisms(g, s, K, d);
  Candidate c{left_action(g, rref(s), K), {}};
  c.chi = c.rep.character();
  return c;
}

} // namespace

namespace {
std::vector<Representation> sorted_reps(std::vector<Candidate> found) {
  std::stable_sort(found.begin(), found.end(), [](const Candidate &a, const Candidate &b) {
    if (a.rep.dim != b.rep.dim)
      return a.rep.dim < b.rep.dim;
    for (std::size_t x = 0; x < a.chi.size(); ++x) {
      int c = compare_character_values(a.chi[x], b.chi[x]);
      if (c)
        return c < 0;
    }
    return false;
  });
  std::vector<Representation> reps;
  for (auto &c : found)
    reps.push_back(std::move(c.rep));
  return reps;
}
} // namespace

IrrepSet irreps(const FiniteGroup &g, std::uint32_t level) {
  require(g.order() <= caps().max_group_order, ErrorKind::CapExceeded,
          "|G| = " + std::to_string(g.order()) + " exceeds the cap " + std::to_string(caps().max_group_order));
  const std::uint32_t e = static_cast<std::uint32_t>(g.exponent());
  if (level == 0)
    level = e;
  require(level % e == 0, ErrorKind::InvalidArgument,
          "level " + std::to_string(level) + " is not a multiple of the exponent " + std::to_string(e));
  const Field K = Field::cyclotomic(level);
  if (level != e) {
    // split at the exponent, where factoring is cheap, then view in K
    IrrepSet base = irreps(g, e);
    std::vector<Candidate> found;
    for (const auto &v : base.reps()) {
      Representation w{K, v.dim, {}};
      for (const auto &m : v.mats) {
        SMatrix l = zeros(m.rows(), m.cols(), K);
        for (std::size_t i = 0; i < m.rows(); ++i)
          for (std::size_t j = 0; j < m.cols(); ++j)
            l(i, j) = m(i, j).lift_to(K);
        w.mats.push_back(std::move(l));
      }
      found.push_back({w, w.character()});
    }
    return IrrepSet(g, K, sorted_reps(std::move(found)));
  }
  const auto classes = g.conjugacy_classes();
  const std::size_t r = classes.size();
  std::vector<std::size_t> class_of(g.order());
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t x : classes[c])
      class_of[x] = c;

  // class sums: C_i C_j = sum_k a_ijk C_k with a_ijk = #{(x,y) : xy = z_k} over a fixed z_k
  std::vector<SMatrix> left(r, zeros(r, r, K));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<long> count(r, 0);
      for (std::size_t x : classes[i])
        for (std::size_t y : classes[j])
          ++count[class_of[g.mul(x, y)]];
      for (std::size_t k = 0; k < r; ++k)
        if (count[k])
          left[i](k, j) = Scalar::from_rational(K, mpq_class(count[k], static_cast<long>(classes[k].size())));
    }
  SVector unit(r, Scalar::zero(K));
  unit[class_of[g.identity()]] = Scalar::one(K);
  CommutativeAlgebra centre(K, std::move(left), std::move(unit));
  IdempotentSplit split;
  try {
    split = split_idempotents(centre);
  } catch (const Error &err) {
    if (err.kind() != ErrorKind::NonSplitAlgebra)
      throw;
    fail(ErrorKind::SplittingFailure, std::string("centre does not split: ") + err.what());
  }
  require(split.idempotents.size() == r, ErrorKind::SplittingFailure,
          "found " + std::to_string(split.idempotents.size()) + " central idempotents for " + std::to_string(r) +
              " classes");

  std::vector<Candidate> found(r);
  parallel_for(r, [&](std::size_t i) { found[i] = irrep_from_idempotent(g, K, class_of, split.idempotents[i]); });
  return IrrepSet(g, K, sorted_reps(std::move(found)));
}

} // namespace galcov
