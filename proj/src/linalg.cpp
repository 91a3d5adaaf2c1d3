#include "galcov/linalg.hpp"

namespace galcov {

SMatrix zeros(std::size_t rows, std::size_t cols, const Field &f) {
  return SMatrix(rows, cols, Scalar::zero(f));
}

SMatrix identity(std::size_t n, const Field &f) {
  return SMatrix::identity(n, Scalar::zero(f), Scalar::one(f));
}

SMatrix column(const SVector &v) {
  require(!v.empty(), ErrorKind::InvalidArgument, "empty column");
  SMatrix m(v.size(), 1, Scalar::zero(v[0].field()));
  for (std::size_t i = 0; i < v.size(); ++i)
    m(i, 0) = v[i];
  return m;
}

Field field_of(const SMatrix &m) {
  Field f = m.zero().field();
  for (const auto &x : m.data())
    if (x.field() != f)
      f = common_field(f, x.field());
  return f;
}

Echelon rref(SMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c).is_zero())
      ++piv;
    if (piv == rows)
      continue;
    m.swap_rows(piv, r);
    if (!m(r, c).is_one()) {
      const Scalar inv = m(r, c).inv();
      for (std::size_t j = c; j < cols; ++j)
        if (!m(r, j).is_zero())
          m(r, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero())
        continue;
      const Scalar f = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!m(r, j).is_zero())
          m(i, j).sub_mul(f, m(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return {m.block(0, 0, r, cols), std::move(pivots)};
}

std::size_t rank(const SMatrix &m) { return rref(m).pivots.size(); }

SMatrix nullspace(const SMatrix &m) {
  const Field f = field_of(m);
  Echelon e = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots)
    is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free])
      continue;
    std::vector<Scalar> v(n, Scalar::zero(f));
    v[free] = Scalar::one(f);
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      v[e.pivots[i]] = -e.rref(i, free);
    basis.push_back(std::move(v));
  }
  if (basis.empty())
    return zeros(0, n, f);
  return rref(SMatrix::from_rows(basis, n, Scalar::zero(f))).rref;
}

SMatrix row_basis(const SMatrix &m) { return rref(m).rref; }

SMatrix intersect_rows(const SMatrix &a, const SMatrix &b) {
  const Field f = common_field(field_of(a), field_of(b));
  if (a.rows() == 0 || b.rows() == 0)
    return zeros(0, a.cols(), f);
  // x a = y b  <=>  [x y] [a; -b] = 0
  SMatrix stacked = a.vstack(-b);
  SMatrix ker = nullspace(stacked.transpose()); // rows: (x, y)
  if (ker.rows() == 0)
    return zeros(0, a.cols(), f);
  SMatrix xs = ker.block(0, 0, ker.rows(), a.rows());
  return row_basis(xs * a);
}

std::optional<SMatrix> try_inverse(const SMatrix &m) {
  require(m.is_square(), ErrorKind::InvalidArgument, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  const Field f = field_of(m);
  Echelon e = rref(m.hstack(identity(n, f)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1))
    return std::nullopt;
  return e.rref.block(0, n, n, n);
}

SMatrix inverse(const SMatrix &m) {
  auto inv = try_inverse(m);
  if (!inv)
    fail(ErrorKind::InvalidArgument, "matrix is singular");
  return *inv;
}

Scalar det(const SMatrix &m0) {
  require(m0.is_square(), ErrorKind::InvalidArgument, "det of non-square matrix");
  SMatrix m = m0;
  const std::size_t n = m.rows();
  Scalar d = Scalar::one(field_of(m));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c).is_zero())
      ++piv;
    if (piv == n)
      return Scalar::zero(d.field());
    if (piv != c) {
      m.swap_rows(piv, c);
      d = -d;
    }
    d *= m(c, c);
    const Scalar inv = m(c, c).inv();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero())
        continue;
      const Scalar f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        m(i, j).sub_mul(f, m(c, j));
    }
  }
  return d;
}

Scalar trace(const SMatrix &m) {
  Scalar t = Scalar::zero(m.zero().field());
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
    t += m(i, i);
  return t;
}

std::optional<SMatrix> solve(const SMatrix &a, const SMatrix &b) {
  require(a.rows() == b.rows(), ErrorKind::InvalidArgument, "solve shape mismatch");
  const std::size_t n = a.cols(), k = b.cols();
  const Field f = common_field(field_of(a), field_of(b));
  Echelon e = rref(a.hstack(b));
  SMatrix x = zeros(n, k, f);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] >= n)
      return std::nullopt;
    for (std::size_t j = 0; j < k; ++j)
      x(e.pivots[i], j) = e.rref(i, n + j);
  }
  return x;
}

std::optional<SVector> rref_coordinates(const Echelon &basis, const SVector &v) {
  const std::size_t r = basis.pivots.size();
  const Field f = v.empty() ? Field() : v[0].field();
  SVector coords;
  coords.reserve(r);
  for (std::size_t i = 0; i < r; ++i)
    coords.push_back(v[basis.pivots[i]]);
  // verify v = coords * basis
  for (std::size_t j = 0; j < v.size(); ++j) {
    Scalar s = Scalar::zero(f);
    for (std::size_t i = 0; i < r; ++i)
      if (!coords[i].is_zero())
        s.add_mul(coords[i], basis.rref(i, j));
    if (s != v[j])
      return std::nullopt;
  }
  return coords;
}

SMatrix eigenspace(const SMatrix &m, const Scalar &lambda) {
  SMatrix a = m;
  for (std::size_t i = 0; i < a.rows(); ++i)
    a(i, i) -= lambda;
  return nullspace(a);
}

// ---------------------------------------------------------------------------
// k[t]

PMatrix poly_zeros(std::size_t rows, std::size_t cols, const Field &f) {
  return PMatrix(rows, cols, Poly(f));
}

PMatrix poly_identity(std::size_t n, const Field &f) {
  return PMatrix::identity(n, Poly(f), Poly::constant(f, 1));
}

PMatrix to_poly_matrix(const SMatrix &m) {
  PMatrix p(m.rows(), m.cols(), Poly(m.zero().field()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      p(i, j) = Poly::constant(m(i, j));
  return p;
}

Poly det_bareiss(PMatrix m) {
  require(m.is_square(), ErrorKind::InvalidArgument, "det of non-square matrix");
  const std::size_t n = m.rows();
  const Field f = m.zero().field();
  if (n == 0)
    return Poly::constant(f, 1);
  bool negate = false;
  Poly prev = Poly::constant(f, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m(piv, k).is_zero())
        ++piv;
      if (piv == n)
        return Poly(f);
      m.swap_rows(piv, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = num / prev;
      }
    prev = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i)
      m(i, k) = Poly(f);
  }
  Poly d = m(n - 1, n - 1);
  return negate ? -d : d;
}

namespace {

// row_i -= q * row_j
void row_axpy(PMatrix &m, std::size_t i, std::size_t j, const Poly &q) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!m(j, c).is_zero())
      m(i, c) -= q * m(j, c);
}

void col_axpy(PMatrix &m, std::size_t i, std::size_t j, const Poly &q) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!m(r, j).is_zero())
      m(r, i) -= q * m(r, j);
}

void row_scale(PMatrix &m, std::size_t i, const Scalar &c) {
  for (std::size_t col = 0; col < m.cols(); ++col)
    m(i, col) *= c;
}

} // namespace

PMatrix pid_row_echelon(PMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    while (true) {
      // smallest-degree nonzero entry at or below r
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (!m(i, c).is_zero() && (best == rows || m(i, c).degree() < m(best, c).degree()))
          best = i;
      if (best == rows)
        break;
      m.swap_rows(best, r);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (m(i, c).is_zero())
          continue;
        row_axpy(m, i, r, m(i, c) / m(r, c));
        if (!m(i, c).is_zero())
          clean = false;
      }
      if (clean)
        break;
    }
    if (r < rows && !m(r, c).is_zero()) {
      row_scale(m, r, m(r, c).lead().inv());
      for (std::size_t i = 0; i < r; ++i)
        if (!m(i, c).is_zero())
          row_axpy(m, i, r, m(i, c) / m(r, c));
      ++r;
    }
  }
  return m.block(0, 0, r, cols);
}

SmithForm smith_normal_form(const PMatrix &m0) {
  const std::size_t rows = m0.rows(), cols = m0.cols();
  const Field f = m0.zero().field();
  PMatrix d = m0;
  PMatrix P = poly_identity(rows, f), Q = poly_identity(cols, f);
  const std::size_t n = std::min(rows, cols);

  for (std::size_t k = 0; k < n; ++k) {
    while (true) {
      // pivot: minimal degree nonzero entry in the trailing block
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = k; i < rows; ++i)
        for (std::size_t j = k; j < cols; ++j)
          if (!d(i, j).is_zero() && (bi == rows || d(i, j).degree() < d(bi, bj).degree())) {
            bi = i;
            bj = j;
          }
      if (bi == rows)
        break;
      d.swap_rows(k, bi);
      P.swap_rows(k, bi);
      d.swap_cols(k, bj);
      Q.swap_cols(k, bj);

      bool dirty = false;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (d(i, k).is_zero())
          continue;
        Poly q = d(i, k) / d(k, k);
        row_axpy(d, i, k, q);
        row_axpy(P, i, k, q);
        if (!d(i, k).is_zero())
          dirty = true;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (d(k, j).is_zero())
          continue;
        Poly q = d(k, j) / d(k, k);
        col_axpy(d, j, k, q);
        col_axpy(Q, j, k, q);
        if (!d(k, j).is_zero())
          dirty = true;
      }
      if (dirty)
        continue;
      // divisibility of the trailing block by the pivot
      std::size_t bad = rows;
      for (std::size_t i = k + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = k + 1; j < cols; ++j)
          if (!divides(d(k, k), d(i, j))) {
            bad = i;
            break;
          }
      if (bad == rows)
        break;
      // pull the offending row into row k and redo
      const Poly one = Poly::constant(f, 1);
      row_axpy(d, k, bad, -one);
      row_axpy(P, k, bad, -one);
    }
    if (!d(k, k).is_zero() && !d(k, k).lead().is_one()) {
      const Scalar c = d(k, k).lead().inv();
      row_scale(d, k, c);
      row_scale(P, k, c);
    }
  }

  SmithForm out;
  for (std::size_t k = 0; k < n; ++k)
    out.divisors.push_back(d(k, k));
  out.P = std::move(P);
  out.Q = std::move(Q);
  out.D = std::move(d);
  return out;
}

} // namespace galcov
