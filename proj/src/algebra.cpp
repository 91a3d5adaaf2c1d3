#include "galcov/algebra.hpp"

#include <algorithm>

#include "galcov/factor.hpp"

namespace galcov {

SVector add(const SVector &a, const SVector &b) {
  SVector c = a;
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] += b[i];
  return c;
}

SVector sub(const SVector &a, const SVector &b) {
  SVector c = a;
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] -= b[i];
  return c;
}

SVector scale(const SVector &a, const Scalar &s) {
  SVector c = a;
  for (auto &x : c)
    x *= s;
  return c;
}

bool is_zero(const SVector &a) {
  for (const auto &x : a)
    if (!x.is_zero())
      return false;
  return true;
}

int compare_vectors(const SVector &a, const SVector &b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    int c = a[i].compare(b[i]);
    if (c)
      return c;
  }
  return a.size() < b.size() ? -1 : (a.size() > b.size() ? 1 : 0);
}

CommutativeAlgebra::CommutativeAlgebra(Field f, std::vector<SMatrix> left, SVector unit)
    : field_(std::move(f)), left_(std::move(left)), unit_(std::move(unit)) {
  require(left_.size() == unit_.size(), ErrorKind::InvalidArgument, "structure constants and unit disagree");
  const std::size_t d = dim();
  for (const auto &l : left_)
    require(l.rows() == d && l.cols() == d, ErrorKind::InvalidArgument, "structure matrix of wrong size");
  prod_.resize(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (!left_[i](k, j).is_zero())
          prod_[i * d + j].emplace_back(k, left_[i](k, j));
}

SVector CommutativeAlgebra::basis_vector(std::size_t i) const {
  SVector v(dim(), Scalar::zero(field_));
  v[i] = Scalar::one(field_);
  return v;
}

SVector CommutativeAlgebra::zero_vector() const { return SVector(dim(), Scalar::zero(field_)); }

SMatrix CommutativeAlgebra::left_matrix(const SVector &a) const {
  SMatrix m = zeros(dim(), dim(), field_);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero())
      continue;
    const SMatrix &l = left_[i];
    for (std::size_t r = 0; r < dim(); ++r)
      for (std::size_t c = 0; c < dim(); ++c)
        if (!l(r, c).is_zero())
          m(r, c).add_mul(a[i], l(r, c));
  }
  return m;
}

SVector CommutativeAlgebra::mul(const SVector &a, const SVector &b) const {
  SVector out = zero_vector();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero())
      continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j].is_zero())
        continue;
      Scalar ab = a[i] * b[j];
      for (const auto &[k, c] : product(i, j))
        out[k].add_mul(ab, c);
    }
  }
  return out;
}

SVector CommutativeAlgebra::evaluate(const Poly &p, const SVector &a, const SVector &one) const {
  SVector acc = zero_vector();
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    acc = mul(acc, a);
    acc = add(acc, scale(one, p.coeffs()[i].lift_to(field_)));
  }
  return acc;
}

Poly CommutativeAlgebra::minimal_polynomial(const SVector &a, const SVector &one) const {
  // find the first power a^k in the span of 1, a, ..., a^{k-1}
  std::vector<SVector> powers{one};
  while (true) {
    SVector next = mul(powers.back(), a);
    // solve sum c_i powers[i] = next
    const std::size_t k = powers.size();
    SMatrix m = zeros(dim(), k, field_);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t r = 0; r < dim(); ++r)
        m(r, i) = powers[i][r];
    SMatrix rhs = zeros(dim(), 1, field_);
    for (std::size_t r = 0; r < dim(); ++r)
      rhs(r, 0) = next[r];
    auto sol = solve(m, rhs);
    if (sol) {
      std::vector<Scalar> c(k + 1, Scalar::zero(field_));
      for (std::size_t i = 0; i < k; ++i)
        c[i] = -(*sol)(i, 0);
      c[k] = Scalar::one(field_);
      return Poly(field_, std::move(c));
    }
    powers.push_back(std::move(next));
    require(powers.size() <= dim() + 1, ErrorKind::Internal, "minimal polynomial search overran");
  }
}

Scalar CommutativeAlgebra::trace(const SVector &a) const { return galcov::trace(left_matrix(a)); }

SMatrix CommutativeAlgebra::trace_gram() const {
  SVector tr(dim(), Scalar::zero(field_));
  for (std::size_t k = 0; k < dim(); ++k)
    tr[k] = galcov::trace(left_[k]);
  SMatrix g = zeros(dim(), dim(), field_);
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      for (std::size_t k = 0; k < dim(); ++k)
        if (!left_[i](k, j).is_zero())
          g(i, j).add_mul(left_[i](k, j), tr[k]);
  return g;
}

IdempotentSplit split_idempotents(const CommutativeAlgebra &A) {
  const Field &K = A.field();
  std::vector<SVector> current{A.unit()};
  for (std::size_t b = 0; b < A.dim(); ++b) {
    std::vector<SVector> next;
    for (const auto &e : current) {
      const SVector a = A.mul(e, A.basis_vector(b));
      const Poly mu = A.minimal_polynomial(a, e);
      if (mu.degree() <= 1) {
        next.push_back(e);
        continue;
      }
      const auto factors = distinct_factors(mu, kInfiniteValuation);
      for (const auto &p : factors)
        if (p.degree() > 1)
          fail(ErrorKind::NonSplitAlgebra,
               "minimal polynomial " + mu.to_string('x') + " has irreducible factor " + p.to_string('x') +
                   " over " + K.to_string());
      if (factors.size() == 1) {
        next.push_back(e);
        continue;
      }
      for (const auto &p : factors) {
        Poly q = Poly::constant(K, 1), rest = mu;
        while (divides(p, rest)) {
          rest = rest / p;
          q *= p;
        }
        // u * rest = 1 mod q
        auto x = xgcd(rest, q);
        require(x.g.is_one(), ErrorKind::Internal, "CRT factors not coprime");
        Poly idem = (x.s * rest) % mu;
        next.push_back(A.evaluate(idem, a, e));
      }
    }
    current = std::move(next);
  }
  std::sort(current.begin(), current.end(), [](const SVector &x, const SVector &y) {
    auto first = [](const SVector &v) {
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
          return i;
      return v.size();
    };
    const std::size_t fx = first(x), fy = first(y);
    if (fx != fy)
      return fx < fy;
    return compare_vectors(x, y) < 0;
  });
  return {std::move(current)};
}

} // namespace galcov
