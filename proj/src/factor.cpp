#include "galcov/factor.hpp"

#include <algorithm>
#include <random>

#include "galcov/group.hpp"
#include "galcov/linalg.hpp"

namespace galcov {

namespace {

// ---------------------------------------------------------------------------
// polynomials over Z/P with P an arbitrary prime (possibly large)

using ModPoly = std::vector<mpz_class>;

struct ModRing {
  mpz_class P;

  void trim(ModPoly &a) const {
    while (!a.empty() && a.back() == 0)
      a.pop_back();
  }
  mpz_class red(const mpz_class &x) const {
    mpz_class r = x % P;
    if (r < 0)
      r += P;
    return r;
  }
  mpz_class inv(const mpz_class &x) const {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), P.get_mpz_t()) == 0)
      fail(ErrorKind::DivisionByZero, "non-invertible residue");
    return r;
  }
  ModPoly sub(ModPoly a, const ModPoly &b) const {
    if (b.size() > a.size())
      a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
      a[i] = red(a[i] - b[i]);
    trim(a);
    return a;
  }
  ModPoly add(ModPoly a, const ModPoly &b) const {
    if (b.size() > a.size())
      a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
      a[i] = red(a[i] + b[i]);
    trim(a);
    return a;
  }
  ModPoly mul(const ModPoly &a, const ModPoly &b) const {
    if (a.empty() || b.empty())
      return {};
    ModPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0)
        continue;
      for (std::size_t j = 0; j < b.size(); ++j)
        c[i + j] += a[i] * b[j];
    }
    for (auto &x : c)
      x = red(x);
    trim(c);
    return c;
  }
  // returns (quotient, remainder)
  std::pair<ModPoly, ModPoly> divmod(ModPoly a, const ModPoly &b) const {
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size())
      return {{}, a};
    const mpz_class li = inv(b.back());
    ModPoly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
      if (a[i] == 0)
        continue;
      mpz_class c = red(a[i] * li);
      q[i - db] = c;
      for (std::size_t j = 0; j <= db; ++j)
        a[i - db + j] = red(a[i - db + j] - c * b[j]);
    }
    trim(a);
    trim(q);
    return {q, a};
  }
  ModPoly mod(const ModPoly &a, const ModPoly &b) const { return divmod(a, b).second; }
  ModPoly monic(ModPoly a) const {
    if (a.empty())
      return a;
    const mpz_class li = inv(a.back());
    for (auto &x : a)
      x = red(x * li);
    return a;
  }
  ModPoly gcd(ModPoly a, ModPoly b) const {
    while (!b.empty()) {
      ModPoly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  ModPoly powmod(const ModPoly &base, const mpz_class &e, const ModPoly &m) const {
    ModPoly result = mod(ModPoly{1}, m), b = mod(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      result = mod(mul(result, result), m);
      if (mpz_tstbit(e.get_mpz_t(), i))
        result = mod(mul(result, b), m);
    }
    return result;
  }
  ModPoly derivative(const ModPoly &a) const {
    ModPoly d;
    for (std::size_t i = 1; i < a.size(); ++i)
      d.push_back(red(a[i] * static_cast<unsigned long>(i)));
    trim(d);
    return d;
  }
};

long deg(const ModPoly &a) { return static_cast<long>(a.size()) - 1; }

// equal-degree splitting of a product of distinct irreducibles of degree d
void equal_degree_split(const ModRing &R, const ModPoly &g, long d, std::mt19937_64 &rng,
                        std::vector<ModPoly> &out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  const long n = deg(g);
  mpz_class Pd;
  mpz_pow_ui(Pd.get_mpz_t(), R.P.get_mpz_t(), static_cast<unsigned long>(d));
  gmp_randclass grand(gmp_randinit_default);
  grand.seed(static_cast<unsigned long>(rng()));
  for (int attempt = 0; attempt < 1000; ++attempt) {
    ModPoly a(static_cast<std::size_t>(n));
    for (auto &x : a)
      x = grand.get_z_range(R.P);
    R.trim(a);
    if (deg(a) < 1)
      continue;
    ModPoly b;
    if (R.P == 2) {
      // trace map a + a^2 + ... + a^(2^(d-1))
      ModPoly acc = R.mod(a, g), pw = acc;
      for (long i = 1; i < d; ++i) {
        pw = R.mod(R.mul(pw, pw), g);
        acc = R.add(acc, pw);
      }
      b = acc;
    } else {
      mpz_class e = (Pd - 1) / 2;
      b = R.sub(R.powmod(a, e, g), ModPoly{1});
    }
    ModPoly u = R.gcd(g, b);
    if (deg(u) > 0 && deg(u) < n) {
      equal_degree_split(R, u, d, rng, out);
      equal_degree_split(R, R.divmod(g, u).first, d, rng, out);
      return;
    }
  }
  fail(ErrorKind::Internal, "equal-degree splitting did not converge");
}

// monic squarefree f over Z/P -> monic irreducible factors
std::vector<ModPoly> factor_mod(const ModRing &R, ModPoly f) {
  f = R.monic(f);
  std::vector<ModPoly> out;
  if (deg(f) <= 0)
    return out;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  const ModPoly x{0, 1};
  ModPoly h = x;
  for (long d = 1; 2 * d <= deg(f); ++d) {
    h = R.powmod(h, R.P, f);
    ModPoly g = R.gcd(f, R.sub(h, x));
    if (deg(g) > 0) {
      equal_degree_split(R, g, d, rng, out);
      f = R.divmod(f, g).first;
      h = R.mod(h, f);
    }
  }
  if (deg(f) > 0)
    out.push_back(f);
  return out;
}

// ---------------------------------------------------------------------------
// Q

using ZPoly = std::vector<mpz_class>;

// primitive integer polynomial proportional to f (f rational coefficients)
ZPoly primitive_integer(const Poly &f) {
  mpz_class den = 1;
  for (const auto &c : f.coeffs()) {
    const mpq_class q = *c.as_rational();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
  }
  ZPoly z;
  mpz_class content = 0;
  for (const auto &c : f.coeffs()) {
    mpq_class q = *c.as_rational() * den;
    z.push_back(q.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), q.get_num().get_mpz_t());
  }
  for (auto &x : z)
    x /= content;
  if (z.back() < 0)
    for (auto &x : z)
      x = -x;
  return z;
}

Poly zpoly_to_poly(const ZPoly &z) {
  std::vector<Scalar> c;
  for (const auto &x : z)
    c.push_back(Scalar::rational(mpq_class(x)));
  return Poly(Field::rational(), std::move(c));
}

std::vector<Poly> factor_rational(const Poly &f) {
  const long n = f.degree();
  if (n <= 1)
    return {f.monic()};
  ZPoly z = primitive_integer(f);
  const mpz_class lc = z.back();
  mpz_class maxc = 0;
  for (const auto &c : z)
    if (abs(c) > maxc)
      maxc = abs(c);
  // coefficient bound for lc * (any factor) : 2^n (n+1) |f|_inf |lc|
  mpz_class bound = maxc * abs(lc) * (n + 1);
  bound <<= static_cast<mp_bitcnt_t>(n);
  bound *= 2;

  // pick, among a few admissible primes, the one with fewest modular factors
  ModRing best_ring{0};
  std::vector<ModPoly> best;
  mpz_class candidate = bound;
  for (int tries = 0, found = 0; found < 3 && tries < 200; ++tries) {
    mpz_nextprime(candidate.get_mpz_t(), candidate.get_mpz_t());
    ModRing R{candidate};
    if (R.red(lc) == 0)
      continue;
    ModPoly fm;
    for (const auto &c : z)
      fm.push_back(R.red(c));
    R.trim(fm);
    if (deg(R.gcd(fm, R.derivative(fm))) != 0)
      continue;
    auto facs = factor_mod(R, fm);
    ++found;
    if (best.empty() || facs.size() < best.size()) {
      best = std::move(facs);
      best_ring = R;
    }
  }
  require(!best.empty(), ErrorKind::Internal, "no admissible prime for factoring");

  const ModRing &R = best_ring;
  const mpz_class half = R.P / 2;
  Poly rest = zpoly_to_poly(z);
  std::vector<Poly> out;
  std::vector<ModPoly> pool = best;
  std::size_t s = 1;
  while (2 * s <= pool.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i)
      idx[i] = i;
    while (true) {
      ModPoly prod{R.red(primitive_integer(rest).back())};
      for (auto i : idx)
        prod = R.mul(prod, pool[i]);
      ZPoly cand;
      for (const auto &c : prod)
        cand.push_back(c > half ? c - R.P : c);
      Poly h = zpoly_to_poly(cand);
      if (h.degree() > 0) {
        auto [q, r] = divmod(rest, h);
        if (r.is_zero()) {
          out.push_back(h.monic());
          rest = q;
          std::vector<ModPoly> next;
          for (std::size_t i = 0; i < pool.size(); ++i)
            if (std::find(idx.begin(), idx.end(), i) == idx.end())
              next.push_back(pool[i]);
          pool = std::move(next);
          found = true;
          break;
        }
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == pool.size() - s + k - 1)
        --k;
      if (k == 0)
        break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j)
        idx[j] = idx[j - 1] + 1;
    }
    if (!found)
      ++s;
  }
  if (rest.degree() > 0)
    out.push_back(rest.monic());
  return out;
}

// ---------------------------------------------------------------------------
// F_p

std::vector<Poly> factor_prime_field(const Poly &f) {
  const std::uint32_t p = f.field().modulus();
  ModRing R{mpz_class(p)};
  ModPoly fm;
  for (const auto &c : f.coeffs())
    fm.push_back(mpz_class(c.residue_value()));
  auto facs = factor_mod(R, fm);
  std::vector<Poly> out;
  for (const auto &g : facs) {
    std::vector<Scalar> c;
    for (const auto &x : g)
      c.push_back(Scalar::residue(p, x.get_ui()));
    out.push_back(Poly(f.field(), std::move(c)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Q(zeta_N), norm method

Poly norm_to_rational(const Poly &g) {
  const Field K = g.field();
  const std::size_t w = K.width();
  const Field Q = Field::rational();
  std::vector<Scalar> zeta_pow;
  for (std::size_t k = 0; k < w; ++k)
    zeta_pow.push_back(Scalar::root_of_unity(K, K.level(), static_cast<std::int64_t>(k)));
  PMatrix M = poly_zeros(w, w, Q);
  for (std::size_t k = 0; k < w; ++k) {
    std::vector<std::vector<Scalar>> entries(w);
    for (std::size_t i = 0; i < g.coeffs().size(); ++i) {
      Scalar c = g.coeffs()[i] * zeta_pow[k];
      for (std::size_t j = 0; j < w; ++j) {
        auto &col = entries[j];
        col.resize(g.coeffs().size(), Scalar::zero(Q));
        col[i] = Scalar::rational(c.coeffs()[j]);
      }
    }
    for (std::size_t j = 0; j < w; ++j)
      M(j, k) = Poly(Q, entries[j]);
  }
  return det_bareiss(M);
}

std::vector<Poly> factor_over_cyclotomic(const Poly &f) {
  const Field K = f.field();
  if (f.degree() <= 1)
    return {f.monic()};
  const Scalar zeta = Scalar::root_of_unity(K, K.level(), 1);
  for (long step = 0; step < 64; ++step) {
    // s = 0, 1, -1, 2, -2, ...
    const long s = step == 0 ? 0 : ((step % 2) ? (step + 1) / 2 : -(step / 2));
    const Scalar sz = zeta * Scalar::integer(K, s);
    const Poly shifted = f.shift(-sz);
    const Poly N = norm_to_rational(shifted);
    if (gcd(N, N.derivative()).degree() != 0)
      continue;
    std::vector<Poly> out;
    for (const auto &g : factor_rational(N)) {
      Poly h = gcd(shifted, g.lift_to(K));
      if (h.degree() > 0)
        out.push_back(h.shift(sz).monic());
    }
    return out;
  }
  fail(ErrorKind::Internal, "no squarefree norm found");
}

bool all_rational(const Poly &f) {
  for (const auto &c : f.coeffs())
    if (!c.is_rational())
      return false;
  return true;
}

Poly to_rational_poly(const Poly &f) {
  std::vector<Scalar> c;
  for (const auto &x : f.coeffs())
    c.push_back(Scalar::rational(*x.as_rational()));
  return Poly(Field::rational(), std::move(c));
}

void sort_factors(std::vector<Poly> &v) {
  std::sort(v.begin(), v.end(), [](const Poly &a, const Poly &b) { return a.compare(b) < 0; });
}

} // namespace

std::vector<Poly> factor_squarefree(const Poly &f, std::size_t degree_bound) {
  require(!f.is_zero(), ErrorKind::InvalidArgument, "factor of zero polynomial");
  if (degree_bound == 0)
    degree_bound = caps().max_degree;
  if (static_cast<std::size_t>(f.degree()) > degree_bound)
    fail(ErrorKind::DegreeBoundExceeded,
         "degree " + std::to_string(f.degree()) + " exceeds bound " + std::to_string(degree_bound));
  if (f.degree() == 0)
    return {};
  std::vector<Poly> out;
  const Field &F = f.field();
  switch (F.kind()) {
  case FieldKind::Rational: out = factor_rational(f); break;
  case FieldKind::PrimeField: out = factor_prime_field(f); break;
  case FieldKind::Cyclotomic:
    if (F.width() == 1) {
      for (const auto &g : factor_rational(to_rational_poly(f)))
        out.push_back(g.lift_to(F));
    } else if (all_rational(f)) {
      for (const auto &g : factor_rational(to_rational_poly(f)))
        for (const auto &h : factor_over_cyclotomic(g.lift_to(F)))
          out.push_back(h);
    } else {
      out = factor_over_cyclotomic(f.monic());
    }
    break;
  }
  sort_factors(out);
  return out;
}

Poly squarefree_part(const Poly &f) {
  require(!f.is_zero(), ErrorKind::InvalidArgument, "squarefree part of zero");
  Poly result = Poly::constant(f.field(), 1);
  for (const auto &g : distinct_factors(f, kInfiniteValuation))
    result *= g;
  return result;
}

std::vector<Poly> distinct_factors(const Poly &f, std::size_t degree_bound) {
  require(!f.is_zero(), ErrorKind::InvalidArgument, "factor of zero polynomial");
  if (f.degree() <= 0)
    return {};
  const Field &F = f.field();
  std::vector<Poly> out;
  Poly d = f.derivative();
  if (d.is_zero()) {
    // f = g(x^p) = g(x)^p over F_p
    const std::uint32_t p = F.characteristic();
    std::vector<Scalar> c;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p)
      c.push_back(f.coeffs()[i]);
    return distinct_factors(Poly(F, std::move(c)), degree_bound);
  }
  Poly g = gcd(f, d);
  Poly sq = (f / g).monic();
  out = factor_squarefree(sq, degree_bound);
  if (g.degree() > 0)
    for (const auto &h : distinct_factors(g, degree_bound))
      if (std::find(out.begin(), out.end(), h) == out.end())
        out.push_back(h);
  sort_factors(out);
  return out;
}

std::vector<Scalar> roots(const Poly &f, std::size_t degree_bound) {
  std::vector<Scalar> out;
  for (const auto &g : distinct_factors(f, degree_bound))
    if (g.degree() == 1)
      out.push_back(-g.coeff(0));
  std::sort(out.begin(), out.end(), [](const Scalar &a, const Scalar &b) { return a.compare(b) < 0; });
  return out;
}

} // namespace galcov
