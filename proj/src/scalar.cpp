#include "galcov/scalar.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace galcov {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::DivisionByZero: return "DivisionByZero";
  case ErrorKind::FieldMismatch: return "FieldMismatch";
  case ErrorKind::DegreeBoundExceeded: return "DegreeBoundExceeded";
  case ErrorKind::InvalidTable: return "InvalidTable";
  case ErrorKind::AbelianInput: return "AbelianInput";
  case ErrorKind::NotNormal: return "NotNormal";
  case ErrorKind::NotSubgroup: return "NotSubgroup";
  case ErrorKind::NonInvertibleOrder: return "NonInvertibleOrder";
  case ErrorKind::SplittingFailure: return "SplittingFailure";
  case ErrorKind::NotGoodSet: return "NotGoodSet";
  case ErrorKind::NotAssociative: return "NotAssociative";
  case ErrorKind::NotCommutative: return "NotCommutative";
  case ErrorKind::NoUnit: return "NoUnit";
  case ErrorKind::InvalidAction: return "InvalidAction";
  case ErrorKind::NonSplitAlgebra: return "NonSplitAlgebra";
  case ErrorKind::NotTransitive: return "NotTransitive";
  case ErrorKind::HypothesisUnmet: return "HypothesisUnmet";
  case ErrorKind::NotSquare: return "NotSquare";
  case ErrorKind::NonSplitFiber: return "NonSplitFiber";
  case ErrorKind::MissingRootOfUnity: return "MissingRootOfUnity";
  case ErrorKind::CapExceeded: return "CapExceeded";
  case ErrorKind::SchemaError: return "SchemaError";
  case ErrorKind::InvalidArgument: return "InvalidArgument";
  case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// number theory helpers

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t result = n, m = n;
  for (std::uint32_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0)
        m /= p;
      result -= result / p;
    }
  }
  if (m > 1)
    result -= result / m;
  return result;
}

namespace {

using ZPoly = std::vector<mpz_class>;

// exact division of integer polynomials, divisor monic
ZPoly divide_monic(ZPoly num, const ZPoly &den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size())
    return {};
  ZPoly quot(num.size() - dn);
  for (std::size_t i = num.size(); i-- > dn;) {
    mpz_class c = num[i];
    quot[i - dn] = c;
    if (c != 0)
      for (std::size_t j = 0; j <= dn; ++j)
        num[i - dn + j] -= c * den[j];
  }
  return quot;
}

struct CyclotomicCache {
  std::mutex mu;
  std::map<std::uint32_t, std::shared_ptr<const ZPoly>> polys;
  std::map<std::uint32_t, std::shared_ptr<const std::vector<Scalar>>> powers;
};

CyclotomicCache &cache() {
  static CyclotomicCache c;
  return c;
}

std::shared_ptr<const ZPoly> compute_cyclotomic(std::uint32_t n) {
  ZPoly p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d)
    if (n % d == 0)
      p = divide_monic(p, cyclotomic_polynomial(d));
  return std::make_shared<const ZPoly>(std::move(p));
}

std::uint32_t primitive_root(std::uint32_t p) {
  if (p == 2)
    return 1;
  std::vector<std::uint32_t> factors;
  std::uint32_t m = p - 1;
  for (std::uint32_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0)
        m /= d;
    }
  if (m > 1)
    factors.push_back(m);
  auto powmod = [p](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
      if (e & 1)
        r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  for (std::uint32_t g = 2;; ++g) {
    bool ok = true;
    for (auto q : factors)
      if (powmod(g, (p - 1) / q) == 1) {
        ok = false;
        break;
      }
    if (ok)
      return g;
  }
}

std::uint32_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1)
      r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t residue_of(const mpq_class &v, std::uint32_t p) {
  mpz_class num = v.get_num() % p;
  if (num < 0)
    num += p;
  mpz_class den = v.get_den() % p;
  if (den == 0)
    fail(ErrorKind::DivisionByZero, "denominator " + v.get_den().get_str() +
                                        " not invertible mod " + std::to_string(p));
  std::uint32_t n = static_cast<std::uint32_t>(num.get_ui());
  std::uint32_t d = static_cast<std::uint32_t>(den.get_ui());
  return static_cast<std::uint32_t>(std::uint64_t(n) * mod_pow(d, p - 2, p) % p);
}

} // namespace

const std::vector<mpz_class> &cyclotomic_polynomial(std::uint32_t n) {
  require(n >= 1, ErrorKind::InvalidArgument, "cyclotomic level must be positive");
  auto &c = cache();
  {
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = c.polys.find(n);
    if (it != c.polys.end())
      return *it->second;
  }
  // computed outside the lock: recursion needs smaller levels
  auto p = compute_cyclotomic(n);
  std::lock_guard<std::mutex> lock(c.mu);
  auto [it, inserted] = c.polys.emplace(n, std::move(p));
  return *it->second;
}

// ---------------------------------------------------------------------------
// Field

Field Field::cyclotomic(std::uint32_t level) {
  require(level >= 1, ErrorKind::InvalidArgument, "cyclotomic level must be >= 1");
  return Field(FieldKind::Cyclotomic, level);
}

Field Field::prime(std::uint32_t p) {
  require(is_prime(p), ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  return Field(FieldKind::PrimeField, p);
}

Field Field::parse(std::string_view spec) {
  auto number = [&](std::string_view s) -> std::uint32_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos)
      fail(ErrorKind::SchemaError, "bad field spec '" + std::string(spec) + "'");
    return static_cast<std::uint32_t>(std::stoul(std::string(s)));
  };
  if (spec == "Q")
    return rational();
  if (spec.rfind("Qzeta:", 0) == 0)
    return cyclotomic(number(spec.substr(6)));
  if (spec.rfind("Fp:", 0) == 0) {
    auto p = number(spec.substr(3));
    if (!is_prime(p))
      fail(ErrorKind::SchemaError, "field modulus " + std::to_string(p) + " is not prime");
    return prime(p);
  }
  fail(ErrorKind::SchemaError, "bad field spec '" + std::string(spec) + "'");
}

std::size_t Field::width() const {
  return kind_ == FieldKind::Cyclotomic ? euler_phi(param_) : 1;
}

bool Field::contains_root_of_unity(std::uint32_t n) const {
  switch (kind_) {
  case FieldKind::Rational: return n == 1 || n == 2;
  case FieldKind::Cyclotomic: return param_ % n == 0 || (n == 2) || (param_ % 2 == 1 && (2 * param_) % n == 0);
  case FieldKind::PrimeField: return (param_ - 1) % n == 0;
  }
  return false;
}

std::string Field::to_string() const {
  switch (kind_) {
  case FieldKind::Rational: return "Q";
  case FieldKind::Cyclotomic: return "Qzeta:" + std::to_string(param_);
  case FieldKind::PrimeField: return "Fp:" + std::to_string(param_);
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::zero(const Field &f) {
  Scalar s;
  s.field_ = f;
  if (f.kind() == FieldKind::PrimeField)
    s.q_.clear();
  else
    s.q_.assign(f.width(), mpq_class(0));
  return s;
}

Scalar Scalar::one(const Field &f) { return integer(f, 1); }

Scalar Scalar::integer(const Field &f, long v) {
  Scalar s = zero(f);
  if (f.kind() == FieldKind::PrimeField) {
    long m = v % static_cast<long>(f.modulus());
    if (m < 0)
      m += f.modulus();
    s.r_ = static_cast<std::uint32_t>(m);
  } else {
    s.q_[0] = v;
  }
  return s;
}

Scalar Scalar::rational(const mpq_class &v) {
  Scalar s;
  s.q_[0] = v;
  s.q_[0].canonicalize();
  return s;
}

Scalar Scalar::from_rational(const Field &f, const mpq_class &v) {
  Scalar s = zero(f);
  if (f.kind() == FieldKind::PrimeField) {
    s.r_ = residue_of(v, f.modulus());
  } else {
    s.q_[0] = v;
    s.q_[0].canonicalize();
  }
  return s;
}

Scalar Scalar::cyclotomic(std::uint32_t level, std::vector<mpq_class> coeffs) {
  Scalar s;
  s.field_ = Field::cyclotomic(level);
  s.q_ = std::move(coeffs);
  if (s.q_.empty())
    s.q_.push_back(0);
  for (auto &c : s.q_)
    c.canonicalize();
  s.reduce_cyclotomic();
  return s;
}

Scalar Scalar::residue(std::uint32_t p, std::uint64_t r) {
  Scalar s = zero(Field::prime(p));
  s.r_ = static_cast<std::uint32_t>(r % p);
  return s;
}

Scalar Scalar::root_of_unity(const Field &f, std::uint32_t n, std::int64_t k) {
  require(n >= 1, ErrorKind::InvalidArgument, "root of unity order must be positive");
  std::int64_t kk = k % static_cast<std::int64_t>(n);
  if (kk < 0)
    kk += n;
  switch (f.kind()) {
  case FieldKind::Rational:
    if (n == 1 || kk == 0)
      return one(f);
    if (n == 2)
      return integer(f, -1);
    break;
  case FieldKind::Cyclotomic: {
    const std::uint32_t level = f.level();
    std::uint64_t exp;
    if (level % n == 0) {
      exp = static_cast<std::uint64_t>(kk) * (level / n);
    } else if (n % 2 == 0 && level % 2 == 1 && (2 * level) % n == 0) {
      // -zeta_N has order 2N when N is odd
      Scalar base = -cyclotomic(level, {0, 1});
      return base.pow(static_cast<std::int64_t>(kk) * (2 * level / n));
    } else {
      break;
    }
    std::vector<mpq_class> c(exp + 1);
    c[exp] = 1;
    return cyclotomic(level, std::move(c));
  }
  case FieldKind::PrimeField: {
    const std::uint32_t p = f.modulus();
    if ((p - 1) % n != 0)
      break;
    std::uint32_t g = primitive_root(p);
    std::uint32_t zeta = mod_pow(g, (p - 1) / n, p);
    return residue(p, mod_pow(zeta, static_cast<std::uint64_t>(kk), p));
  }
  }
  fail(ErrorKind::MissingRootOfUnity,
       f.to_string() + " has no primitive " + std::to_string(n) + "-th root of unity");
}

void Scalar::reduce_cyclotomic() {
  const auto &phi = cyclotomic_polynomial(field_.level());
  const std::size_t w = phi.size() - 1;
  for (std::size_t i = q_.size(); i-- > w;) {
    if (q_[i] == 0)
      continue;
    mpq_class c = q_[i];
    for (std::size_t j = 0; j < w; ++j)
      if (phi[j] != 0)
        q_[i - w + j] -= c * phi[j];
    q_[i] = 0;
  }
  q_.resize(w);
}

bool Scalar::is_zero() const {
  if (field_.kind() == FieldKind::PrimeField)
    return r_ == 0;
  for (const auto &c : q_)
    if (c != 0)
      return false;
  return true;
}

bool Scalar::is_one() const {
  if (field_.kind() == FieldKind::PrimeField)
    return r_ == 1;
  if (q_[0] != 1)
    return false;
  for (std::size_t i = 1; i < q_.size(); ++i)
    if (q_[i] != 0)
      return false;
  return true;
}

bool Scalar::is_rational() const {
  if (field_.kind() == FieldKind::PrimeField)
    return false;
  for (std::size_t i = 1; i < q_.size(); ++i)
    if (q_[i] != 0)
      return false;
  return true;
}

std::optional<mpq_class> Scalar::as_rational() const {
  if (!is_rational())
    return std::nullopt;
  return q_[0];
}

std::optional<std::uint32_t> Scalar::root_of_unity_exponent() const {
  switch (field_.kind()) {
  case FieldKind::Rational:
    if (is_one())
      return 0u;
    if (q_[0] == -1)
      return 1u;
    return std::nullopt;
  case FieldKind::PrimeField: {
    // relative to the canonical generator of F_p^*
    if (r_ == 0)
      return std::nullopt;
    const std::uint32_t p = field_.modulus();
    std::uint32_t g = primitive_root(p);
    std::uint64_t x = 1;
    for (std::uint32_t e = 0; e + 1 < p || e == 0; ++e) {
      if (x == r_)
        return e;
      x = x * g % p;
    }
    return std::nullopt;
  }
  case FieldKind::Cyclotomic: {
    const std::uint32_t level = field_.level();
    std::shared_ptr<const std::vector<Scalar>> powers;
    {
      auto &c = cache();
      std::lock_guard<std::mutex> lock(c.mu);
      auto it = c.powers.find(level);
      if (it != c.powers.end())
        powers = it->second;
    }
    if (!powers) {
      std::vector<Scalar> pw;
      pw.reserve(level);
      for (std::uint32_t e = 0; e < level; ++e)
        pw.push_back(root_of_unity(field_, level, e));
      powers = std::make_shared<const std::vector<Scalar>>(std::move(pw));
      auto &c = cache();
      std::lock_guard<std::mutex> lock(c.mu);
      c.powers.emplace(level, powers);
    }
    for (std::uint32_t e = 0; e < level; ++e)
      if ((*powers)[e] == *this)
        return e;
    return std::nullopt;
  }
  }
  return std::nullopt;
}

Field common_field(const Field &a, const Field &b) { return Scalar::unify(a, b); }

Field Scalar::unify(const Field &a, const Field &b) {
  if (a == b)
    return a;
  if (a.kind() == FieldKind::Rational && b.kind() == FieldKind::Cyclotomic)
    return b;
  if (b.kind() == FieldKind::Rational && a.kind() == FieldKind::Cyclotomic)
    return a;
  fail(ErrorKind::FieldMismatch, a.to_string() + " vs " + b.to_string());
}

void Scalar::promote(const Field &f) {
  if (field_ == f)
    return;
  // only Q -> Q(zeta_N) reaches here
  field_ = f;
  q_.resize(f.width(), mpq_class(0));
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.kind() == FieldKind::PrimeField)
    s.r_ = r_ == 0 ? 0 : field_.modulus() - r_;
  else
    for (auto &c : s.q_)
      c = -c;
  return s;
}

Scalar &Scalar::operator+=(const Scalar &o) {
  Field f = unify(field_, o.field_);
  promote(f);
  if (f.kind() == FieldKind::PrimeField) {
    std::uint64_t s = std::uint64_t(r_) + o.r_;
    r_ = static_cast<std::uint32_t>(s % f.modulus());
  } else {
    for (std::size_t i = 0; i < o.q_.size(); ++i)
      q_[i] += o.q_[i];
  }
  return *this;
}

Scalar &Scalar::operator-=(const Scalar &o) { return *this += -o; }

Scalar &Scalar::operator*=(const Scalar &o) {
  Field f = unify(field_, o.field_);
  if (f.kind() == FieldKind::PrimeField) {
    r_ = static_cast<std::uint32_t>(std::uint64_t(r_) * o.r_ % f.modulus());
    return *this;
  }
  // fast paths: one side lies in Q
  if (o.is_rational()) {
    promote(f);
    const mpq_class c = o.q_[0];
    for (auto &x : q_)
      x *= c;
    return *this;
  }
  if (is_rational()) {
    const mpq_class c = q_[0];
    *this = o;
    for (auto &x : q_)
      x *= c;
    return *this;
  }
  const std::size_t w = q_.size();
  std::vector<mpq_class> prod(2 * w - 1, mpq_class(0));
  mpq_class tmp;
  for (std::size_t i = 0; i < w; ++i) {
    if (q_[i] == 0)
      continue;
    for (std::size_t j = 0; j < w; ++j) {
      if (o.q_[j] == 0)
        continue;
      tmp = q_[i] * o.q_[j];
      prod[i + j] += tmp;
    }
  }
  q_ = std::move(prod);
  reduce_cyclotomic();
  return *this;
}

Scalar &Scalar::operator/=(const Scalar &o) { return *this *= o.inv(); }

Scalar &Scalar::add_mul(const Scalar &a, const Scalar &b) {
  if (field_.kind() == FieldKind::Rational && a.field_.kind() == FieldKind::Rational &&
      b.field_.kind() == FieldKind::Rational) {
    if (a.q_[0] != 0 && b.q_[0] != 0)
      q_[0] += a.q_[0] * b.q_[0];
    return *this;
  }
  if (a.is_zero() || b.is_zero()) {
    unify(unify(field_, a.field_), b.field_);
    return *this;
  }
  return *this += a * b;
}

Scalar &Scalar::sub_mul(const Scalar &a, const Scalar &b) {
  if (field_.kind() == FieldKind::Rational && a.field_.kind() == FieldKind::Rational &&
      b.field_.kind() == FieldKind::Rational) {
    if (a.q_[0] != 0 && b.q_[0] != 0)
      q_[0] -= a.q_[0] * b.q_[0];
    return *this;
  }
  if (a.is_zero() || b.is_zero()) {
    unify(unify(field_, a.field_), b.field_);
    return *this;
  }
  return *this -= a * b;
}

Scalar Scalar::inv() const {
  if (is_zero())
    fail(ErrorKind::DivisionByZero, "inverse of zero");
  if (field_.kind() == FieldKind::PrimeField) {
    const std::uint32_t p = field_.modulus();
    return residue(p, mod_pow(r_, p - 2, p));
  }
  if (is_rational()) {
    Scalar s = *this;
    s.q_[0] = 1 / q_[0];
    return s;
  }
  // solve (multiplication-by-this) y = 1 over Q
  const std::size_t w = q_.size();
  std::vector<std::vector<mpq_class>> m(w, std::vector<mpq_class>(w + 1));
  Scalar basis = Scalar::one(field_);
  const Scalar x = Scalar::cyclotomic(field_.level(), {0, 1});
  for (std::size_t j = 0; j < w; ++j) {
    Scalar col = *this * basis;
    for (std::size_t i = 0; i < w; ++i)
      m[i][j] = col.q_[i];
    basis *= x;
  }
  m[0][w] = 1;
  for (std::size_t c = 0; c < w; ++c) {
    std::size_t piv = c;
    while (piv < w && m[piv][c] == 0)
      ++piv;
    if (piv == w)
      fail(ErrorKind::Internal, "singular multiplication matrix in Q(zeta)");
    std::swap(m[piv], m[c]);
    mpq_class inv_p = 1 / m[c][c];
    for (std::size_t k = c; k <= w; ++k)
      m[c][k] *= inv_p;
    for (std::size_t r = 0; r < w; ++r) {
      if (r == c || m[r][c] == 0)
        continue;
      mpq_class f = m[r][c];
      for (std::size_t k = c; k <= w; ++k)
        m[r][k] -= f * m[c][k];
    }
  }
  Scalar s = Scalar::zero(field_);
  for (std::size_t i = 0; i < w; ++i)
    s.q_[i] = m[i][w];
  return s;
}

Scalar Scalar::pow(std::int64_t e) const {
  if (e < 0)
    return inv().pow(-e);
  Scalar result = one(field_), base = *this;
  while (e) {
    if (e & 1)
      result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Scalar Scalar::lift_to(const Field &f) const {
  if (field_ == f)
    return *this;
  if (field_.kind() == FieldKind::Rational) {
    if (f.kind() == FieldKind::PrimeField)
      return from_rational(f, q_[0]);
    Scalar s = *this;
    s.promote(f);
    return s;
  }
  if (field_.kind() == FieldKind::Cyclotomic && f.kind() == FieldKind::Cyclotomic &&
      f.level() % field_.level() == 0) {
    const std::uint32_t step = f.level() / field_.level();
    std::vector<mpq_class> c(q_.size() * step + 1);
    for (std::size_t i = 0; i < q_.size(); ++i)
      c[i * step] = q_[i];
    return cyclotomic(f.level(), std::move(c));
  }
  if (field_.kind() == FieldKind::Cyclotomic && f.kind() == FieldKind::Rational && is_rational())
    return rational(q_[0]);
  fail(ErrorKind::FieldMismatch, "cannot view " + field_.to_string() + " element in " + f.to_string());
}

bool operator==(const Scalar &a, const Scalar &b) {
  if (a.field_ == b.field_) {
    if (a.field_.kind() == FieldKind::PrimeField)
      return a.r_ == b.r_;
    return a.q_ == b.q_;
  }
  Field f = Scalar::unify(a.field_, b.field_);
  return a.lift_to(f).q_ == b.lift_to(f).q_;
}

int Scalar::compare(const Scalar &o) const {
  if (field_.kind() == FieldKind::PrimeField || o.field_.kind() == FieldKind::PrimeField) {
    unify(field_, o.field_);
    return r_ < o.r_ ? -1 : (r_ > o.r_ ? 1 : 0);
  }
  Field f = unify(field_, o.field_);
  const Scalar a = lift_to(f), b = o.lift_to(f);
  for (std::size_t i = 0; i < a.q_.size(); ++i) {
    int c = cmp(a.q_[i], b.q_[i]);
    if (c != 0)
      return c < 0 ? -1 : 1;
  }
  return 0;
}

std::string Scalar::to_string() const {
  if (field_.kind() == FieldKind::PrimeField)
    return std::to_string(r_) + " mod " + std::to_string(field_.modulus());
  if (is_rational())
    return q_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < q_.size(); ++i) {
    if (q_[i] == 0)
      continue;
    if (!first)
      os << " + ";
    first = false;
    os << q_[i].get_str();
    if (i > 0)
      os << "*z" << field_.level() << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os.str();
}

std::ostream &operator<<(std::ostream &os, const Scalar &s) { return os << s.to_string(); }

} // namespace galcov
