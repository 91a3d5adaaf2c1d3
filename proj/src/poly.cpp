#include "galcov/poly.hpp"

#include <ostream>
#include <sstream>

namespace galcov {

Poly::Poly(const Field &f, std::vector<Scalar> coeffs) : field_(f), c_(std::move(coeffs)) {
  for (const auto &c : c_)
    field_ = common_field(field_, c.field());
  trim();
}

Poly Poly::constant(const Scalar &c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const Scalar &c, std::size_t deg) {
  std::vector<Scalar> v(deg + 1, Scalar::zero(c.field()));
  v[deg] = c;
  return Poly(c.field(), std::move(v));
}

Poly Poly::x(const Field &f) { return monomial(Scalar::one(f), 1); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero())
    c_.pop_back();
  for (auto &c : c_)
    if (c.field() != field_)
      c = c.lift_to(field_);
}

Scalar Poly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : Scalar::zero(field_);
}

Scalar Poly::lead() const { return c_.empty() ? Scalar::zero(field_) : c_.back(); }

std::size_t Poly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero())
      return i;
  return kInfiniteValuation;
}

Poly Poly::monic() const {
  if (is_zero() || c_.back().is_one())
    return *this;
  return *this * c_.back().inv();
}

Poly Poly::derivative() const {
  if (c_.size() <= 1)
    return Poly(field_);
  std::vector<Scalar> d;
  d.reserve(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    d.push_back(c_[i] * Scalar::integer(field_, static_cast<long>(i)));
  return Poly(field_, std::move(d));
}

Scalar Poly::evaluate(const Scalar &x) const {
  Scalar acc = Scalar::zero(common_field(field_, x.field()));
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc *= x;
    acc += c_[i];
  }
  return acc;
}

Poly Poly::shift(const Scalar &a) const {
  // Horner in the ring: acc = acc * (x + a) + c_i
  Field f = common_field(field_, a.field());
  Poly lin(f, {a, Scalar::one(f)});
  Poly acc(f);
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * lin;
    acc += Poly::constant(c_[i]);
  }
  return acc;
}

Poly Poly::mul_x_pow(std::size_t k) const {
  if (is_zero() || k == 0)
    return *this;
  std::vector<Scalar> v(k, Scalar::zero(field_));
  v.insert(v.end(), c_.begin(), c_.end());
  Poly r(field_);
  r.c_ = std::move(v);
  return r;
}

Poly Poly::lift_to(const Field &f) const {
  std::vector<Scalar> v;
  v.reserve(c_.size());
  for (const auto &c : c_)
    v.push_back(c.lift_to(f));
  Poly r(f);
  r.c_ = std::move(v);
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto &c : r.c_)
    c = -c;
  return r;
}

Poly &Poly::operator+=(const Poly &o) {
  Field f = common_field(field_, o.field_);
  if (f != field_) {
    field_ = f;
    for (auto &c : c_)
      c = c.lift_to(f);
  }
  if (o.c_.size() > c_.size())
    c_.resize(o.c_.size(), Scalar::zero(f));
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly &Poly::operator-=(const Poly &o) { return *this += -o; }

Poly operator*(const Poly &a, const Poly &b) {
  Field f = common_field(a.field_, b.field_);
  Poly r(f);
  if (a.is_zero() || b.is_zero())
    return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Scalar::zero(f));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero())
      continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      r.c_[i + j].add_mul(a.c_[i], b.c_[j]);
  }
  r.trim();
  return r;
}

Poly &Poly::operator*=(const Poly &o) { return *this = *this * o; }

Poly &Poly::operator*=(const Scalar &c) {
  field_ = common_field(field_, c.field());
  for (auto &x : c_)
    x *= c;
  trim();
  return *this;
}

std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b) {
  if (b.is_zero())
    fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  Field f = common_field(a.field_, b.field_);
  Poly rem = a.field_ == f ? a : a.lift_to(f);
  Poly quot(f);
  if (rem.degree() < b.degree())
    return {quot, rem};
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const Scalar lead_inv = b.c_.back().inv();
  quot.c_.assign(rem.c_.size() - db, Scalar::zero(f));
  for (std::size_t i = rem.c_.size(); i-- > db;) {
    if (rem.c_[i].is_zero())
      continue;
    Scalar q = rem.c_[i] * lead_inv;
    for (std::size_t j = 0; j <= db; ++j)
      rem.c_[i - db + j].sub_mul(q, b.c_[j]);
    quot.c_[i - db] = std::move(q);
  }
  rem.trim();
  quot.trim();
  return {quot, rem};
}

Poly Poly::pow(std::size_t e) const {
  Poly result = Poly::constant(Scalar::one(field_)), base = *this;
  while (e) {
    if (e & 1)
      result *= base;
    e >>= 1;
    if (e)
      base *= base;
  }
  return result;
}

Poly Poly::pow_mod(const mpz_class &e, const Poly &m) const {
  Poly result = Poly::constant(Scalar::one(field_)) % m;
  Poly base = *this % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(e.get_mpz_t(), i))
      result = (result * base) % m;
  }
  return result;
}

bool operator==(const Poly &a, const Poly &b) {
  if (a.c_.size() != b.c_.size())
    return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i])
      return false;
  return true;
}

int Poly::compare(const Poly &o) const {
  if (c_.size() != o.c_.size())
    return c_.size() < o.c_.size() ? -1 : 1;
  for (std::size_t i = c_.size(); i-- > 0;) {
    int c = c_[i].compare(o.c_[i]);
    if (c != 0)
      return c;
  }
  return 0;
}

std::string Poly::to_string(char var) const {
  if (c_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero())
      continue;
    if (!first)
      os << " + ";
    first = false;
    std::string cs = c_[i].to_string();
    bool bare = c_[i].is_one() && i > 0;
    if (!bare)
      os << (cs.find(' ') != std::string::npos && i > 0 ? "(" + cs + ")" : cs);
    if (i > 0)
      os << (bare ? "" : "*") << var << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os.str();
}

Poly gcd(const Poly &a, const Poly &b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

XgcdResult xgcd(const Poly &a, const Poly &b) {
  Field f = common_field(a.field(), b.field());
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f, 1), s1(f);
  Poly t0(f), t1 = Poly::constant(f, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero())
    return {r0, s0, t0};
  Scalar li = r0.lead().inv();
  return {r0 * li, s0 * li, t0 * li};
}

bool divides(const Poly &b, const Poly &a) {
  if (b.is_zero())
    return a.is_zero();
  return (a % b).is_zero();
}

std::ostream &operator<<(std::ostream &os, const Poly &p) { return os << p.to_string(); }

} // namespace galcov
