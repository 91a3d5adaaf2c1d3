#pragma once

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "galcov/scalar.hpp"

namespace galcov {

/// Valuation of the zero polynomial.
inline constexpr std::size_t kInfiniteValuation = std::numeric_limits<std::size_t>::max();

/// Dense univariate polynomial over a Field, lowest degree first, no trailing
/// zeros. The zero polynomial has degree -1.
class Poly {
public:
  Poly() = default;
  explicit Poly(const Field &f) : field_(f) {}
  Poly(const Field &f, std::vector<Scalar> coeffs);

  static Poly constant(const Scalar &c);
  static Poly constant(const Field &f, long c) { return constant(Scalar::integer(f, c)); }
  static Poly monomial(const Scalar &c, std::size_t deg);
  /// The variable.
  static Poly x(const Field &f);

  const Field &field() const noexcept { return field_; }
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  const std::vector<Scalar> &coeffs() const noexcept { return c_; }
  Scalar coeff(std::size_t i) const;
  Scalar lead() const;
  /// t-adic valuation; kInfiniteValuation for zero.
  std::size_t valuation() const;

  Poly monic() const;
  Poly derivative() const;
  Scalar evaluate(const Scalar &x) const;
  /// f(x + a).
  Poly shift(const Scalar &a) const;
  /// f(x) * x^k.
  Poly mul_x_pow(std::size_t k) const;
  /// Same polynomial with coefficients viewed in a larger field.
  Poly lift_to(const Field &f) const;

  Poly operator-() const;
  Poly &operator+=(const Poly &o);
  Poly &operator-=(const Poly &o);
  Poly &operator*=(const Poly &o);
  Poly &operator*=(const Scalar &c);
  friend Poly operator+(Poly a, const Poly &b) { return a += b; }
  friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
  friend Poly operator*(const Poly &a, const Poly &b);
  friend Poly operator*(Poly a, const Scalar &c) { return a *= c; }
  friend Poly operator*(const Scalar &c, Poly a) { return a *= c; }
  /// Euclidean quotient and remainder.
  friend std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b);
  friend Poly operator/(const Poly &a, const Poly &b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly &a, const Poly &b) { return divmod(a, b).second; }

  Poly pow(std::size_t e) const;
  /// this^e mod m.
  Poly pow_mod(const mpz_class &e, const Poly &m) const;

  friend bool operator==(const Poly &a, const Poly &b);
  friend bool operator!=(const Poly &a, const Poly &b) { return !(a == b); }
  int compare(const Poly &o) const;

  std::string to_string(char var = 't') const;

private:
  void trim();

  Field field_;
  std::vector<Scalar> c_;
};

/// Monic gcd (zero if both are zero).
Poly gcd(const Poly &a, const Poly &b);

struct XgcdResult {
  Poly g, s, t; // s*a + t*b = g, g monic
};
XgcdResult xgcd(const Poly &a, const Poly &b);

/// b divides a.
bool divides(const Poly &b, const Poly &a);

std::ostream &operator<<(std::ostream &os, const Poly &p);

} // namespace galcov
