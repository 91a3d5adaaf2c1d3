#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "galcov/error.hpp"

namespace galcov {

enum class FieldKind : std::uint8_t { Rational, Cyclotomic, PrimeField };

/// Descriptor of an exact coefficient field: Q, Q(zeta_N) or F_p.
class Field {
public:
  Field() = default;

  static Field rational() { return Field(FieldKind::Rational, 1); }
  static Field cyclotomic(std::uint32_t level);
  static Field prime(std::uint32_t p);
  /// Accepts "Q", "Qzeta:N" and "Fp:p".
  static Field parse(std::string_view spec);

  FieldKind kind() const noexcept { return kind_; }
  /// Cyclotomic level N (1 for Q).
  std::uint32_t level() const noexcept { return kind_ == FieldKind::PrimeField ? 1 : param_; }
  std::uint32_t modulus() const noexcept { return kind_ == FieldKind::PrimeField ? param_ : 0; }
  std::uint32_t characteristic() const noexcept { return modulus(); }
  /// Number of rational coordinates carried by an element (phi(N) for Q(zeta_N)).
  std::size_t width() const;
  bool contains_root_of_unity(std::uint32_t n) const;

  std::string to_string() const;

  friend bool operator==(const Field &, const Field &) = default;

private:
  Field(FieldKind kind, std::uint32_t param) : kind_(kind), param_(param) {}

  FieldKind kind_ = FieldKind::Rational;
  std::uint32_t param_ = 1;
};

std::uint32_t euler_phi(std::uint32_t n);
/// Integer coefficients of the N-th cyclotomic polynomial, lowest degree first.
const std::vector<mpz_class> &cyclotomic_polynomial(std::uint32_t n);
bool is_prime(std::uint64_t n);
/// Smallest field containing both, when the only difference is Q inside Q(zeta_N).
Field common_field(const Field &a, const Field &b);

/// Exact field element. Rationals are kept in lowest terms by GMP, cyclotomic
/// elements as coefficient vectors reduced modulo Phi_N (width phi(N)), prime
/// field elements as residues in [0, p).
///
/// Binary operations require the same field; the only implicit conversion is
/// the embedding Q -> Q(zeta_N).
class Scalar {
public:
  Scalar() : q_(1) {}

  static Scalar zero(const Field &f);
  static Scalar one(const Field &f);
  static Scalar integer(const Field &f, long v);
  static Scalar rational(const mpq_class &v);
  /// Explicit coercion of a rational into any field (denominator must be
  /// invertible in F_p).
  static Scalar from_rational(const Field &f, const mpq_class &v);
  static Scalar cyclotomic(std::uint32_t level, std::vector<mpq_class> coeffs);
  static Scalar residue(std::uint32_t p, std::uint64_t r);
  /// zeta_n^k for the canonical primitive n-th root of unity of the field.
  static Scalar root_of_unity(const Field &f, std::uint32_t n, std::int64_t k);

  const Field &field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;
  /// Lies in the prime subfield Q (always true for Q itself).
  bool is_rational() const;
  std::optional<mpq_class> as_rational() const;
  /// Exponent e with *this == zeta_N^e, when the element is an N-th root of unity.
  std::optional<std::uint32_t> root_of_unity_exponent() const;

  const std::vector<mpq_class> &coeffs() const noexcept { return q_; }
  std::uint32_t residue_value() const noexcept { return r_; }

  Scalar operator-() const;
  Scalar &operator+=(const Scalar &o);
  Scalar &operator-=(const Scalar &o);
  Scalar &operator*=(const Scalar &o);
  Scalar &operator/=(const Scalar &o);
  friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }

  /// this += a * b without a temporary in the rational case.
  Scalar &add_mul(const Scalar &a, const Scalar &b);
  /// this -= a * b.
  Scalar &sub_mul(const Scalar &a, const Scalar &b);

  Scalar inv() const;
  Scalar pow(std::int64_t e) const;
  /// Same value viewed in `f` (Q -> Q(zeta_N), Q(zeta_N) -> Q(zeta_M) for N | M).
  Scalar lift_to(const Field &f) const;

  friend bool operator==(const Scalar &a, const Scalar &b);
  friend bool operator!=(const Scalar &a, const Scalar &b) { return !(a == b); }
  /// Total order used for canonical sorting (not an ordered-field order).
  int compare(const Scalar &o) const;

  std::string to_string() const;

private:
  friend Field common_field(const Field &a, const Field &b);
  void reduce_cyclotomic();
  static Field unify(const Field &a, const Field &b);
  void promote(const Field &f);

  Field field_;
  std::vector<mpq_class> q_;
  std::uint32_t r_ = 0;
};

std::ostream &operator<<(std::ostream &os, const Scalar &s);

} // namespace galcov
