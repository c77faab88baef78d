#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>

#include "thp/errors.hpp"

namespace thp {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { Rational, Prime };

/// Description of an exact coefficient field: the rational numbers, or the
/// integers modulo a prime p with 2 <= p < 2^31.  Value type; two FieldSpecs
/// compare equal exactly when they describe the same field.
class FieldSpec {
 public:
  /// The field of rational numbers.
  static FieldSpec rationals() { return FieldSpec(FieldKind::Rational, 0); }

  /// The prime field with p elements.  Throws ParseError unless p is a prime
  /// below 2^31.
  static FieldSpec prime(std::uint64_t p);

  /// Parses "rational" or "gf:<p>".
  static FieldSpec parse(const std::string& text);

  FieldKind kind() const { return kind_; }
  bool is_rational() const { return kind_ == FieldKind::Rational; }
  bool is_prime() const { return kind_ == FieldKind::Prime; }

  /// The characteristic p; only meaningful for prime fields (0 otherwise).
  std::uint64_t characteristic() const { return p_; }

  /// Canonical spelling: "rational" or "gf:<p>".
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(FieldKind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  FieldKind kind_;
  std::uint64_t p_;
};

/// An element of a FieldSpec field.  Rational values are kept in lowest terms
/// with positive denominator; prime-field values as the representative in
/// [0, p).  All arithmetic is exact.  Binary operations on elements of
/// different fields throw DomainError.
class Scalar {
 public:
  /// Default-constructs the rational zero (needed for container resizing);
  /// prefer the named constructors below.
  Scalar() : field_(FieldSpec::rationals()) {}

  static Scalar zero(const FieldSpec& f) { return Scalar(f); }
  static Scalar one(const FieldSpec& f) { return of_integer(1, f); }

  /// The image of the integer n in the field (reduced mod p for prime fields).
  static Scalar of_integer(const Integer& n, const FieldSpec& f);

  /// A rational scalar num/den over the rationals.  Throws DomainError if
  /// den == 0.
  static Scalar of_rational(const Integer& num, const Integer& den = 1);

  /// Parses the canonical text form and reduces it: over the rationals an
  /// optionally negative integer with optional "/denominator"; over a prime
  /// field an optionally negative integer, reduced mod p.
  static Scalar parse(const std::string& text, const FieldSpec& f);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Underlying rational value; only valid over the rationals.
  const Rational& rational_value() const;
  /// Underlying residue in [0, p); only valid over a prime field.
  std::uint64_t residue_value() const;

  Scalar operator-() const;
  Scalar inverse() const;  ///< Throws DomainError on zero.

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);  ///< Throws DomainError on zero rhs.

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Canonical text form: "n" or "n/d" (d > 1) over the rationals, the
  /// decimal representative over a prime field.  Round-trips through parse().
  std::string to_string() const;

 private:
  explicit Scalar(const FieldSpec& f) : field_(f) {}
  void require_same_field(const Scalar& other) const;

  FieldSpec field_;
  Rational q_;           // payload over the rationals
  std::uint64_t r_ = 0;  // payload over a prime field
};

/// Strict total order on scalars of one field, used wherever a deterministic
/// arrangement is needed: numeric order over the rationals, representative
/// order over a prime field.  Throws DomainError on mixed fields.
bool canonical_less(const Scalar& a, const Scalar& b);

}  // namespace thp
