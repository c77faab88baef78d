#include "thp/field.hpp"

#include <cctype>
#include <limits>

namespace thp {

namespace {

constexpr std::uint64_t kMaxCharacteristic = std::uint64_t(1) << 31;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  // a, b < p < 2^31, so the product fits in 64 bits.
  return (a * b) % p;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

// Deterministic Miller-Rabin; the base set covers all 64-bit inputs, far more
// than the < 2^31 range accepted here.
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= kMaxCharacteristic)
    throw ParseError("field characteristic must be below 2^31, got " +
                     std::to_string(p));
  if (!is_prime_u64(p))
    throw ParseError("field characteristic must be prime, got " +
                     std::to_string(p));
  return FieldSpec(FieldKind::Prime, p);
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "rational") return rationals();
  const std::string prefix = "gf:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string digits = text.substr(prefix.size());
    if (!all_digits(digits) || digits.size() > 10)
      throw ParseError("malformed field description '" + text + "'");
    return prime(std::stoull(digits));
  }
  throw ParseError("unknown field description '" + text +
                   "' (expected \"rational\" or \"gf:<p>\")");
}

std::string FieldSpec::to_string() const {
  return is_rational() ? "rational" : "gf:" + std::to_string(p_);
}

Scalar Scalar::of_integer(const Integer& n, const FieldSpec& f) {
  Scalar s(f);
  if (f.is_rational()) {
    s.q_ = Rational(n);
  } else {
    Integer r = n % Integer(f.characteristic());
    if (r < 0) r += Integer(f.characteristic());
    s.r_ = r.convert_to<std::uint64_t>();
  }
  return s;
}

Scalar Scalar::of_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational scalar with zero denominator");
  Scalar s(FieldSpec::rationals());
  s.q_ = Rational(num);
  s.q_ /= Rational(den);  // operator/ normalizes: lowest terms, den > 0
  return s;
}

Scalar Scalar::parse(const std::string& text, const FieldSpec& f) {
  const auto fail = [&]() -> ParseError {
    return ParseError("malformed scalar '" + text + "' over " + f.to_string());
  };
  std::string body = text;
  bool negative = false;
  if (!body.empty() && body[0] == '-') {
    negative = true;
    body.erase(0, 1);
  }
  if (f.is_prime()) {
    if (!all_digits(body)) throw fail();
    Integer n(body);
    if (negative) n = -n;
    return of_integer(n, f);
  }
  const auto slash = body.find('/');
  std::string num_digits = body.substr(0, slash);
  if (!all_digits(num_digits)) throw fail();
  Integer num(num_digits);
  if (negative) num = -num;
  Integer den = 1;
  if (slash != std::string::npos) {
    std::string den_digits = body.substr(slash + 1);
    if (!all_digits(den_digits)) throw fail();
    den = Integer(den_digits);
    if (den == 0) throw fail();
  }
  return of_rational(num, den);
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? q_.is_zero() : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? q_ == 1 : r_ == 1 % field_.characteristic();
}

const Rational& Scalar::rational_value() const {
  if (!field_.is_rational())
    throw DomainError("rational_value() on a prime-field scalar");
  return q_;
}

std::uint64_t Scalar::residue_value() const {
  if (!field_.is_prime())
    throw DomainError("residue_value() on a rational scalar");
  return r_;
}

void Scalar::require_same_field(const Scalar& other) const {
  if (field_ != other.field_)
    throw DomainError("scalars from different fields: " + field_.to_string() +
                      " vs " + other.field_.to_string());
}

Scalar Scalar::operator-() const {
  Scalar s(*this);
  if (field_.is_rational()) {
    s.q_ = -q_;
  } else {
    s.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  Scalar s(*this);
  if (field_.is_rational()) {
    s.q_ = 1 / q_;
  } else {
    // Fermat: r^(p-2) = r^{-1} mod p for prime p.
    s.r_ = pow_mod(r_, field_.characteristic() - 2, field_.characteristic());
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    q_ += rhs.q_;
  } else {
    r_ = (r_ + rhs.r_) % field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    q_ -= rhs.q_;
  } else {
    r_ = (r_ + field_.characteristic() - rhs.r_) % field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    q_ *= rhs.q_;
  } else {
    r_ = mul_mod(r_, rhs.r_, field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  if (rhs.is_zero()) throw DomainError("division by zero");
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const {
  if (field_.is_prime()) return std::to_string(r_);
  const Integer num = numerator(q_);
  const Integer den = denominator(q_);
  std::string out = num.str();
  if (den != 1) out += "/" + den.str();
  return out;
}

bool canonical_less(const Scalar& a, const Scalar& b) {
  if (a.field() != b.field())
    throw DomainError("canonical_less on scalars from different fields");
  if (a.field().is_rational()) return a.rational_value() < b.rational_value();
  return a.residue_value() < b.residue_value();
}

}  // namespace thp
