#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hfib {

/// Arbitrary-precision signed integer.
using BigInt = mpz_class;

/// Raised when an argument falls outside an operation's domain
/// (negative order, index below the first defined term, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByZero : public DomainError {
 public:
  DivisionByZero() : DomainError("division by zero") {}
};

/// Exact fraction p/q of arbitrary-precision integers.
///
/// Every constructor and arithmetic operation leaves the value in lowest
/// terms with a strictly positive denominator, so two Rationals are equal
/// exactly when their numerators and denominators are equal.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  template <std::integral T>
  Rational(T value) : num_(static_cast<long>(value)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT
  Rational(BigInt numerator, BigInt denominator);

  /// Parses the interchange form "p/q" or "p". Throws std::invalid_argument
  /// on malformed text and DivisionByZero on q = 0. Non-canonical input such
  /// as "4/-6" is accepted and normalized.
  static Rational parse(std::string_view text);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  int sign() const { return sgn(num_); }
  bool is_zero() const { return sgn(num_) == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  Rational abs() const;
  /// Multiplicative inverse; throws DivisionByZero for zero.
  Rational reciprocal() const;
  /// x * x without any gcd: the square of a reduced fraction is reduced.
  Rational squared() const { return Rational(num_ * num_, den_ * den_, Unchecked{}); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p/q" in lowest terms, or "p" when q = 1.
  std::string str() const;

  /// Decimal expansion truncated toward zero after `digits` fractional
  /// places, computed by integer long division. Always uses '.'.
  std::string to_decimal(unsigned digits) const;

  /// Double approximation via floor(|p| * 10^20 / q) so huge numerators
  /// and denominators never overflow the intermediate double.
  double to_double() const;

  /// True if the stored representation is canonical. Exposed for tests.
  bool is_canonical() const;

 private:
  struct Unchecked {};
  Rational(BigInt numerator, BigInt denominator, Unchecked)
      : num_(std::move(numerator)), den_(std::move(denominator)) {}
  void normalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// Accumulator for long sums of Rationals. Terms are brought onto a running
/// common denominator (the lcm of the denominators seen so far) and the
/// fraction is reduced once, in value(). The result equals the eagerly
/// normalized left fold of the same terms.
class RationalSum {
 public:
  RationalSum() = default;
  /// Starts from 0/common_denominator. Terms whose denominators divide it
  /// are added without any gcd; others still work through the general path.
  explicit RationalSum(BigInt common_denominator) : den_(std::move(common_denominator)) {}

  RationalSum& operator+=(const Rational& term);
  RationalSum& operator-=(const Rational& term);
  /// Adds coefficient * term.
  void add_scaled(const BigInt& coefficient, const Rational& term);

  Rational value() const { return Rational(num_, den_); }

 private:
  void add_fraction(const BigInt& p, const BigInt& q);

  BigInt num_ = 0;
  BigInt den_ = 1;
};

/// Free-function forms of the four operations.
inline Rational rat_add(const Rational& a, const Rational& b) { return a + b; }
inline Rational rat_sub(const Rational& a, const Rational& b) { return a - b; }
inline Rational rat_mul(const Rational& a, const Rational& b) { return a * b; }
/// Throws DivisionByZero when b = 0.
inline Rational rat_div(const Rational& a, const Rational& b) { return a / b; }

}  // namespace hfib
