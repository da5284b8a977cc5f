#include "hfib/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace hfib {

namespace {

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Exact quotient; the caller guarantees divisibility.
BigInt divexact(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

bool parse_integer(std::string_view text, BigInt& out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (sgn(den_) == 0) throw DivisionByZero();
  normalize();
}

void Rational::normalize() {
  if (sgn(den_) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (sgn(num_) == 0) {
    den_ = 1;
    return;
  }
  BigInt g = gcd(num_, den_);
  if (g != 1) {
    num_ = divexact(num_, g);
    den_ = divexact(den_, g);
  }
}

bool Rational::is_canonical() const {
  return sgn(den_) > 0 && gcd(num_, den_) == 1;
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  BigInt p;
  BigInt q = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, p)) {
      throw std::invalid_argument("malformed rational: " + std::string(text));
    }
  } else if (!parse_integer(text.substr(0, slash), p) ||
             !parse_integer(text.substr(slash + 1), q)) {
    throw std::invalid_argument("malformed rational: " + std::string(text));
  }
  return Rational(std::move(p), std::move(q));
}

Rational Rational::operator-() const { return Rational(BigInt(-num_), den_, Unchecked{}); }

Rational Rational::abs() const { return Rational(BigInt(::abs(num_)), den_, Unchecked{}); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw DivisionByZero();
  if (sgn(num_) < 0) return Rational(BigInt(-den_), BigInt(-num_), Unchecked{});
  return Rational(den_, num_, Unchecked{});
}

// Addition and multiplication reduce by the gcds of the operands' parts
// before forming products (Henrici), which keeps intermediates small.
Rational& Rational::operator+=(const Rational& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == 1 && rhs.den_ == 1) {
    num_ += rhs.num_;
    return *this;
  }
  BigInt g = gcd(den_, rhs.den_);
  if (g == 1) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    return *this;
  }
  BigInt lhs_scale = divexact(den_, g);
  BigInt t = num_ * divexact(rhs.den_, g) + rhs.num_ * lhs_scale;
  if (sgn(t) == 0) {
    num_ = 0;
    den_ = 1;
    return *this;
  }
  BigInt g2 = gcd(t, g);
  if (g2 == 1) {
    num_ = std::move(t);
    den_ = lhs_scale * rhs.den_;
  } else {
    num_ = divexact(t, g2);
    den_ = lhs_scale * divexact(rhs.den_, g2);
  }
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (is_zero()) return *this;
  if (rhs.is_zero()) {
    num_ = 0;
    den_ = 1;
    return *this;
  }
  BigInt g1 = gcd(num_, rhs.den_);
  BigInt g2 = gcd(rhs.num_, den_);
  num_ = divexact(num_, g1) * divexact(rhs.num_, g2);
  den_ = divexact(den_, g2) * divexact(rhs.den_, g1);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) { return *this *= rhs.reciprocal(); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return cmp(a.num_, b.num_) <=> 0;
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  return cmp(lhs, rhs) <=> 0;
}

std::string Rational::str() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

std::string Rational::to_decimal(unsigned digits) const {
  BigInt magnitude = ::abs(num_);
  BigInt whole;
  BigInt remainder;
  mpz_tdiv_qr(whole.get_mpz_t(), remainder.get_mpz_t(), magnitude.get_mpz_t(), den_.get_mpz_t());

  std::string out;
  if (sgn(num_) < 0) out += '-';
  out += whole.get_str();
  if (digits == 0) return out;
  out += '.';
  for (unsigned i = 0; i < digits; ++i) {
    remainder *= 10;
    BigInt digit;
    mpz_tdiv_qr(digit.get_mpz_t(), remainder.get_mpz_t(), remainder.get_mpz_t(), den_.get_mpz_t());
    out += static_cast<char>('0' + digit.get_ui());
  }
  return out;
}

double Rational::to_double() const {
  static const BigInt kScale = [] {
    BigInt s;
    mpz_ui_pow_ui(s.get_mpz_t(), 10, 20);
    return s;
  }();
  BigInt scaled = ::abs(num_) * kScale;
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), den_.get_mpz_t());
  double value = q.get_d() / 1e20;
  return sgn(num_) < 0 ? -value : value;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

void RationalSum::add_fraction(const BigInt& p, const BigInt& q) {
  if (sgn(p) == 0) return;
  if (q == 1) {
    num_ += p * den_;
    return;
  }
  if (mpz_divisible_p(den_.get_mpz_t(), q.get_mpz_t())) {
    num_ += p * divexact(den_, q);
    return;
  }
  BigInt g = gcd(den_, q);
  BigInt q_scale = divexact(q, g);
  num_ = num_ * q_scale + p * divexact(den_, g);
  den_ *= q_scale;
}

RationalSum& RationalSum::operator+=(const Rational& term) {
  add_fraction(term.numerator(), term.denominator());
  return *this;
}

RationalSum& RationalSum::operator-=(const Rational& term) {
  add_fraction(BigInt(-term.numerator()), term.denominator());
  return *this;
}

void RationalSum::add_scaled(const BigInt& coefficient, const Rational& term) {
  add_fraction(BigInt(coefficient * term.numerator()), term.denominator());
}

}  // namespace hfib
