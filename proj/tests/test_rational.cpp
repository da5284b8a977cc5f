#include <gtest/gtest.h>

#include <random>

#include "hfib/rational.hpp"

using hfib::BigInt;
using hfib::Rational;

namespace {

// Small and occasionally large magnitudes, never a zero denominator.
struct RationalGen {
  std::mt19937_64 rng{20240917};

  BigInt integer(bool allow_zero = true) {
    std::uniform_int_distribution<int> shape(0, 9);
    std::uniform_int_distribution<long> small(-40, 40);
    BigInt v;
    if (shape(rng) < 7) {
      v = small(rng);
    } else {
      // a few hundred bits
      v = 1;
      for (int i = 0; i < 6; ++i) v = v * BigInt(static_cast<unsigned long>(rng() >> 1)) + 7;
      if (rng() & 1) v = -v;
    }
    if (!allow_zero && v == 0) v = 1;
    return v;
  }

  Rational next() { return Rational(integer(), integer(false)); }
};

// a/b == c/d by cross multiplication, independent of normal form.
bool same_value(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d) {
  return a * d == c * b;
}

}  // namespace

TEST(Rational, CanonicalOnConstruction) {
  Rational r(BigInt(6), BigInt(-4));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_TRUE(r.is_canonical());

  Rational zero(BigInt(0), BigInt(-17));
  EXPECT_EQ(zero.numerator(), 0);
  EXPECT_EQ(zero.denominator(), 1);
}

TEST(Rational, KnownValues) {
  EXPECT_EQ(Rational(BigInt(17), BigInt(6)) + Rational(BigInt(1), BigInt(5)), Rational(BigInt(91), BigInt(30)));
  EXPECT_EQ(Rational(BigInt(91), BigInt(30)).to_decimal(4), "3.0333");
  EXPECT_EQ(Rational(BigInt(-7), BigInt(2)).to_decimal(2), "-3.50");
  EXPECT_EQ(Rational(5).to_decimal(0), "5");
  EXPECT_EQ(Rational(BigInt(1), BigInt(3)).str(), "1/3");
  EXPECT_EQ(Rational(-12).str(), "-12");
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), hfib::DivisionByZero);
  EXPECT_THROW(Rational(3) / Rational(0), hfib::DivisionByZero);
  EXPECT_THROW(Rational(0).reciprocal(), hfib::DivisionByZero);
  EXPECT_THROW(Rational::parse("1/0"), hfib::DivisionByZero);
  // also catchable as the general domain error
  EXPECT_THROW(hfib::rat_div(Rational(1), Rational(0)), hfib::DomainError);
}

TEST(Rational, ParseRejectsGarbage) {
  for (const char* bad : {"", "/", "1/", "/2", "1//2", "a/3", "1.5", "1/2/3", "- 4", "+"}) {
    EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
  }
  EXPECT_EQ(Rational::parse("+4/-6"), Rational(BigInt(-2), BigInt(3)));
  EXPECT_EQ(Rational::parse("0/9"), Rational(0));
}

TEST(RationalProperty, ParseStrRoundTrip) {
  RationalGen gen;
  for (int i = 0; i < 500; ++i) {
    const Rational x = gen.next();
    EXPECT_EQ(Rational::parse(x.str()), x);
  }
}

TEST(RationalProperty, ArithmeticMatchesCrossMultiplication) {
  RationalGen gen;
  for (int i = 0; i < 500; ++i) {
    const BigInt a = gen.integer(), b = gen.integer(false), c = gen.integer(), d = gen.integer(false);
    const Rational x(a, b), y(c, d);

    const Rational sum = x + y;
    EXPECT_TRUE(same_value(sum.numerator(), sum.denominator(), a * d + c * b, b * d));
    const Rational diff = x - y;
    EXPECT_TRUE(same_value(diff.numerator(), diff.denominator(), a * d - c * b, b * d));
    const Rational prod = x * y;
    EXPECT_TRUE(same_value(prod.numerator(), prod.denominator(), a * c, b * d));
    if (c != 0) {
      const Rational quot = x / y;
      EXPECT_TRUE(same_value(quot.numerator(), quot.denominator(), a * d, b * c));
    }
    for (const Rational* r : {&sum, &diff, &prod}) EXPECT_TRUE(r->is_canonical()) << r->str();
  }
}

TEST(RationalProperty, FieldAxioms) {
  RationalGen gen;
  for (int i = 0; i < 300; ++i) {
    const Rational x = gen.next(), y = gen.next(), z = gen.next();
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x + Rational(0), x);
    EXPECT_EQ(x * Rational(1), x);
    EXPECT_EQ(x + (-x), Rational(0));
    EXPECT_EQ(x - y, x + (-y));
    if (!x.is_zero()) {
      EXPECT_EQ(x * x.reciprocal(), Rational(1));
      EXPECT_EQ(y / x * x, y);
    }
  }
}

TEST(RationalProperty, CanonicalAfterLongChains) {
  RationalGen gen;
  for (int chain = 0; chain < 40; ++chain) {
    Rational acc = gen.next();
    for (int step = 0; step < 30; ++step) {
      const Rational t = gen.next();
      switch (step % 4) {
        case 0: acc += t; break;
        case 1: acc *= t; break;
        case 2: acc -= t; break;
        default:
          if (!t.is_zero()) acc /= t;
      }
      ASSERT_TRUE(acc.is_canonical()) << acc.str();
    }
  }
}

TEST(RationalProperty, OrderingIsConsistentWithSubtraction) {
  RationalGen gen;
  for (int i = 0; i < 300; ++i) {
    const Rational x = gen.next(), y = gen.next();
    const int s = (x - y).sign();
    EXPECT_EQ(x < y, s < 0);
    EXPECT_EQ(x == y, s == 0);
    EXPECT_EQ(x > y, s > 0);
    EXPECT_EQ(x.abs().sign() >= 0, true);
  }
}

TEST(RationalProperty, LazySumEqualsEagerSum) {
  RationalGen gen;
  for (int trial = 0; trial < 50; ++trial) {
    hfib::RationalSum lazy;
    Rational eager;
    for (int k = 0; k < 25; ++k) {
      const Rational t = gen.next();
      const BigInt c = gen.integer();
      if (k % 3 == 0) {
        lazy.add_scaled(c, t);
        eager += Rational(c) * t;
      } else if (k % 3 == 1) {
        lazy -= t;
        eager -= t;
      } else {
        lazy += t;
        eager += t;
      }
    }
    EXPECT_EQ(lazy.value(), eager);
    EXPECT_TRUE(lazy.value().is_canonical());
  }
}

TEST(RationalSum, PresetDenominatorFallsBackWhenNotADivisor) {
  hfib::RationalSum sum(BigInt(6));
  sum += Rational(BigInt(1), BigInt(2));
  sum += Rational(BigInt(1), BigInt(3));
  sum += Rational(BigInt(1), BigInt(7));
  EXPECT_EQ(sum.value(), Rational(BigInt(41), BigInt(42)));
}

TEST(Rational, DecimalExpansionTruncates) {
  EXPECT_EQ(Rational(BigInt(2), BigInt(3)).to_decimal(5), "0.66666");
  EXPECT_EQ(Rational(BigInt(-1), BigInt(8)).to_decimal(3), "-0.125");
  EXPECT_EQ(Rational(BigInt(-1), BigInt(3)).to_decimal(2), "-0.33");
}

TEST(Rational, ToDouble) {
  EXPECT_DOUBLE_EQ(Rational(BigInt(91), BigInt(30)).to_double(), 91.0 / 30.0);
  EXPECT_DOUBLE_EQ(Rational(BigInt(-1), BigInt(4)).to_double(), -0.25);
}
