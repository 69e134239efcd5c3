#include <cmath>

#include <gtest/gtest.h>

#include "bridgeland/error.hpp"
#include "bridgeland/numeric.hpp"
#include "helpers.hpp"

namespace bridgeland {
namespace {

TEST(Parse, RationalForms) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-3/4"), Rational(-3, 4));
  EXPECT_EQ(parse_rational("6/8"), Rational(3, 4));
  EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
  EXPECT_EQ(parse_rational("-2.5e-1"), Rational(-1, 4));
  EXPECT_EQ(parse_rational("1e3"), Rational(1000));
  EXPECT_EQ(parse_rational(" 0.1 "), Rational(1, 10));
}

TEST(Parse, Rejects) {
  EXPECT_THROW(parse_rational(""), ValidationError);
  EXPECT_THROW(parse_rational("1/0"), ValidationError);
  EXPECT_THROW(parse_rational("abc"), ValidationError);
  EXPECT_THROW(parse_rational("1.2.3"), ValidationError);
  EXPECT_THROW(parse_integer("1/2"), ValidationError);
  EXPECT_THROW(parse_integer_list("1,,2"), ValidationError);
}

TEST(Parse, Lists) {
  EXPECT_EQ(parse_integer_list("1,0,-1"), (IntegerVector{1, 0, -1}));
  EXPECT_EQ(parse_rational_list("1/2, -3"), (RationalVector{Rational(1, 2), Rational(-3)}));
}

TEST(Format, RoundTrip) {
  testing::Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const Rational q = rng.rational(1000, 97);
    EXPECT_EQ(parse_rational(to_string(q)), q);
  }
}

TEST(Format, Decimal) {
  EXPECT_EQ(to_decimal(Rational(1, 3), 5), "0.33333");
  EXPECT_EQ(to_decimal(Rational(2, 3), 5), "0.66667");
  EXPECT_EQ(to_decimal(Rational(-25, 2), 4), "-12.50");
  EXPECT_EQ(to_decimal(Rational(0), 4), "0");
}

TEST(FloorCeil, AgainstLongDivision) {
  testing::Rng rng(3);
  for (int i = 0; i < 2000; ++i) {
    const long n = rng.uniform(-500, 500);
    const long d = rng.uniform(1, 37);
    const Rational q = testing::ratio(n, d);
    long f = n / d;
    if (n % d != 0 && n < 0) --f;
    long c = n / d;
    if (n % d != 0 && n > 0) ++c;
    EXPECT_EQ(floor(q), Integer(f));
    EXPECT_EQ(ceil(q), Integer(c));
    EXPECT_EQ(is_integer(q), n % d == 0);
  }
}

TEST(Squares, AgainstEnumeration) {
  for (long k = 0; k < 2000; ++k) {
    long r = 0;
    while ((r + 1) * (r + 1) <= k) ++r;
    Integer root;
    EXPECT_EQ(is_perfect_square(Integer(k), &root), r * r == k);
    if (r * r == k) EXPECT_EQ(root, Integer(r));
  }
  EXPECT_FALSE(is_perfect_square(Integer(-4)));
  Rational root;
  EXPECT_TRUE(is_rational_square(Rational(9, 4), &root));
  EXPECT_EQ(root, Rational(3, 2));
  EXPECT_FALSE(is_rational_square(Rational(2, 9)));
  EXPECT_FALSE(is_rational_square(Rational(-1, 4)));
}

TEST(Gcd, BezoutIdentity) {
  testing::Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    const Integer a = rng.integer(-1000, 1000);
    const Integer b = rng.integer(-1000, 1000);
    Integer s;
    Integer t;
    const Integer g = extended_gcd(a, b, s, t);
    EXPECT_EQ(s * a + t * b, g);
    EXPECT_GE(g, 0);
    EXPECT_EQ(g, gcd(a, b));
    if (g != 0) {
      EXPECT_EQ(a % g, 0);
      EXPECT_EQ(b % g, 0);
    }
  }
}

TEST(Vectors, PrimitivePart) {
  EXPECT_EQ(primitive_part(IntegerVector{-4, 6, 0}), (IntegerVector{2, -3, 0}));
  EXPECT_EQ(primitive_part(IntegerVector{0, -5, 10}), (IntegerVector{0, 1, -2}));
  EXPECT_EQ(primitive_part(RationalVector{Rational(1, 2), Rational(-1, 3)}), (IntegerVector{3, -2}));
  EXPECT_EQ(content(IntegerVector{-4, 6, 0}), Integer(2));
}

TEST(Vectors, LexCompare) {
  EXPECT_TRUE(lex_compare(IntegerVector{1, 2}, IntegerVector{1, 3}) < 0);
  EXPECT_TRUE(lex_compare(IntegerVector{2, 0}, IntegerVector{1, 9}) > 0);
  EXPECT_TRUE(lex_compare(IntegerVector{1, 2}, IntegerVector{1, 2}) == 0);
}

TEST(Vectors, ToInteger) {
  EXPECT_EQ(to_integer(RationalVector{Rational(2), Rational(-3)}), (IntegerVector{2, -3}));
  EXPECT_THROW(to_integer(RationalVector{Rational(1, 2)}), ValidationError);
}

}  // namespace
}  // namespace bridgeland
