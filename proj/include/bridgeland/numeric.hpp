#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace bridgeland {

using Integer = mpz_class;
using Rational = mpq_class;

using IntegerVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

// Accepts "7", "-3/4", "0.125", "-2.5e-1". Throws ValidationError.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

// Comma separated list, e.g. "1,0,-1".
RationalVector parse_rational_list(std::string_view text);
IntegerVector parse_integer_list(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

// Decimal expansion of a rational, `digits` significant digits.
std::string to_decimal(const Rational& value, int digits);

int sign(const Integer& value);
int sign(const Rational& value);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);
bool is_integer(const Rational& value);

// Exact square root of a nonnegative integer, if it exists.
bool is_perfect_square(const Integer& value, Integer* root = nullptr);
// Exact square root of a nonnegative rational, if it exists.
bool is_rational_square(const Rational& value, Rational* root = nullptr);

Integer gcd(const Integer& a, const Integer& b);
// Returns g = gcd(a, b) and sets s, t with s*a + t*b = g, g >= 0.
Integer extended_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t);

RationalVector to_rational(const IntegerVector& v);
// Throws ValidationError when some entry is not integral.
IntegerVector to_integer(const RationalVector& v);

Integer content(const IntegerVector& v);
// Scales a nonzero rational vector to a primitive integer vector whose first
// nonzero entry is positive.
IntegerVector primitive_part(const RationalVector& v);
IntegerVector primitive_part(const IntegerVector& v);

bool is_zero(const IntegerVector& v);
bool is_zero(const RationalVector& v);

// Lexicographic comparison of integer vectors.
std::strong_ordering lex_compare(const IntegerVector& a, const IntegerVector& b);

}  // namespace bridgeland
