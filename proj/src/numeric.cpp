#include "bridgeland/numeric.hpp"

#include <algorithm>
#include <cctype>

#include "bridgeland/error.hpp"

namespace bridgeland {

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return text;
}

bool all_digits(std::string_view text) {
  return !text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
           return std::isdigit(static_cast<unsigned char>(c));
         });
}

Integer parse_signed_digits(std::string_view text, std::string_view original) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (!all_digits(text)) {
    throw ValidationError("not a number: '" + std::string(original) + "'");
  }
  Integer value(std::string(text), 10);
  return negative ? Integer(-value) : value;
}

Integer power_of_ten(unsigned long exponent) {
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view original = text;
  text = trim(text);
  if (text.empty()) throw ValidationError("empty number");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_signed_digits(trim(text.substr(0, slash)), original);
    Integer den = parse_signed_digits(trim(text.substr(slash + 1)), original);
    if (den == 0) throw ValidationError("zero denominator: '" + std::string(original) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  long exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    exponent = parse_signed_digits(text.substr(e + 1), original).get_si();
    text = text.substr(0, e);
  }

  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string digits;
  long fraction_digits = 0;
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw ValidationError("not a number: '" + std::string(original) + "'");
    }
    digits = std::string(whole) + std::string(frac);
    fraction_digits = static_cast<long>(frac.size());
  } else {
    if (!all_digits(text)) throw ValidationError("not a number: '" + std::string(original) + "'");
    digits = std::string(text);
  }

  Rational q{Integer(digits, 10)};
  const long shift = exponent - fraction_digits;
  if (shift > 0) q *= power_of_ten(static_cast<unsigned long>(shift));
  if (shift < 0) q /= power_of_ten(static_cast<unsigned long>(-shift));
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

Integer parse_integer(std::string_view text) {
  const Rational q = parse_rational(text);
  if (!is_integer(q)) throw ValidationError("not an integer: '" + std::string(text) + "'");
  return q.get_num();
}

RationalVector parse_rational_list(std::string_view text) {
  RationalVector out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

IntegerVector parse_integer_list(std::string_view text) {
  return to_integer(parse_rational_list(text));
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal(const Rational& value, int digits) {
  // Scale so that the integer part carries `digits` significant digits.
  if (value == 0) return "0";
  Rational magnitude = abs(value);
  long exponent10 = 0;
  while (magnitude >= 10) {
    magnitude /= 10;
    ++exponent10;
  }
  while (magnitude < 1) {
    magnitude *= 10;
    --exponent10;
  }
  Rational scaled = magnitude * Rational(power_of_ten(static_cast<unsigned long>(digits - 1)));
  Integer rounded = floor(scaled + Rational(1, 2));
  std::string mantissa = rounded.get_str();
  if (static_cast<int>(mantissa.size()) > digits) {  // rounding carried over
    mantissa.pop_back();
    ++exponent10;
  }
  // Place the decimal point.
  std::string out;
  const long point = exponent10 + 1;  // digits before the point
  if (point <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-point), '0') + mantissa;
  } else if (point >= static_cast<long>(mantissa.size())) {
    out = mantissa + std::string(static_cast<std::size_t>(point) - mantissa.size(), '0');
  } else {
    out = mantissa.substr(0, static_cast<std::size_t>(point)) + "." +
          mantissa.substr(static_cast<std::size_t>(point));
  }
  return sign(value) < 0 ? "-" + out : out;
}

int sign(const Integer& value) { return sgn(value); }
int sign(const Rational& value) { return sgn(value); }

Integer floor(const Rational& value) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

Integer ceil(const Rational& value) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

bool is_perfect_square(const Integer& value, Integer* root) {
  if (value < 0) return false;
  if (mpz_perfect_square_p(value.get_mpz_t()) == 0) return false;
  if (root != nullptr) mpz_sqrt(root->get_mpz_t(), value.get_mpz_t());
  return true;
}

bool is_rational_square(const Rational& value, Rational* root) {
  Integer num_root;
  Integer den_root;
  if (!is_perfect_square(value.get_num(), &num_root)) return false;
  if (!is_perfect_square(value.get_den(), &den_root)) return false;
  if (root != nullptr) {
    *root = Rational(num_root, den_root);
    root->canonicalize();
  }
  return true;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer extended_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t) {
  Integer g;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

RationalVector to_rational(const IntegerVector& v) {
  RationalVector out;
  out.reserve(v.size());
  for (const Integer& x : v) out.emplace_back(x);
  return out;
}

IntegerVector to_integer(const RationalVector& v) {
  IntegerVector out;
  out.reserve(v.size());
  for (const Rational& x : v) {
    if (!is_integer(x)) throw ValidationError("expected an integer, got " + to_string(x));
    out.push_back(x.get_num());
  }
  return out;
}

Integer content(const IntegerVector& v) {
  Integer g = 0;
  for (const Integer& x : v) g = gcd(g, x);
  return g;
}

IntegerVector primitive_part(const IntegerVector& v) {
  const Integer g = content(v);
  if (g == 0) throw ComputationError("primitive part of the zero vector");
  IntegerVector out;
  out.reserve(v.size());
  int first_sign = 0;
  for (const Integer& x : v) {
    if (first_sign == 0) first_sign = sign(x);
    out.push_back(x / g);
  }
  if (first_sign < 0) {
    for (Integer& x : out) x = -x;
  }
  return out;
}

IntegerVector primitive_part(const RationalVector& v) {
  Integer common_den = 1;
  for (const Rational& x : v) {
    mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), x.get_den_mpz_t());
  }
  IntegerVector scaled;
  scaled.reserve(v.size());
  for (const Rational& x : v) {
    Rational y = x * Rational(common_den);
    scaled.push_back(y.get_num());
  }
  return primitive_part(scaled);
}

bool is_zero(const IntegerVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

bool is_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

std::strong_ordering lex_compare(const IntegerVector& a, const IntegerVector& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a[i], b[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

}  // namespace bridgeland
