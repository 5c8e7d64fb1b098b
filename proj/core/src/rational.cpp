#include "clipvol/rational.hpp"

#include <cstddef>
#include <regex>

namespace clipvol {

namespace {

BigInt pow10(int k) {
  BigInt r = 1;
  for (int i = 0; i < k; ++i) r *= 10;
  return r;
}

}  // namespace

Rational pow(const Rational& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw DivisionByZero("0 raised to a negative power");
    return Rational(1) / pow(base, -exp);
  }
  Rational result = 1;
  Rational b = base;
  unsigned long e = static_cast<unsigned long>(exp);
  while (e > 0) {
    if (e & 1UL) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

BigInt factorial(int n) {
  if (n < 0) throw Error("factorial of negative argument");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);  // exact: r is always an integer binomial prefix
  }
  return r;
}

Rational parse_rational(const std::string& text) {
  static const std::regex grammar(R"(^(-?\d+)(?:/(\d+))?$)");
  std::smatch m;
  if (!std::regex_match(text, m, grammar))
    throw ParseError("not a rational literal: \"" + text + "\"");
  BigInt num(m[1].str());
  BigInt den = 1;
  if (m[2].matched) {
    den = BigInt(m[2].str());
    if (den == 0)
      throw ParseError("zero denominator in rational literal: \"" + text + "\"");
  }
  return Rational(num, den);
}

std::string to_string(const Rational& x) { return x.str(); }

std::string format_approx(const Rational& x) {
  if (x == 0) return "0";
  BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  const bool negative = num < 0;
  if (negative) num = -num;

  // Decimal exponent e: the unique integer with 10^e <= num/den < 10^(e+1).
  int e;
  if (num >= den) {
    e = static_cast<int>(BigInt(num / den).str().size()) - 1;
  } else {
    int k = 0;
    BigInt t = num;
    while (t < den) {
      t *= 10;
      ++k;
    }
    e = -k;
  }

  // M = round-half-even(num/den * 10^(14-e)); exactly 15 digits, except a
  // rounding carry can push it to 10^15, handled below.
  BigInt p = num, q = den;
  const int shift = 14 - e;
  if (shift >= 0)
    p *= pow10(shift);
  else
    q *= pow10(-shift);
  BigInt m = p / q;
  const BigInt twice_rem = (p % q) * 2;
  if (twice_rem > q || (twice_rem == q && (m % 2) != 0)) ++m;
  if (m == pow10(15)) {
    m /= 10;
    ++e;
  }

  std::string digits = m.str();  // 15 characters
  const std::size_t last = digits.find_last_not_of('0');
  digits.erase(last + 1);

  std::string body;
  if (e >= -4 && e < 15) {
    if (e >= 0) {
      if (static_cast<std::size_t>(e) + 1 >= digits.size()) {
        body = digits + std::string(e + 1 - digits.size(), '0');
      } else {
        body = digits.substr(0, e + 1) + "." + digits.substr(e + 1);
      }
    } else {
      body = "0." + std::string(-e - 1, '0') + digits;
    }
  } else {
    body = digits.substr(0, 1);
    if (digits.size() > 1) body += "." + digits.substr(1);
    std::string ex = std::to_string(e < 0 ? -e : e);
    if (ex.size() < 2) ex = "0" + ex;
    body += std::string("e") + (e < 0 ? "-" : "+") + ex;
  }
  return negative ? "-" + body : body;
}

double to_double(const Rational& x) { return static_cast<double>(x); }

}  // namespace clipvol
