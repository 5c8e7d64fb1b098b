#include "clipvol/eps_rational.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>

namespace clipvol {

namespace {

using Poly = std::vector<Rational>;   // ascending degree, trimmed
using ZPoly = std::vector<BigInt>;    // ascending degree, trimmed

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// Exact division a / b over Q; throws on nonzero remainder (internal misuse).
Poly div_exact(const Poly& a, const Poly& b) {
  if (b.empty()) throw DivisionByZero("polynomial division by zero");
  if (a.empty()) return {};
  if (a.size() < b.size()) throw Error("inexact polynomial division");
  Poly rem = a;
  Poly quot(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    if (rem.size() < b.size() + k) continue;  // coefficient already zero
    Rational c = rem[b.size() - 1 + k] / lead;
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) rem[j + k] -= c * b[j];
  }
  trim(rem);
  if (!rem.empty()) throw Error("inexact polynomial division");
  trim(quot);
  return quot;
}

BigInt int_gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

BigInt int_lcm(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::lcm(a, b);
}

// Clear denominators and divide by content: a primitive integer polynomial
// with the same roots, positive leading coefficient not enforced.
ZPoly primitive_integer(const Poly& p) {
  BigInt l = 1;
  for (const Rational& c : p) l = int_lcm(l, boost::multiprecision::denominator(c));
  ZPoly r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rational scaled = p[i] * Rational(l);
    r[i] = boost::multiprecision::numerator(scaled);
  }
  BigInt content = 0;
  for (const BigInt& c : r) content = int_gcd(content, c);
  if (content > 1)
    for (BigInt& c : r) c /= content;
  return r;
}

ZPoly primitive_part(ZPoly p) {
  BigInt content = 0;
  for (const BigInt& c : p) content = int_gcd(content, c);
  if (content > 1)
    for (BigInt& c : p) c /= content;
  return p;
}

BigInt int_pow(const BigInt& b, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b, computed
// over integers. The power of lc(b) must be exactly deg a - deg b + 1 for
// the subresultant divisions to stay exact, so steps where the degree drops
// by more than one are compensated at the end.
ZPoly prem(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  const BigInt& lb = b.back();
  const int target = static_cast<int>(a.size() - 1 - db) + 1;
  int applied = 0;
  while (a.size() >= b.size()) {
    const std::size_t da = a.size() - 1;
    const BigInt la = a.back();
    for (BigInt& c : a) c *= lb;
    ++applied;
    const std::size_t k = da - db;
    for (std::size_t j = 0; j < b.size(); ++j) a[j + k] -= la * b[j];
    trim(a);
    if (a.empty()) break;
  }
  if (!a.empty() && applied < target) {
    const BigInt scale = int_pow(lb, target - applied);
    for (BigInt& c : a) c *= scale;
  }
  return a;
}

// Polynomial gcd via the subresultant PRS; result is primitive over Z,
// returned as a monic polynomial over Q.
Poly poly_gcd(const Poly& fa, const Poly& fb) {
  if (fa.empty()) return fb;
  if (fb.empty()) return fa;
  ZPoly a = primitive_integer(fa);
  ZPoly b = primitive_integer(fb);
  if (a.size() < b.size()) std::swap(a, b);
  BigInt g = 1, h = 1;
  while (true) {
    if (b.size() == 1) {
      // Nonzero constant remainder: coprime.
      return {Rational(1)};
    }
    const int delta = static_cast<int>(a.size() - b.size());
    ZPoly r = prem(a, b);
    if (r.empty()) break;
    a = b;
    const BigInt divisor = g * int_pow(h, delta);
    for (BigInt& c : r) c /= divisor;  // exact by subresultant theory
    b = std::move(r);
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = int_pow(g, delta) / int_pow(h, delta - 1);
    }
  }
  ZPoly p = primitive_part(std::move(b));
  Poly result(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) result[i] = Rational(p[i]);
  const Rational lead = result.back();
  for (Rational& c : result) c /= lead;
  return result;
}

int lowest_nonzero_sign(const Poly& p) {
  for (const Rational& c : p)
    if (c != 0) return c.sign();
  return 0;
}

std::string poly_to_string(const Poly& p) {
  if (p.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const Rational& c = p[k];
    if (c == 0) continue;
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (k == 0) {
      out << to_string(mag);
    } else {
      if (mag != 1) out << to_string(mag) << "*";
      out << "e";
      if (k >= 2) out << "^" << k;
    }
  }
  return out.str();
}

}  // namespace

EpsRational::EpsRational(const Rational& value) {
  if (value != 0) num_.push_back(value);
  den_ = {Rational(1)};
}

EpsRational::EpsRational(std::vector<Rational> num, std::vector<Rational> den)
    : num_(std::move(num)), den_(std::move(den)) {
  trim(num_);
  trim(den_);
  if (den_.empty()) throw DivisionByZero("zero denominator in Q(e) value");
  canonicalize();
}

EpsRational EpsRational::epsilon() {
  EpsRational e;
  e.num_ = {Rational(0), Rational(1)};
  e.den_ = {Rational(1)};
  return e;
}

void EpsRational::canonicalize() {
  if (num_.empty()) {
    den_ = {Rational(1)};
    return;
  }
  // Strip the common power of e cheaply before the general gcd.
  std::size_t vn = 0, vd = 0;
  while (vn < num_.size() && num_[vn] == 0) ++vn;
  while (vd < den_.size() && den_[vd] == 0) ++vd;
  const std::size_t v = std::min(vn, vd);
  if (v > 0) {
    num_.erase(num_.begin(), num_.begin() + v);
    den_.erase(den_.begin(), den_.begin() + v);
  }
  if (num_.size() > 1 && den_.size() > 1) {
    const Poly g = poly_gcd(num_, den_);
    if (g.size() > 1) {
      num_ = div_exact(num_, g);
      den_ = div_exact(den_, g);
    }
  }
  const Rational lead = den_.back();
  if (lead != 1) {
    for (Rational& c : num_) c /= lead;
    for (Rational& c : den_) c /= lead;
  }
}

int EpsRational::sign() const {
  if (num_.empty()) return 0;
  return lowest_nonzero_sign(num_) * lowest_nonzero_sign(den_);
}

Rational EpsRational::epsilon_limit() const {
  const Rational d0 = den_.front();
  if (d0 == 0) throw PoleAtZero("pole at e = 0: " + str());
  if (num_.empty()) return Rational(0);
  return num_.front() / d0;
}

Rational EpsRational::eval(const Rational& eps0) const {
  auto horner = [&eps0](const Poly& p) {
    Rational acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * eps0 + p[i];
    return acc;
  };
  const Rational d = horner(den_);
  if (d == 0) throw DivisionByZero("denominator vanishes at e = " + to_string(eps0));
  return horner(num_) / d;
}

EpsRational EpsRational::operator-() const {
  EpsRational r = *this;
  for (Rational& c : r.num_) c = -c;
  return r;
}

EpsRational& EpsRational::operator+=(const EpsRational& rhs) {
  Poly n = add(mul(num_, rhs.den_), mul(rhs.num_, den_));
  Poly d = mul(den_, rhs.den_);
  num_ = std::move(n);
  den_ = std::move(d);
  canonicalize();
  return *this;
}

EpsRational& EpsRational::operator-=(const EpsRational& rhs) {
  Poly n = sub(mul(num_, rhs.den_), mul(rhs.num_, den_));
  Poly d = mul(den_, rhs.den_);
  num_ = std::move(n);
  den_ = std::move(d);
  canonicalize();
  return *this;
}

EpsRational& EpsRational::operator*=(const EpsRational& rhs) {
  num_ = mul(num_, rhs.num_);
  den_ = mul(den_, rhs.den_);
  canonicalize();
  return *this;
}

EpsRational& EpsRational::operator/=(const EpsRational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero("division by zero in Q(e)");
  num_ = mul(num_, rhs.den_);
  den_ = mul(den_, rhs.num_);
  canonicalize();
  return *this;
}

std::string EpsRational::str() const {
  std::string out = "(" + poly_to_string(num_) + ")";
  if (den_.size() != 1 || den_.front() != 1)
    out += "/(" + poly_to_string(den_) + ")";
  return out;
}

EpsRational pow(const EpsRational& base, long exp) {
  if (exp < 0) {
    if (base.is_zero()) throw DivisionByZero("0 raised to a negative power");
    return EpsRational(1) / pow(base, -exp);
  }
  EpsRational result(1);
  EpsRational b = base;
  unsigned long e = static_cast<unsigned long>(exp);
  while (e > 0) {
    if (e & 1UL) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

std::string to_string(const EpsRational& x) { return x.str(); }

}  // namespace clipvol
