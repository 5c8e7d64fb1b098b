#pragma once
// The ordered field Q(e) of univariate rational functions in an
// infinitesimal positive indeterminate e.
//
// A value is a fraction num(e)/den(e) of polynomials with Rational
// coefficients, kept canonical after every operation: gcd(num, den) = 1 as
// polynomials, den monic, no trailing zero coefficients (the zero value is
// the empty numerator over den = 1). Canonical forms are unique, so
// equality is coefficient-wise.
//
// The order is the e -> 0+ order: f > 0 iff f(e) > 0 for all sufficiently
// small e > 0, which for canceled forms is decided by the lowest-order
// nonzero coefficients of numerator and denominator. epsilon_limit
// evaluates the exact limit at e = 0 and raises PoleAtZero when the
// canceled denominator vanishes there.
//
// Polynomial gcds are computed with the subresultant polynomial remainder
// sequence over big integers (denominators cleared first), which bounds
// intermediate coefficient growth.

#include <string>
#include <vector>

#include "clipvol/errors.hpp"
#include "clipvol/rational.hpp"

namespace clipvol {

class EpsRational {
 public:
  // Zero.
  EpsRational() : num_(), den_{Rational(1)} {}
  EpsRational(int value) : EpsRational(Rational(value)) {}
  EpsRational(const BigInt& value) : EpsRational(Rational(value)) {}
  EpsRational(const Rational& value);

  // General fraction; canonicalizes. Coefficients are ascending in degree.
  EpsRational(std::vector<Rational> num, std::vector<Rational> den);

  // The indeterminate e itself.
  static EpsRational epsilon();

  // Ascending coefficient sequences of the canonical form. The numerator of
  // zero is the empty sequence; the denominator is always nonempty & monic.
  const std::vector<Rational>& num() const { return num_; }
  const std::vector<Rational>& den() const { return den_; }

  bool is_zero() const { return num_.empty(); }
  bool is_rational() const { return num_.size() <= 1 && den_.size() == 1; }

  // Sign under the e -> 0+ order: -1, 0 or +1.
  int sign() const;

  // Exact limit at e = 0 (PoleAtZero if the canceled denominator vanishes).
  Rational epsilon_limit() const;

  // Substitute a concrete rational value for e (DivisionByZero if the
  // denominator vanishes there).
  Rational eval(const Rational& eps0) const;

  EpsRational operator-() const;
  EpsRational& operator+=(const EpsRational& rhs);
  EpsRational& operator-=(const EpsRational& rhs);
  EpsRational& operator*=(const EpsRational& rhs);
  EpsRational& operator/=(const EpsRational& rhs);

  friend EpsRational operator+(EpsRational a, const EpsRational& b) { return a += b; }
  friend EpsRational operator-(EpsRational a, const EpsRational& b) { return a -= b; }
  friend EpsRational operator*(EpsRational a, const EpsRational& b) { return a *= b; }
  friend EpsRational operator/(EpsRational a, const EpsRational& b) { return a /= b; }

  friend bool operator==(const EpsRational& a, const EpsRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const EpsRational& a, const EpsRational& b) { return !(a == b); }
  friend bool operator<(const EpsRational& a, const EpsRational& b) { return (a - b).sign() < 0; }
  friend bool operator>(const EpsRational& a, const EpsRational& b) { return (a - b).sign() > 0; }
  friend bool operator<=(const EpsRational& a, const EpsRational& b) { return (a - b).sign() <= 0; }
  friend bool operator>=(const EpsRational& a, const EpsRational& b) { return (a - b).sign() >= 0; }

  // "(n0 + n1*e + n2*e^2 + ...)", with "/(d0 + ...)" appended when the
  // denominator is not 1.
  std::string str() const;

 private:
  void canonicalize();

  std::vector<Rational> num_;  // ascending; empty means zero
  std::vector<Rational> den_;  // ascending; nonempty, monic leading coeff
};

// The paper's type name for this field's elements.
using EpsRationalFunction = EpsRational;

inline int sign(const EpsRational& x) { return x.sign(); }
EpsRational pow(const EpsRational& base, long exp);
inline Rational epsilon_limit(const EpsRational& x) { return x.epsilon_limit(); }
inline Rational epsilon_limit(const Rational& x) { return x; }
std::string to_string(const EpsRational& x);

}  // namespace clipvol
