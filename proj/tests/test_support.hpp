#pragma once
// Shared test helpers: a deterministic RNG with the modulo-style draws the
// suites use. std::mt19937_64 with fixed seeds keeps every run identical on
// every platform (the std distributions are not cross-platform
// deterministic, so draws are derived from raw 64-bit outputs instead).

#include <cstdint>
#include <random>
#include <vector>

#include "clipvol/eps_rational.hpp"
#include "clipvol/rational.hpp"

namespace test_support {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t raw() { return gen_(); }

  // Uniform-ish integer in [0, n); n > 0.
  int below(int n) { return static_cast<int>(raw() % static_cast<std::uint64_t>(n)); }

  // Uniform-ish integer in [lo, hi] inclusive.
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }

  bool coin() { return (raw() & 1U) != 0; }

  // Random rational p/q with p in [lo*q, hi*q] ranges kept small; q in [1, max_den].
  clipvol::Rational rational(int lo, int hi, int max_den = 6) {
    const int q = range(1, max_den);
    const int p = range(lo * q, hi * q);
    return clipvol::Rational(p, q);
  }

  clipvol::Rational nonzero_rational(int lo, int hi, int max_den = 6) {
    for (;;) {
      clipvol::Rational r = rational(lo, hi, max_den);
      if (r != 0) return r;
    }
  }

  // Random Q(e) value with polynomial degree <= max_deg and small coefficients.
  clipvol::EpsRational eps_value(int max_deg = 2) {
    std::vector<clipvol::Rational> num, den;
    const int dn = range(0, max_deg);
    for (int i = 0; i <= dn; ++i) num.push_back(rational(-3, 3, 4));
    const int dd = range(0, max_deg);
    for (int i = 0; i <= dd; ++i) den.push_back(rational(-3, 3, 4));
    bool den_zero = true;
    for (const auto& c : den) den_zero = den_zero && (c == 0);
    if (den_zero) den = {clipvol::Rational(1)};
    return clipvol::EpsRational(num, den);
  }

  clipvol::EpsRational nonzero_eps_value(int max_deg = 2) {
    for (;;) {
      clipvol::EpsRational v = eps_value(max_deg);
      if (!v.is_zero()) return v;
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace test_support
