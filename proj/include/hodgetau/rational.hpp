#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hodgetau {

// Exact rational scalar on top of GMP's mpq_class. Values are always kept
// in canonical reduced form (gcd 1, positive denominator), so equality is
// structural and printing is deterministic.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Accepts "a", "-a", "a/b" with arbitrary-precision integers.
  static Rational from_string(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0)
      throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    if (v.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    v.canonicalize();
    return Rational(std::move(v));
  }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  Rational inv() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

  Rational pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Rational r(1), b(*this);
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
      if (k & 1UL) r *= b;
      b *= b;
      k >>= 1UL;
    }
    return r;
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  const mpq_class& raw() const { return v_; }
  const mpz_class numerator() const { return v_.get_num(); }
  const mpz_class denominator() const { return v_.get_den(); }

  std::string to_string() const { return v_.get_str(); }

  // Exact integer log2 if the value equals 2^m for some integer m (possibly
  // negative); used by the homogeneity-weight probe.
  bool is_power_of_two(long* m) const {
    if (sign() <= 0) return false;
    const mpz_class num = v_.get_num(), den = v_.get_den();
    auto pow2_exp = [](const mpz_class& z, long* e) {
      if (z == 1) { *e = 0; return true; }
      const mp_bitcnt_t low = mpz_scan1(z.get_mpz_t(), 0);
      mpz_class shifted = z >> low;
      if (shifted != 1) return false;
      *e = static_cast<long>(low);
      return true;
    };
    long en = 0, ed = 0;
    if (!pow2_exp(num, &en) || !pow2_exp(den, &ed)) return false;
    *m = en - ed;
    return true;
  }

  // gcd of |a|, |b| interpreted over the rationals: gcd(a,b) such that both
  // a/g and b/g are integers with gcd 1 (g = gcd(num)/lcm(den)).
  static Rational content_gcd(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    mpz_class gn, lden;
    mpz_gcd(gn.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
    mpz_lcm(lden.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
    return Rational(mpq_class(gn, lden));
  }

 private:
  mpq_class v_;
};

inline Rational factorial(long n) {
  Rational r(1);
  for (long i = 2; i <= n; ++i) r *= Rational(i);
  return r;
}

inline Rational double_factorial_odd(long n) {  // n odd: n!! = n(n-2)...1
  Rational r(1);
  for (long i = n; i >= 1; i -= 2) r *= Rational(i);
  return r;
}

inline Rational binomial(long n, long k) {
  if (k < 0 || k > n) return Rational(0);
  Rational r(1);
  for (long i = 0; i < k; ++i) r *= Rational(n - i, i + 1);
  return r;
}

// Bernoulli numbers, B(1) = -1/2 convention.
inline Rational bernoulli(long n) {
  static std::vector<Rational> cache{Rational(1)};
  while (static_cast<long>(cache.size()) <= n) {
    long m = static_cast<long>(cache.size());
    Rational acc(0);
    for (long j = 0; j < m; ++j) acc += binomial(m + 1, j) * cache[j];
    cache.push_back(-acc / Rational(m + 1));
  }
  return cache[n];
}

}  // namespace hodgetau
