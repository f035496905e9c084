#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "hodgetau/field.hpp"
#include "hodgetau/rational.hpp"

namespace hodgetau {

// Truncated Laurent series over a field K.
//
// A value represents exact knowledge of every coefficient of z^n for
// n < trunc(): coefficients below lo() are zero, coefficients in
// [lo(), trunc()) are stored, and reading at or beyond trunc() throws.
// trunc() == kExact marks an exact Laurent polynomial (everything known).
// Every operation propagates the largest window it can justify, so a
// coefficient that comes out of this class is correct, never an artifact
// of silent truncation.
template <class K>
class Laurent {
 public:
  static constexpr long long kExact = 1LL << 46;

  Laurent() : lo_(0), trunc_(kExact) {}

  static Laurent zero_to(long long t) {
    Laurent r;
    if (t == kExact) return r;
    r.lo_ = static_cast<int>(std::min<long long>(t, 0));
    r.trunc_ = t;
    r.c_.assign(static_cast<size_t>(t - r.lo_), K(0));
    r.normalize();
    return r;
  }

  static Laurent monomial(const K& c, int n) {
    Laurent r;
    r.lo_ = n;
    r.c_ = {c};
    r.normalize();
    return r;
  }

  static Laurent z() { return monomial(K(1), 1); }
  static Laurent one() { return monomial(K(1), 0); }

  static Laurent from_coeffs(int lo, std::vector<K> coeffs, long long trunc) {
    Laurent r;
    r.lo_ = lo;
    r.c_ = std::move(coeffs);
    r.trunc_ = trunc;
    if (trunc != kExact && static_cast<long long>(r.c_.size()) != trunc - lo)
      throw std::logic_error("Laurent: coefficient count does not match window");
    r.normalize();
    return r;
  }

  int lo() const { return lo_; }
  long long trunc() const { return trunc_; }
  bool is_exact() const { return trunc_ == kExact; }
  // One past the highest stored exponent (== trunc() for finite windows).
  long long stored_hi() const { return lo_ + static_cast<long long>(c_.size()); }

  // Coefficient of z^n. Throws if n is beyond the known window.
  const K& coeff(long long n) const {
    if (n >= trunc_)
      throw std::out_of_range("Laurent: coefficient z^" + std::to_string(n) +
                              " beyond window " + std::to_string(trunc_));
    if (n < lo_ || n >= lo_ + static_cast<long long>(c_.size())) return kzero_;
    return c_[static_cast<size_t>(n - lo_)];
  }

  // True when every known coefficient vanishes.
  bool is_zero() const {
    for (const auto& c : c_)
      if (!c.is_zero()) return false;
    return true;
  }

  // Lowest exponent with a nonzero known coefficient; trunc() if none.
  long long ord() const {
    for (size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return lo_ + static_cast<long long>(i);
    return trunc_;
  }

  void require_window(long long t) const {
    if (trunc_ < t)
      throw std::out_of_range("Laurent: window " + std::to_string(trunc_) +
                              " shorter than required " + std::to_string(t));
  }

  Laurent truncate(long long t) const {
    if (t >= trunc_) return *this;
    Laurent r;
    r.lo_ = lo_;
    r.trunc_ = t;
    const long long n = std::max<long long>(0, std::min<long long>(
        t - lo_, static_cast<long long>(c_.size())));
    r.c_.assign(c_.begin(), c_.begin() + static_cast<size_t>(n));
    if (t != kExact) r.c_.resize(static_cast<size_t>(std::max<long long>(0, t - lo_)), K(0));
    r.normalize();
    return r;
  }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r;
    r.trunc_ = std::min(a.trunc_, b.trunc_);
    r.lo_ = std::min(a.lo_, b.lo_);
    long long hi = r.trunc_;
    if (hi == kExact)
      hi = std::max(a.lo_ + static_cast<long long>(a.c_.size()),
                    b.lo_ + static_cast<long long>(b.c_.size()));
    if (hi < r.lo_) hi = r.lo_;
    r.c_.assign(static_cast<size_t>(hi - r.lo_), K(0));
    a.accumulate_into(r, hi);
    b.accumulate_into(r, hi);
    r.normalize();
    return r;
  }

  friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    // Unknown tails enter the product at (trunc of one) + (order of the
    // other), so that is all the window the result can claim.
    const long long oa = a.ord(), ob = b.ord();
    if ((a.is_zero() && a.is_exact()) || (b.is_zero() && b.is_exact())) {
      Laurent r;
      r.trunc_ = kExact;
      return r;
    }
    Laurent r;
    r.trunc_ = std::min(tadd(a.trunc_, ob), tadd(b.trunc_, oa));
    if (a.is_zero() || b.is_zero()) {
      return zero_to(r.trunc_);
    }
    r.lo_ = static_cast<int>(oa + ob);
    long long hi = r.trunc_;
    if (hi == kExact) {
      hi = (a.lo_ + static_cast<long long>(a.c_.size())) +
           (b.lo_ + static_cast<long long>(b.c_.size())) - 1;
    }
    r.c_.assign(static_cast<size_t>(std::max<long long>(0, hi - r.lo_)), K(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      const long long na = a.lo_ + static_cast<long long>(i);
      for (size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j].is_zero()) continue;
        const long long n = na + b.lo_ + static_cast<long long>(j);
        if (n >= hi) break;
        if (n >= r.lo_) r.c_[static_cast<size_t>(n - r.lo_)] += a.c_[i] * b.c_[j];
      }
    }
    r.normalize();
    return r;
  }

  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  Laurent scaled(const K& c) const {
    Laurent r = *this;
    for (auto& x : r.c_) x = x * c;
    r.normalize();
    return r;
  }

  // Multiply by z^k.
  Laurent shifted(int k) const {
    Laurent r = *this;
    r.lo_ += k;
    if (r.trunc_ != kExact) r.trunc_ += k;
    return r;
  }

  // Substitute z -> c*z.
  Laurent scale_arg(const K& c) const {
    Laurent r = *this;
    for (size_t i = 0; i < r.c_.size(); ++i) {
      const long long n = r.lo_ + static_cast<long long>(i);
      r.c_[i] = r.c_[i] * pow_of(c, n);
    }
    r.normalize();
    return r;
  }

  Laurent derivative() const {
    Laurent r;
    r.lo_ = lo_ - 1;
    r.trunc_ = tadd(trunc_, -1);
    r.c_.resize(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
      const long long n = lo_ + static_cast<long long>(i);
      r.c_[i] = c_[i] * kof<K>(Rational(n));
    }
    r.normalize();
    return r;
  }

  // Term-by-term antiderivative with zero constant term. The z^-1
  // coefficient must be known and zero.
  Laurent antiderivative() const {
    if (trunc_ <= -1)
      throw std::out_of_range("Laurent: z^-1 coefficient unknown, cannot integrate");
    if (!coeff(-1).is_zero())
      throw std::domain_error("Laurent: nonzero z^-1 coefficient obstructs integration");
    Laurent r;
    r.lo_ = lo_ + 1;
    r.trunc_ = tadd(trunc_, 1);
    r.c_.resize(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
      const long long n = lo_ + static_cast<long long>(i);
      r.c_[i] = n == -1 ? K(0) : c_[i] * kof<K>(Rational(1, n + 1));
    }
    r.normalize();
    return r;
  }

  // Multiplicative inverse. An exact input must be a monomial; anything
  // longer has an infinite inverse and needs truncate() first.
  Laurent inv() const {
    const long long m = ord();
    if (m >= trunc_) throw std::domain_error("Laurent: inverse of (window-)zero series");
    if (is_exact()) {
      bool mono = true;
      for (long long n = m + 1; n < lo_ + static_cast<long long>(c_.size()); ++n)
        if (!coeff(n).is_zero()) mono = false;
      if (mono) return monomial(coeff(m).inv(), static_cast<int>(-m));
      throw std::logic_error("Laurent: inverse of an exact non-monomial is infinite; truncate first");
    }
    const long long rel = trunc_ - m;  // relative window of the unit part
    const K a = coeff(m);
    const K ainv = a.inv();
    std::vector<K> u(static_cast<size_t>(rel));  // coeffs of 1 + u
    for (long long j = 0; j < rel; ++j) u[static_cast<size_t>(j)] = coeff(m + j) * ainv;
    std::vector<K> b(static_cast<size_t>(rel));
    b[0] = K(1);
    for (long long n = 1; n < rel; ++n) {
      K acc(0);
      for (long long j = 1; j <= n; ++j)
        acc += u[static_cast<size_t>(j)] * b[static_cast<size_t>(n - j)];
      b[static_cast<size_t>(n)] = -acc;
    }
    // 1/F = a^-1 z^-m (1+u)^-1, known for exponents < trunc - 2m.
    Laurent r;
    r.lo_ = static_cast<int>(-m);
    r.trunc_ = trunc_ - 2 * m;
    const long long len = r.trunc_ - r.lo_;
    r.c_.resize(static_cast<size_t>(std::max<long long>(0, len)));
    for (size_t i = 0; i < r.c_.size() && i < b.size(); ++i) r.c_[i] = ainv * b[i];
    r.normalize();
    return r;
  }

  Laurent pow(long e) const {
    if (e < 0) return inv().pow(-e);
    if (e == 0) return one();
    Laurent acc = one(), base = *this;
    unsigned long u = static_cast<unsigned long>(e);
    while (u > 0) {
      if (u & 1) acc = acc * base;
      base = u > 1 ? base * base : base;
      u >>= 1;
    }
    return acc;
  }

  // F^a for rational a, for F = 1 + O(z).
  Laurent unit_pow(const Rational& a) const {
    if (lo_ > 0 || ord() != 0 || !(coeff(0) == K(1)))
      throw std::domain_error("Laurent: unit_pow needs constant term exactly 1");
    check_no_negative("unit_pow");
    if (is_exact() && a.is_integer())
      return pow(static_cast<long>(a.numerator().get_si()));
    if (is_exact())
      throw std::logic_error("Laurent: fractional power of exact series is infinite; truncate first");
    // From G'F = a F'G: n*G_n = sum_{j=1}^{n} ((a+1)j - n) f_j G_{n-j}.
    const long long t = trunc_;
    std::vector<K> g(static_cast<size_t>(t));
    g[0] = K(1);
    for (long long n = 1; n < t; ++n) {
      K acc(0);
      for (long long j = 1; j <= n; ++j) {
        const Rational w = (a + 1) * Rational(j) - Rational(n);
        if (w.is_zero()) continue;
        acc += kof<K>(w) * coeff(j) * g[static_cast<size_t>(n - j)];
      }
      g[static_cast<size_t>(n)] = kof<K>(Rational(1, n)) * acc;
    }
    return from_coeffs(0, std::move(g), t);
  }

  Laurent sqrt_unit() const { return unit_pow(Rational(1, 2)); }

  // exp(F) for F = O(z).
  Laurent exp() const {
    require_order_at_least_one("exp");
    if (is_exact())
      throw std::logic_error("Laurent: exp of exact series is infinite; truncate first");
    const long long t = trunc_;
    std::vector<K> e(static_cast<size_t>(std::max<long long>(0, t)));
    if (t > 0) e[0] = K(1);
    for (long long n = 1; n < t; ++n) {
      K acc(0);
      for (long long j = 1; j <= n; ++j)
        acc += kof<K>(Rational(j)) * coeff(j) * e[static_cast<size_t>(n - j)];
      e[static_cast<size_t>(n)] = kof<K>(Rational(1, n)) * acc;
    }
    return from_coeffs(0, std::move(e), t);
  }

  // log(1 + F) for F = O(z).
  Laurent log1p() const {
    require_order_at_least_one("log1p");
    if (is_exact())
      throw std::logic_error("Laurent: log of exact series is infinite; truncate first");
    const long long t = trunc_;
    std::vector<K> l(static_cast<size_t>(std::max<long long>(0, t)));
    for (long long n = 1; n < t; ++n) {
      K acc(0);
      for (long long j = 1; j < n; ++j)
        acc += kof<K>(Rational(n - j)) * coeff(j) * l[static_cast<size_t>(n - j)];
      l[static_cast<size_t>(n)] = coeff(n) - kof<K>(Rational(1, n)) * acc;
    }
    return from_coeffs(0, std::move(l), t);
  }

  // arctanh(F) for F = O(z).
  Laurent arctanh() const {
    require_order_at_least_one("arctanh");
    if (is_exact())
      throw std::logic_error("Laurent: arctanh of exact series is infinite; truncate first");
    const Laurent den = (one() - *this * *this).truncate(trunc_ + 1);
    return (derivative() * den.inv()).antiderivative().truncate(trunc_);
  }

  // F(G) for G of positive order. Negative exponents of F are fed through
  // the inverse of G.
  friend Laurent compose(const Laurent& f, const Laurent& g) {
    const long long m = g.ord();
    if (m < 1 || m >= g.trunc_)
      throw std::domain_error("Laurent: composition needs a series of positive order");
    const long long of = f.ord();
    if (of >= f.trunc_) {
      // f is zero as far as known: so is f(g), with the same confidence.
      return zero_to(f.is_exact() ? kExact : m * f.trunc_);
    }
    // Unknown tail of f enters at m*trunc(f); unknown tail of g enters
    // through f'(g) and later terms at m*(ord(f)-1) + trunc(g).
    long long t = kExact;
    if (!f.is_exact()) t = std::min(t, m * f.trunc_);
    if (!g.is_exact()) t = std::min(t, m * (of - 1) + g.trunc_);
    if (t == kExact && of < 0)
      throw std::logic_error("Laurent: composing negative powers of an exact series; truncate first");
    const Laurent guse = t == kExact ? g : g.truncate(t - m * (of - 1));
    Laurent acc = t == kExact ? Laurent() : zero_to(t);
    const long long hi_f = f.lo_ + static_cast<long long>(f.c_.size());
    // Nonnegative exponents of f.
    {
      Laurent gp = one();
      for (long long k = 0; k < hi_f; ++k) {
        if (k > 0) gp = gp * guse;
        if (t != kExact && k * m >= t) break;
        if (k < f.lo_) continue;
        const K& c = f.coeff(k);
        if (!c.is_zero()) acc += gp.scaled(c);
      }
    }
    // Negative exponents of f.
    if (f.lo_ < 0) {
      const Laurent gi = (t == kExact ? guse.truncate(2 - m * (f.lo_ - 1)) : guse).inv();
      Laurent gp = gi;
      for (long long k = -1; k >= f.lo_; --k) {
        if (k < -1) gp = gp * gi;
        const K& c = f.coeff(k);
        if (!c.is_zero()) acc += gp.scaled(c);
      }
    }
    return acc.truncate(t);
  }

  // Compositional inverse of F = f1*z + O(z^2), f1 invertible, computed on
  // the window [1, min(trunc, t)) by Newton iteration and verified by
  // back-substitution before being returned.
  Laurent revert(long long t) const {
    const long long tt = std::min(trunc_, t);
    if (tt < 2) throw std::out_of_range("Laurent: revert needs window of at least 2");
    if (ord() != 1) throw std::domain_error("Laurent: revert needs a series of order 1");
    const Laurent f = truncate(tt);
    const Laurent fd = f.derivative();
    Laurent g = monomial(coeff(1).inv(), 1) + zero_to(tt);
    for (int iter = 0; iter < 64; ++iter) {
      const Laurent err = compose(f, g) - Laurent::z().truncate(tt);
      if (err.is_zero()) return g;
      g = (g - err * compose(fd, g).inv()).truncate(tt);
    }
    throw std::logic_error("Laurent: revert did not converge");
  }

  // Equality of every coefficient below min(trunc, trunc, t).
  friend bool agree_to(const Laurent& a, const Laurent& b, long long t) {
    a.require_window(t);
    b.require_window(t);
    const Laurent d = (a - b).truncate(t);
    return d.is_zero();
  }

  std::string to_string() const {
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      const long long n = lo_ + static_cast<long long>(i);
      if (!out.empty()) out += " + ";
      out += "(" + field_ops<K>::str(c_[i]) + ")";
      if (n != 0) out += "*z^" + std::to_string(n);
    }
    if (out.empty()) out = "0";
    if (!is_exact()) out += " + O(z^" + std::to_string(trunc_) + ")";
    return out;
  }

 private:
  static long long tadd(long long t, long long d) { return t == kExact ? kExact : t + d; }

  static K pow_of(const K& c, long long n) {
    if (n >= 0) return c.pow(static_cast<long>(n));
    return c.inv().pow(static_cast<long>(-n));
  }

  void check_no_negative(const char* what) const {
    if (ord() < 0)
      throw std::domain_error(std::string("Laurent: ") + what + " needs no negative exponents");
  }

  void require_order_at_least_one(const char* what) const {
    check_no_negative(what);
    if (trunc_ > 0 && !coeff(0).is_zero())
      throw std::domain_error(std::string("Laurent: ") + what + " needs vanishing constant term");
  }

  void accumulate_into(Laurent& r, long long hi) const {
    for (size_t i = 0; i < c_.size(); ++i) {
      const long long n = lo_ + static_cast<long long>(i);
      if (n >= hi) break;
      if (n >= r.lo_) r.c_[static_cast<size_t>(n - r.lo_)] += c_[i];
    }
  }

  // Strip known-zero coefficients at the front (and at the back for exact
  // values), keeping c_.size() == trunc - lo for finite windows.
  void normalize() {
    size_t drop = 0;
    while (drop < c_.size() && c_[drop].is_zero()) ++drop;
    if (drop > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<long>(drop));
      lo_ += static_cast<int>(drop);
    }
    if (trunc_ == kExact) {
      while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
      if (c_.empty()) lo_ = 0;
    } else {
      if (lo_ > trunc_) lo_ = static_cast<int>(trunc_);
      c_.resize(static_cast<size_t>(trunc_ - lo_), K(0));
    }
  }

  int lo_;
  long long trunc_;
  std::vector<K> c_;
  inline static const K kzero_ = K(0);
};

template <class K2, class K, class Fn>
Laurent<K2> map_coeffs(const Laurent<K>& f, Fn fn) {
  std::vector<K2> c;
  c.reserve(static_cast<size_t>(f.stored_hi() - f.lo()));
  for (long long n = f.lo(); n < f.stored_hi(); ++n) c.push_back(fn(f.coeff(n)));
  return Laurent<K2>::from_coeffs(f.lo(), std::move(c),
                                  f.is_exact() ? Laurent<K2>::kExact : f.trunc());
}

// e^{V d/dz} applied to z, on the window [0, t): the unique series
// Phi = z + ... with Phi = sum u_n / n!, u_0 = z, u_{n+1} = V * u_n'.
// V must have order >= 2 and window at least t.
template <class K>
Laurent<K> flow_exp_field(const Laurent<K>& V, long long t) {
  if (!V.is_zero() && V.ord() < 2)
    throw std::domain_error("flow_exp_field: generator must vanish to second order");
  if (!V.is_exact()) V.require_window(t);
  Laurent<K> u = Laurent<K>::z().truncate(t);
  Laurent<K> acc = u;
  Rational nfact(1);
  for (long long n = 1;; ++n) {
    u = (V * u.derivative()).truncate(t);
    if (u.is_zero()) break;
    nfact *= Rational(n);
    acc += u.scaled(kof<K>(nfact.inv()));
    if (u.ord() + 1 >= t) break;
  }
  return acc.truncate(t);
}

// Coefficients a_1..a_kmax of the generator V = sum a_k z^{k+1} whose flow
// reproduces f through order kmax+1. Solved order by order: with a_1..a_{k-1}
// fixed, a_k enters Phi linearly at z^{k+1}.
template <class K>
std::vector<K> field_coeffs_from_flow(const Laurent<K>& f, int kmax) {
  f.require_window(kmax + 2);
  std::vector<K> a;
  Laurent<K> V;  // exact polynomial, grown term by term
  for (int k = 1; k <= kmax; ++k) {
    const Laurent<K> phi = flow_exp_field(V.is_zero() ? Laurent<K>::zero_to(k + 2) : V.truncate(k + 2),
                                          k + 2);
    const K ak = (f.truncate(k + 2) - phi).coeff(k + 1);
    a.push_back(ak);
    V += Laurent<K>::monomial(ak, k + 2 - 1);
  }
  return a;
}

}  // namespace hodgetau
