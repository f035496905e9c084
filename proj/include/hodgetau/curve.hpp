#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hodgetau/field.hpp"
#include "hodgetau/laurent.hpp"

namespace hodgetau {

// Series frame attached to one (p, s) parameter point. q = s^2 - p is kept
// implicit so that sqrt(p+q) = s holds exactly in K and no algebraic
// extension is ever needed. Every member series is truncated to the same
// window T: coefficients of z^n are valid for n < T.
template <class K>
struct Curve {
  K p, s, q;
  int T = 0;

  Laurent<K> xp;  // x'(z) = z / ((1+s z)(1+q z/s))
  Laurent<K> x;   // antiderivative of xp, = z^2/2 + ...
  Laurent<K> f;   // z sqrt(2 x / z^2), so that x = f^2/2
  Laurent<K> h;   // compositional inverse of f
  Laurent<K> y1;  // antiderivative of x'/z
  Laurent<K> Y;   // odd part of y1(h(z))
  Laurent<K> ht;  // exponential change of frame, ht = z + ...
  Laurent<K> ft;  // compositional inverse of ht; recursion frame, flavor 0
  Laurent<K> f1;  // recursion frame, flavor 1: f1^3/3 = int_0^z ft dx
};

template <class K>
Curve<K> build_curve(const K& p, const K& s, int T) {
  if (T < 8) T = 8;
  Curve<K> c;
  c.p = p;
  c.s = s;
  c.q = s * s - p;
  c.T = T;
  if (c.p.is_zero() || c.q.is_zero() || s.is_zero())
    throw std::domain_error("build_curve: p, q = s^2-p and s must all be nonzero");

  // Internal slack: inversions and compositions below shave a few
  // coefficients off the window, so build wide and cut back to T at the end.
  const long long Ti = T + 8;
  const auto z = Laurent<K>::z();

  // (1+s z)(1+q z/s) = 1 + (s + q/s) z + q z^2
  const auto den =
      Laurent<K>::from_coeffs(0, {K(1), s + c.q / s, c.q}, Laurent<K>::kExact);
  c.xp = z * den.truncate(Ti).inv();
  c.x = c.xp.antiderivative();
  c.f = z * c.x.scaled(K(2)).shifted(-2).sqrt_unit();
  c.h = c.f.revert(Ti);
  c.y1 = c.xp.shifted(-1).antiderivative();
  const auto yh = compose(c.y1, c.h);
  c.Y = (yh - yh.scale_arg(K(-1))).scaled(kfrac<K>(1, 2));

  // ht = (1/s) A/B - 1/s with A = (e^{2qz/s}-1)/q and B = (1-e^{-2pz/s})/p,
  // both encoded coefficient-wise so p and q stay polynomial:
  //   [z^j] A = (2/s)^j q^{j-1}/j!,   [z^j] B = (2/s)^j (-p)^{j-1}/j!.
  {
    std::vector<K> ac, bc;
    const K two_over_s = kof<K>(Rational(2)) / s;
    K t = K(1), qpw = K(1), ppw = K(1);
    for (long long j = 1; j < Ti; ++j) {
      t = t * two_over_s / kof<K>(Rational(j));
      if (j > 1) {
        qpw = qpw * c.q;
        ppw = ppw * (-p);
      }
      ac.push_back(t * qpw);
      bc.push_back(t * ppw);
    }
    const auto A = Laurent<K>::from_coeffs(1, std::move(ac), Ti);
    const auto B = Laurent<K>::from_coeffs(1, std::move(bc), Ti);
    c.ht = (A * B.inv()).scaled(K(1) / s) - Laurent<K>::monomial(K(1) / s, 0);
  }
  if (c.ht.ord() != 1 || !(c.ht.coeff(1) == K(1)))
    throw std::logic_error("build_curve: frame change is not tangent to the identity");
  c.ft = c.ht.revert(Ti - 1);

  // f1^3/3 = int_0^z ft dx
  const auto f1cubed_over_3 = (c.ft * c.xp).antiderivative();
  c.f1 = z * f1cubed_over_3.scaled(K(3)).shifted(-3).unit_pow(Rational(1, 3));

  c.xp = c.xp.truncate(T);
  c.x = c.x.truncate(T);
  c.f = c.f.truncate(T);
  c.h = c.h.truncate(T);
  c.y1 = c.y1.truncate(T);
  c.Y = c.Y.truncate(T);
  c.ht = c.ht.truncate(T);
  c.ft = c.ft.truncate(T);
  c.f1 = c.f1.truncate(T);
  return c;
}

// Independent construction of the flavor-1 frame relative to the ft frame:
//   fb1^3/3 = sum_{k>=1} 4^k B_{2k}/(2k+1)!
//             * ((p+q)^{2k+1} - p^{2k+1} - q^{2k+1}) / (p q (p+q)^k) z^{2k+1}
// with B_{2k} the Bernoulli numbers, so that f1 = fb1 o ft.
template <class K>
Laurent<K> fb1_bernoulli(const K& p, const K& s, int T) {
  if (T < 6) T = 6;
  const K q = s * s - p;
  const K s2 = s * s;  // = p + q
  if (p.is_zero() || q.is_zero())
    throw std::domain_error("fb1_bernoulli: needs p q != 0");
  std::vector<K> w3(static_cast<size_t>(T), K(0));
  K ppw = p, qpw = q, s2num = s2, s2den = K(1);
  for (long k = 1; 2 * k + 1 < T; ++k) {
    ppw = ppw * p * p;        // p^{2k+1}
    qpw = qpw * q * q;        // q^{2k+1}
    s2num = s2num * s2 * s2;  // (p+q)^{2k+1}
    s2den = s2den * s2;       // (p+q)^k
    const Rational rk =
        Rational(4).pow(k) * bernoulli(2 * k) / factorial(2 * k + 1);
    w3[static_cast<size_t>(2 * k + 1)] =
        kof<K>(rk) * (s2num - ppw - qpw) / (p * q * s2den);
  }
  const auto cube3 = Laurent<K>::from_coeffs(0, std::move(w3), T);
  return Laurent<K>::z() * cube3.scaled(K(3)).shifted(-3).unit_pow(Rational(1, 3));
}

// Frame series of the diagonal factorization: flavor 0 gives Y itself,
// flavor 1 obeys fd1^3/3 = int_0^z Y(eta) eta deta.
template <class K>
Laurent<K> f_delta(int alpha, const Curve<K>& c) {
  if (alpha == 0) return c.Y;
  if (alpha != 1) throw std::domain_error("f_delta: flavor must be 0 or 1");
  const auto cube3 = (c.Y * Laurent<K>::z()).antiderivative();
  return Laurent<K>::z() * cube3.scaled(K(3)).shifted(-3).unit_pow(Rational(1, 3));
}

// Odd shift coefficients: sum_j v_j z^j = int_0^z (f^{2a-1} - y_a) dx.
// For flavor 0 the integral collapses to f - y1 exactly (dx = f df), and
// flavor 1 is the once-more-integrated version int v0 dx.
template <class K>
Laurent<K> v_series(int alpha, const Curve<K>& c) {
  const auto v0 = c.f - c.y1;
  if (alpha == 0) return v0;
  if (alpha != 1) throw std::domain_error("v_series: flavor must be 0 or 1");
  return (v0 * c.xp).antiderivative().truncate(c.T);
}

// The same coefficients after moving the shift past the frame change:
//   vtilde(z) = int_0^z (eta^{2a} - eta y_a(h(eta))) deta,
// which equals v(h(z)) as a series identity.
template <class K>
Laurent<K> vtilde_series(int alpha, const Curve<K>& c) {
  Laurent<K> integrand;
  if (alpha == 0) {
    integrand = Laurent<K>::one() - Laurent<K>::z() * c.h.inv();
  } else if (alpha == 1) {
    integrand = Laurent<K>::monomial(K(1), 2) - Laurent<K>::z() * compose(c.y1, c.h);
  } else {
    throw std::domain_error("vtilde_series: flavor must be 0 or 1");
  }
  return integrand.antiderivative();
}

// Exponential identity tying x to y1:
//   p e^{-q x(z)} = (p+q) e^{(q/s) y1(z)} - q e^{s y1(z)}.
template <class K>
bool exp_relation_holds(const Curve<K>& c, long long order) {
  const auto lhs = c.x.scaled(-c.q).exp().scaled(c.p);
  const auto rhs = c.y1.scaled(c.q / c.s).exp().scaled(c.p + c.q) -
                   c.y1.scaled(c.s).exp().scaled(c.q);
  return agree_to(lhs, rhs, order);
}

// Coefficient tables of the integer powers of a frame series g (order 1,
// invertible leading coefficient), plus the companion series g^{k+1}/g'.
// Powers are cached; reads beyond the available window throw, so a short
// frame series surfaces as an error instead of a silently wrong sum.
template <class K>
class SeriesTables {
 public:
  explicit SeriesTables(Laurent<K> g) : g_(std::move(g)) {
    if (g_.ord() != 1)
      throw std::invalid_argument("SeriesTables: frame series must have order 1");
    gpinv_ = g_.derivative().inv();
    pow_.emplace(0, Laurent<K>::one());
    pow_.emplace(1, g_);
    pow_.emplace(-1, g_.inv());
  }

  static SeriesTables identity() { return SeriesTables(Laurent<K>::z()); }

  const Laurent<K>& frame() const { return g_; }

  const Laurent<K>& power(long k) {
    auto it = pow_.find(k);
    if (it != pow_.end()) return it->second;
    const Laurent<K>& closer = power(k > 0 ? k - 1 : k + 1);
    const Laurent<K>& step = pow_.at(k > 0 ? 1 : -1);
    return pow_.emplace(k, closer * step).first->second;
  }

  const Laurent<K>& sigma_series(long k) {
    auto it = sig_.find(k);
    if (it != sig_.end()) return it->second;
    Laurent<K> v = power(k + 1) * gpinv_;
    return sig_.emplace(k, std::move(v)).first->second;
  }

  // rho[k,m] = [z^m] g^k
  K rho(long k, long m) { return power(k).coeff(m); }
  // sigma[k,m] = [z^{m+1}] g^{k+1}/g'
  K sigma(long k, long m) { return sigma_series(k).coeff(m + 1); }

 private:
  Laurent<K> g_, gpinv_;
  std::map<long, Laurent<K>> pow_;
  std::map<long, Laurent<K>> sig_;
};

}  // namespace hodgetau
