#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "hodgetau/curve.hpp"
#include "hodgetau/operator_algebra.hpp"
#include "hodgetau/tpoly.hpp"

namespace hodgetau {

// Dressed Heisenberg and Virasoro modes attached to a curve. All
// coefficient tables here are taken in the base frame f (not the
// recursion frames ft / f1): rho[k,m] = [z^m] f^k, sigma[k,m] =
// [z^{m+1}] f^{k+1}/f', chi_a[k,m] = [z^m] f^{k+2} y_a with y_0 = 1/z
// and y_1 the second branch coordinate.
//
// The dressed modes split into a level-preserving part A and a
// level-lowering part B (the 1/hbar piece):
//   J_k^{qp}   = A_J(k),
//   L_k^{a,qp} = A_L(a,k) + (1/hbar) B_L(a,k),
// with
//   A_J(k) P = 1/2 sum_m rho[2k,m] J_m P,
//   A_L(a,k) P = 1/2 sum_m sigma[2k,m] L_m P
//                + (delta_{k,0}/16 - delta_{k,-1} cconst) P,
//   B_L(a,k) P = -1/2 sum_{m >= 2k+1+2a} chi_a[2k,m] J_m P,
//   cconst = (p^2+pq+q^2) / (48(p+q)).
// B_L only ever contains positive (derivative) modes, so it lowers the
// hbar level by exactly one.
template <class K>
class ConstraintFrame {
 public:
  explicit ConstraintFrame(const Curve<K>& c)
      : tab_(c.f),
        y0_(Laurent<K>::monomial(K(1), -1)),
        y1_(c.y1),
        cconst_((c.p * c.p + c.p * c.q + c.q * c.q) /
                (K(48) * (c.p + c.q))) {}

  const K& cconst() const { return cconst_; }

  K chi(int alpha, long k2, long m) { return chi_series(alpha, k2).coeff(m); }

  // Level-preserving part of the dressed current J_k^{qp}.
  TPoly<K> a_j(long k, const TPoly<K>& P) {
    TPoly<K> r;
    if (P.is_zero()) return r;
    const long wcap = P.weight();
    for (long m = 2 * k; m <= wcap || m < 1; ++m) {
      if (m == 0) continue;
      const K c = tab_.rho(2 * k, m);
      if (c.is_zero()) continue;
      r += apply_j(static_cast<int>(m), P).scaled(c);
    }
    return r.scaled(kfrac<K>(1, 2));
  }

  // Level-preserving part of the dressed Virasoro mode L_k^{a,qp}.
  TPoly<K> a_l(int alpha, long k, const TPoly<K>& P) {
    if (k < -alpha)
      throw std::domain_error("a_l: mode index below -alpha is not dressed");
    TPoly<K> r;
    if (P.is_zero()) return r;
    const long wcap = P.weight();
    for (long m = 2 * k; m <= wcap || m < 1; ++m) {
      const K c = tab_.sigma(2 * k, m);
      if (c.is_zero()) continue;
      r += apply_l(static_cast<int>(m), P).scaled(c);
    }
    r = r.scaled(kfrac<K>(1, 2));
    if (k == 0) r += P.scaled(kfrac<K>(1, 16));
    if (k == -1) r += P.scaled(-cconst_);
    return r;
  }

  // Level-lowering part of the dressed Virasoro mode.
  TPoly<K> b_l(int alpha, long k, const TPoly<K>& P) {
    if (alpha != 0 && alpha != 1)
      throw std::domain_error("b_l: flavor must be 0 or 1");
    TPoly<K> r;
    if (P.is_zero()) return r;
    const long wcap = P.weight();
    long m0 = 2 * k + 1 + 2 * alpha;
    if (m0 < 1) m0 = 1;
    for (long m = m0; m <= wcap; ++m) {
      const K c = chi_series(alpha, 2 * k).coeff(m);
      if (c.is_zero()) continue;
      r += apply_j(static_cast<int>(m), P).scaled(c);
    }
    return r.scaled(kfrac<K>(-1, 2));
  }

 private:
  const Laurent<K>& chi_series(int alpha, long k2) {
    auto key = std::make_pair(alpha, k2);
    auto it = chi_.find(key);
    if (it != chi_.end()) return it->second;
    Laurent<K> v = tab_.power(k2 + 2) * (alpha == 0 ? y0_ : y1_);
    return chi_.emplace(key, std::move(v)).first->second;
  }

  SeriesTables<K> tab_;
  Laurent<K> y0_, y1_;
  K cconst_;
  std::map<std::pair<int, long>, Laurent<K>> chi_;
};

// What the dressed current J_k^{qp} leaves of the tau series at one hbar
// level; identically zero for k >= 1 when tau satisfies the constraints.
template <class K>
TPoly<K> heisenberg_out(ConstraintFrame<K>& fr, long k, const GradedSeries<K>& tau,
                        int lv) {
  return fr.a_j(k, tau.level(lv));
}

// Same for the dressed Virasoro mode L_k^{a,qp}: the level-lowering part
// consumes one more hbar, so level lv of the constraint couples tau
// levels lv and lv+1. Zero for all k >= -alpha on a constrained tau.
template <class K>
TPoly<K> virasoro_out(ConstraintFrame<K>& fr, int alpha, long k,
                      const GradedSeries<K>& tau, int lv) {
  return fr.a_l(alpha, k, tau.level(lv)) + fr.b_l(alpha, k, tau.level(lv + 1));
}

}  // namespace hodgetau
