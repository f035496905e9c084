#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hodgetau/curve.hpp"
#include "hodgetau/operator_algebra.hpp"
#include "hodgetau/tpoly.hpp"

namespace hodgetau {

// Conjugated current mode: sum_{m=k}^{M} rho[k,m] J_m P, with J_0 = 0.
// J_m P vanishes for m >= 1 once m exceeds the weight of P, so the loop
// stops there; table reads past the stored window throw, which keeps an
// undersized frame window from silently truncating the sum.
template <class K>
TPoly<K> conjugated_j(SeriesTables<K>& tab, long k, long M, const TPoly<K>& P) {
  TPoly<K> r;
  if (P.is_zero()) return r;
  const long wcap = P.weight();
  for (long m = k; m <= M; ++m) {
    if (m == 0) continue;
    if (m >= 1 && m > wcap) break;
    const K c = tab.rho(k, m);
    if (c.is_zero()) continue;
    r += apply_j(static_cast<int>(m), P).scaled(c);
  }
  return r;
}

// Conjugated Virasoro mode: sum_{m=k}^{M} sigma[k,m] L_m P, plus an
// optional constant. The constant belongs to the k = -2 mode only: it is
// the central shift produced by the frame change, so passing it is an
// error elsewhere and callers that never reach k = -2 pass std::nullopt.
template <class K>
TPoly<K> conjugated_l(SeriesTables<K>& tab, long k, long M, const TPoly<K>& P,
                      const std::optional<K>& cconst) {
  TPoly<K> r;
  if (P.is_zero()) return r;
  const long wcap = P.weight();
  for (long m = k; m <= M; ++m) {
    if (m >= 1 && m > wcap) break;
    const K c = tab.sigma(k, m);
    if (c.is_zero()) continue;
    r += apply_l(static_cast<int>(m), P).scaled(c);
  }
  if (k == -2 && cconst) r += P.scaled(*cconst);
  return r;
}

// One application of the conjugated cut-and-join operator, truncated to
// total t-weight D:
//   W P = 1/(2a+1) sum_{k>=0} J[-2k-1] ( L[2k-2a] + delta_{k,a}/8 ) P.
template <class K>
TPoly<K> cut_and_join(SeriesTables<K>& tab, int alpha, const std::optional<K>& cconst,
                      const TPoly<K>& P, int D) {
  if (alpha != 0 && alpha != 1)
    throw std::domain_error("cut_and_join: flavor must be 0 or 1");
  TPoly<K> acc;
  for (int k = 0; k <= (D + 2 * alpha) / 2; ++k) {
    TPoly<K> inner = conjugated_l(tab, 2 * k - 2 * alpha, D, P, cconst);
    if (k == alpha) inner += P.scaled(kfrac<K>(1, 8));
    acc += conjugated_j(tab, -2 * k - 1, D, inner);
  }
  return acc.scaled(kfrac<K>(1, 2 * alpha + 1)).weight_truncated(D);
}

// Level recursion tau^{(k)} = W tau^{(k-1)} / k with per-level weight cap
// D = (2a+1)k. Level 0 is 1.
template <class K>
GradedSeries<K> cut_and_join_levels(SeriesTables<K>& tab, int alpha,
                                    const std::optional<K>& cconst, int depth) {
  GradedSeries<K> tau = GradedSeries<K>::unit(depth);
  for (int k = 1; k <= depth; ++k) {
    tau.level(k) =
        cut_and_join(tab, alpha, cconst, tau.level(k - 1), (2 * alpha + 1) * k)
            .scaled(kfrac<K>(1, k));
  }
  return tau;
}

// Undressed cut-and-join operator:
//   W P = 1/(2a+1) sum_{k>=0} (2k+1) t_{2k+1} ( L_{2k-2a} + delta_{k,a}/8 ) P.
template <class K>
TPoly<K> cut_and_join_base(int alpha, const TPoly<K>& P, int D) {
  if (alpha != 0 && alpha != 1)
    throw std::domain_error("cut_and_join_base: flavor must be 0 or 1");
  TPoly<K> acc;
  for (int k = 0; k <= (D + 2 * alpha) / 2; ++k) {
    TPoly<K> inner = apply_l(2 * k - 2 * alpha, P);
    if (k == alpha) inner += P.scaled(kfrac<K>(1, 8));
    if (inner.is_zero()) continue;
    acc += inner.mul_t(2 * k + 1).scaled(kof<K>(Rational(2 * k + 1)));
  }
  return acc.scaled(kfrac<K>(1, 2 * alpha + 1)).weight_truncated(D);
}

template <class K>
GradedSeries<K> cut_and_join_base_levels(int alpha, int depth) {
  GradedSeries<K> tau = GradedSeries<K>::unit(depth);
  for (int k = 1; k <= depth; ++k) {
    tau.level(k) = cut_and_join_base(alpha, tau.level(k - 1), (2 * alpha + 1) * k)
                       .scaled(kfrac<K>(1, k));
  }
  return tau;
}

// Alternative operator built from cubic currents. Indices run over odd
// values with total degree -(2a+1); the two shapes are the one-raising
// pattern J_{-k} J_{-m} J_{k+m-2a-1} and the one-lowering pattern
// J_{-k-m-2a-1} J_k J_m (the latter with symmetry factor 1/2), followed
// by the low-degree terms written out explicitly. Agreement of the level
// recursions driven by this operator and by cut_and_join is a route
// equality check, so the two must stay independently coded.
template <class K>
TPoly<K> cut_and_join_star(SeriesTables<K>& tab, int alpha, const TPoly<K>& P, int D) {
  if (alpha != 0 && alpha != 1)
    throw std::domain_error("cut_and_join_star: flavor must be 0 or 1");
  TPoly<K> r;
  for (long k = 1; k <= D + 2 * alpha + 1; k += 2) {
    for (long m = 1; m <= D + 2 * alpha + 1; m += 2) {
      const long j = k + m - 2 * alpha - 1;
      if (j >= 1 && j <= D) {
        TPoly<K> tmp = conjugated_j(tab, j, D, P);
        tmp = conjugated_j(tab, -m, D + j, tmp);
        tmp = conjugated_j(tab, -k, D + j + m, tmp);
        r += tmp;
      }
      if (k <= D && m <= D + k) {
        TPoly<K> tmp = conjugated_j(tab, m, D, P);
        tmp = conjugated_j(tab, k, D + m, tmp);
        tmp = conjugated_j(tab, -k - m - 2 * alpha - 1, D + m + k, tmp);
        r += tmp.scaled(kfrac<K>(1, 2));
      }
    }
  }
  r = r.scaled(kfrac<K>(1, 2 * alpha + 1));
  if (alpha == 0) {
    r += conjugated_j(tab, -1, D, P).scaled(kfrac<K>(1, 8));
  } else {
    TPoly<K> cube = conjugated_j(tab, -1, D, P);
    cube = conjugated_j(tab, -1, D, cube);
    cube = conjugated_j(tab, -1, D, cube);
    r += cube.scaled(kfrac<K>(1, 6));
    r += conjugated_j(tab, -3, D, P).scaled(kfrac<K>(1, 24));
  }
  return r.weight_truncated(D);
}

template <class K>
GradedSeries<K> cut_and_join_star_levels(SeriesTables<K>& tab, int alpha, int depth) {
  GradedSeries<K> tau = GradedSeries<K>::unit(depth);
  for (int k = 1; k <= depth; ++k) {
    tau.level(k) =
        cut_and_join_star(tab, alpha, tau.level(k - 1), (2 * alpha + 1) * k)
            .scaled(kfrac<K>(1, k));
  }
  return tau;
}

// Third, letter-graded route for the undressed operator: split by how a
// term changes the letter count n (number of t factors with multiplicity)
// and recurse on (level, n) cells. Exercises a different summation order
// than the other two routes.
namespace detail {

template <class K>
TPoly<K> star_raise1(int alpha, const TPoly<K>& P) {
  // 1/(2a+1) sum_{k,m odd} k m t_k t_m d/dt_{k+m-1-2a}  +  t_{2a+1}/8
  TPoly<K> r;
  if (P.is_zero()) return r;
  const long w = P.weight();
  for (long k = 1; k - 2 * alpha <= w; k += 2) {
    for (long m = 1; k + m - 1 - 2 * alpha <= w; m += 2) {
      const long d = k + m - 1 - 2 * alpha;
      if (d < 1) continue;
      TPoly<K> t = P.d_dt(static_cast<int>(d));
      if (t.is_zero()) continue;
      r += t.mul_t(static_cast<int>(k))
               .mul_t(static_cast<int>(m))
               .scaled(kfrac<K>(k * m, 2 * alpha + 1));
    }
  }
  r += P.mul_t(2 * alpha + 1).scaled(kfrac<K>(1, 8));
  return r;
}

template <class K>
TPoly<K> star_lower1(int alpha, const TPoly<K>& P) {
  // 1/(2(2a+1)) sum_{k,m odd} (k+m+2a+1) t_{k+m+2a+1} d/dt_k d/dt_m
  TPoly<K> r;
  if (P.is_zero()) return r;
  const long w = P.weight();
  for (long k = 1; k <= w; k += 2) {
    TPoly<K> dk = P.d_dt(static_cast<int>(k));
    if (dk.is_zero()) continue;
    for (long m = 1; m <= w - k; m += 2) {
      TPoly<K> dkm = dk.d_dt(static_cast<int>(m));
      if (dkm.is_zero()) continue;
      const long j = k + m + 2 * alpha + 1;
      r += dkm.mul_t(static_cast<int>(j)).scaled(kfrac<K>(j, 2 * (2 * alpha + 1)));
    }
  }
  return r;
}

}  // namespace detail

// Returns cells[k][n] = letter-count-n part of tau level k.
template <class K>
std::vector<std::map<int, TPoly<K>>> cut_and_join_star_by_letters(int alpha, int depth) {
  if (alpha != 0 && alpha != 1)
    throw std::domain_error("cut_and_join_star_by_letters: flavor must be 0 or 1");
  std::vector<std::map<int, TPoly<K>>> cells(static_cast<size_t>(depth) + 1);
  cells[0][0] = TPoly<K>::one();
  const TPoly<K> cube = TPoly<K>::t(1, 3).scaled(kfrac<K>(1, 6));
  for (int k = 1; k <= depth; ++k) {
    const auto& prev = cells[static_cast<size_t>(k - 1)];
    auto& cur = cells[static_cast<size_t>(k)];
    auto get = [&prev](int n) -> const TPoly<K>* {
      auto it = prev.find(n);
      return it == prev.end() ? nullptr : &it->second;
    };
    const int nmax = (2 * alpha + 1) * k;
    for (int n = 0; n <= nmax; ++n) {
      TPoly<K> acc;
      if (alpha == 1)
        if (const auto* p = get(n - 3)) acc += *p * cube;
      if (const auto* p = get(n - 1)) acc += detail::star_raise1(alpha, *p);
      if (const auto* p = get(n + 1)) acc += detail::star_lower1(alpha, *p);
      acc = acc.scaled(kfrac<K>(1, k)).weight_truncated((2 * alpha + 1) * k);
      if (!acc.is_zero()) cur[n] = std::move(acc);
    }
  }
  return cells;
}

}  // namespace hodgetau
