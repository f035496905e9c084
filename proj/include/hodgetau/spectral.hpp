#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hodgetau/laurent.hpp"
#include "hodgetau/tpoly.hpp"

namespace hodgetau {

// A multi-differential on n copies of the z-line, stored as the coefficients
// c of prod_i dz_i / z_i^{k_i}. Only genuine poles are representable: every
// k_i must be at least 2. A violation means a residue survived somewhere
// upstream, which is always a bug, so add() refuses it loudly.
template <class K>
class MultiDiff {
 public:
  void add(const std::vector<int>& key, const K& c) {
    if (c.is_zero()) return;
    for (int k : key)
      if (k < 2)
        throw std::logic_error("MultiDiff: pole order below 2 (surviving residue)");
    auto [it, fresh] = m_.try_emplace(key, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) m_.erase(it);
    }
  }

  const std::map<std::vector<int>, K>& entries() const { return m_; }
  bool empty() const { return m_.empty(); }

  bool operator==(const MultiDiff& o) const { return m_ == o.m_; }

  MultiDiff scaled(const K& c) const {
    MultiDiff r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : m_) r.m_.emplace(k, v * c);
    return r;
  }

  // invariance under relabeling the points
  bool is_symmetric() const {
    for (const auto& [key, c] : m_) {
      std::vector<int> perm = key;
      std::sort(perm.begin(), perm.end());
      do {
        auto it = m_.find(perm);
        if (it == m_.end() || !(it->second == c)) return false;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return true;
  }

 private:
  std::map<std::vector<int>, K> m_;
};

// Local spectral-curve recursion around one simple branch point at z = 0:
// x has a double zero, the deck transformation sigma swaps the two sheets,
// and each stable (g, n) table is produced by one residue extraction from
// lower tables. Tables the recursion needs but that were never computed
// throw instead of being treated as zero; fill() computes every stable
// level in dependency order.
template <class K>
class SpectralEngine {
 public:
  SpectralEngine(const Laurent<K>& x, const Laurent<K>& y, int window)
      : x_(x.truncate(window)), y_(y.truncate(window)), W_(window) {
    if (x_.ord() != 2 || x_.derivative().ord() != 1)
      throw std::invalid_argument(
          "SpectralEngine: x must vanish to order exactly 2 (simple branch point)");
    xp_ = x_.derivative();
    sig_ = solve_deck();
    sigp_ = sig_.derivative();
    Dinv_ = ((y_ - compose(y_, sig_)) * xp_).inv();
    spow_.emplace(0, Laurent<K>::one());
    spow_.emplace(1, sig_);
    spow_.emplace(-1, sig_.inv());
  }

  const Laurent<K>& deck() const { return sig_; }

  bool has_table(int g, int n) const { return tab_.count({g, n}) != 0; }

  const MultiDiff<K>& table(int g, int n) const {
    auto it = tab_.find({g, n});
    if (it == tab_.end())
      throw std::logic_error("SpectralEngine: table (" + std::to_string(g) + "," +
                             std::to_string(n) + ") was not computed");
    return it->second;
  }

  // Compute all stable tables with 2g - 2 + n <= smax.
  void fill(int smax) {
    for (int s = 1; s <= smax; ++s)
      for (int g = 0; 2 * g <= s + 1; ++g) {
        const int n = s + 2 - 2 * g;
        if (n >= 1 && !has_table(g, n)) compute(g, n);
      }
  }

 private:
  Laurent<K> solve_deck() {
    // even x: the sheet swap is exactly z -> -z, kept with an exact window
    // so that high powers of the deck series stay fully accurate
    if ((x_.scale_arg(K(-1)) - x_).is_zero()) return Laurent<K>::z().scaled(K(-1));
    Laurent<K> s = Laurent<K>::z().scaled(K(-1)).truncate(W_);
    for (int it = 0; it < 64; ++it) {
      // each step doubles the correct order; windows shrink a little per
      // step, so convergence is met on the surviving common window
      Laurent<K> next = s - (compose(x_, s) - x_) * compose(xp_, s).inv();
      if ((next - s).is_zero()) return next;
      s = next;
    }
    throw std::runtime_error("SpectralEngine: deck transformation did not converge");
  }

  const Laurent<K>& sigma_power(long k) {
    auto it = spow_.find(k);
    if (it != spow_.end()) return it->second;
    const Laurent<K>& closer = sigma_power(k > 0 ? k - 1 : k + 1);
    const Laurent<K>& step = spow_.at(k > 0 ? 1 : -1);
    return spow_.emplace(k, closer * step).first->second;
  }

  using Bracket = std::map<std::vector<int>, Laurent<K>>;

  void accumulate(Bracket& br, const std::vector<int>& key, const Laurent<K>& ser) {
    auto [it, fresh] = br.try_emplace(key, ser);
    if (!fresh) it->second += ser;
  }

  // One recursion factor w_{g,1+|I|} with the running argument either z or
  // sigma(z) and the remaining arguments on the labels in I. Returned as
  // fixed-pole-key -> series-in-z, with key slots off I left at zero to be
  // filled by the complementary factor.
  Bracket factor(int g, const std::vector<int>& I, bool on_sigma, int nlabels, long L) {
    Bracket out;
    if (g == 0 && I.size() == 1) {
      // two-point function against one fixed label
      for (long l = 0; l < L; ++l) {
        std::vector<int> key(static_cast<size_t>(nlabels), 0);
        key[static_cast<size_t>(I[0])] = static_cast<int>(l) + 2;
        Laurent<K> ser = on_sigma
                             ? sigma_power(l).scaled(kof<K>(Rational(l + 1))) * sigp_
                             : Laurent<K>::monomial(kof<K>(Rational(l + 1)),
                                                    static_cast<int>(l));
        accumulate(out, key, ser);
      }
      return out;
    }
    const MultiDiff<K>& t = table(g, 1 + static_cast<int>(I.size()));
    for (const auto& [tkey, c] : t.entries()) {
      std::vector<int> key(static_cast<size_t>(nlabels), 0);
      for (size_t i = 0; i < I.size(); ++i)
        key[static_cast<size_t>(I[i])] = tkey[i + 1];
      Laurent<K> ser = on_sigma ? sigma_power(-tkey[0]).scaled(c) * sigp_
                                : Laurent<K>::monomial(c, -tkey[0]);
      accumulate(out, key, ser);
    }
    return out;
  }

  // The bracketed part of the recursion: the (g-1, n+1) term with its two
  // running arguments on z and sigma(z), plus all stable ordered splits.
  Bracket bracket(int g, int n, long L) {
    Bracket br;
    const int nlabels = n - 1;
    if (g >= 1) {
      if (g == 1 && n == 1) {
        const auto diff = (Laurent<K>::z().truncate(W_) - sig_).inv();
        accumulate(br, std::vector<int>(), diff * diff * sigp_);
      } else {
        for (const auto& [tkey, c] : table(g - 1, n + 1).entries()) {
          std::vector<int> key(tkey.begin() + 2, tkey.end());
          accumulate(br, key,
                     Laurent<K>::monomial(c, -tkey[0]) * sigma_power(-tkey[1]) * sigp_);
        }
      }
    }
    for (unsigned mask = 0; mask < (1u << nlabels); ++mask) {
      std::vector<int> I1, I2;
      for (int i = 0; i < nlabels; ++i)
        ((mask >> i) & 1u ? I1 : I2).push_back(i);
      for (int g1 = 0; g1 <= g; ++g1) {
        const int g2 = g - g1;
        if (g1 == 0 && I1.empty()) continue;  // unstable (0,1)
        if (g2 == 0 && I2.empty()) continue;
        Bracket f1 = factor(g1, I1, false, nlabels, L);
        Bracket f2 = factor(g2, I2, true, nlabels, L);
        for (const auto& [k1, s1] : f1)
          for (const auto& [k2, s2] : f2) {
            std::vector<int> key(static_cast<size_t>(nlabels));
            for (int i = 0; i < nlabels; ++i)
              key[static_cast<size_t>(i)] =
                  k1[static_cast<size_t>(i)] + k2[static_cast<size_t>(i)];
            accumulate(br, key, s1 * s2);
          }
      }
    }
    return br;
  }

  void compute(int g, int n) {
    if (2 * g - 2 + n < 1)
      throw std::logic_error("SpectralEngine: only stable (g,n) are computed");
    const long lmax = 2 * (3 * g - 2 + n) + 4;
    Bracket br = bracket(g, n, lmax + 4);
    MultiDiff<K> out;
    for (const auto& [fixed, ser] : br) {
      const Laurent<K> base = ser * Dinv_;
      for (long l = 1; l <= lmax + 2; ++l) {
        const Laurent<K> probe =
            (Laurent<K>::monomial(K(1), static_cast<int>(l)) - sigma_power(l)) * base;
        const K c = probe.coeff(-1) * kfrac<K>(1, 2);
        if (c.is_zero()) continue;
        if (l >= lmax + 1)
          throw std::runtime_error("SpectralEngine: pole window too small");
        std::vector<int> key;
        key.reserve(fixed.size() + 1);
        key.push_back(static_cast<int>(l) + 1);
        key.insert(key.end(), fixed.begin(), fixed.end());
        out.add(key, c);
      }
    }
    tab_.emplace(std::make_pair(g, n), std::move(out));
  }

  Laurent<K> x_, y_, xp_, sig_, sigp_, Dinv_;
  int W_;
  std::map<long, Laurent<K>> spow_;
  std::map<std::pair<int, int>, MultiDiff<K>> tab_;
};

// --- curve library ----------------------------------------------------

template <class K>
Laurent<K> spectral_x_parabola(int W) {
  return Laurent<K>::monomial(kfrac<K>(1, 2), 2).truncate(W);
}

// x with x' = z/(1 - u^2 z^2); reduces to z^2/2 at u = 0.
template <class K>
Laurent<K> spectral_x_log(const K& u, int W) {
  std::vector<K> co(static_cast<size_t>(W), K(0));
  K upow(1);
  for (int k = 1; 2 * k < W; ++k) {
    co[static_cast<size_t>(2 * k)] = upow / kof<K>(Rational(2 * k));
    upow = upow * u * u;
  }
  return Laurent<K>::from_coeffs(0, std::move(co), W);
}

template <class K>
Laurent<K> spectral_y_bgw(const K& u, int W) {
  // 1 / (z (1 - u^2 z^2))
  const auto den =
      Laurent<K>::from_coeffs(1, {K(1), K(0), -u * u}, Laurent<K>::kExact);
  return den.truncate(W + 2).inv().truncate(W);
}

template <class K>
Laurent<K> spectral_y_kw(const K& u, int W) {
  // arctanh(u z) / (u (1 - u^2 z^2)); the u -> 0 limit is z
  if (u.is_zero()) return Laurent<K>::z().truncate(W);
  const auto at = Laurent<K>::monomial(u, 1).truncate(W + 2).arctanh().scaled(K(1) / u);
  const auto den =
      Laurent<K>::from_coeffs(0, {K(1), K(0), -u * u}, Laurent<K>::kExact);
  return (at * den.truncate(W + 2).inv()).truncate(W);
}

template <class K>
Laurent<K> spectral_y_branch(int alpha, const K& u, int W) {
  // y_0 = 1/z, or y_1 = arctanh(u z)/u
  if (alpha == 0) return Laurent<K>::monomial(K(1), -1).truncate(W);
  if (alpha != 1) throw std::domain_error("spectral_y_branch: flavor must be 0 or 1");
  if (u.is_zero()) return Laurent<K>::z().truncate(W);
  return Laurent<K>::monomial(u, 1).truncate(W).arctanh().scaled(K(1) / u);
}

// --- correlators from the tau series ----------------------------------

// Rows of the triangular change of variables T_k = sum_m row_k[m] t_m at
// the one-parameter point (p, q) = (2u^2, -u^2); at u = 0 this collapses
// to the double-factorial rescaling T_k = (2k+1)!! t_{2k+1}.
template <class K>
std::vector<std::map<int, K>> time_change_rows(const K& u, int kmax) {
  std::vector<std::map<int, K>> rows(static_cast<size_t>(kmax) + 1);
  rows[0][1] = K(1);
  const K mu2 = -u * u;
  for (int k = 1; k <= kmax; ++k) {
    for (const auto& [m2, c] : rows[static_cast<size_t>(k - 1)]) {
      rows[static_cast<size_t>(k)][m2] += kof<K>(Rational(m2)) * mu2 * c;
      rows[static_cast<size_t>(k)][m2 + 2] += kof<K>(Rational(m2 + 2)) * c;
    }
    std::erase_if(rows[static_cast<size_t>(k)],
                  [](const auto& kv) { return kv.second.is_zero(); });
  }
  return rows;
}

// Back-substitution: t_{2k+1} = sum_j inv[k][j] T_j.
template <class K>
std::vector<std::vector<K>> invert_time_change(const std::vector<std::map<int, K>>& rows) {
  const int kmax = static_cast<int>(rows.size()) - 1;
  std::vector<std::vector<K>> inv;
  for (int k = 0; k <= kmax; ++k) {
    std::vector<K> e(static_cast<size_t>(k) + 1, K(0));
    e[static_cast<size_t>(k)] = K(1);
    // subtract row_k's lower letters, already expressed in T
    for (const auto& [m, c] : rows[static_cast<size_t>(k)]) {
      const int j = (m - 1) / 2;
      if (j >= k) continue;
      for (int i = 0; i <= j; ++i) e[static_cast<size_t>(i)] -= c * inv[static_cast<size_t>(j)][static_cast<size_t>(i)];
    }
    const K diag = rows[static_cast<size_t>(k)].at(2 * k + 1);
    for (auto& v : e) v = v / diag;
    inv.push_back(std::move(e));
  }
  return inv;
}

// The n-point, genus-g correlator assembled from the log of the tau series,
// as a multi-differential in the local coordinate. logtau must be the log
// of a tau series at the one-parameter point u (or the undressed one for
// u = 0); only odd letters may appear in it. phi_window bounds the
// expansion of the descendant series Phi_a = (-d/dx)^a (1/z).
template <class K>
MultiDiff<K> correlator_from_free_energy(const GradedSeries<K>& logtau, const K& u,
                                         int g, int n, int phi_window) {
  const int sidx = 2 * g - 2 + n;
  if (sidx < 1) throw std::domain_error("correlator_from_free_energy: unstable (g,n)");
  if (sidx > logtau.depth())
    throw std::domain_error("correlator_from_free_energy: logtau too shallow");
  const TPoly<K>& F = logtau.level(sidx);

  int kmax = 0;
  for (const auto& [mono, c] : F.terms())
    for (const auto& [letter, e] : mono) {
      if (letter % 2 == 0)
        throw std::logic_error("correlator_from_free_energy: even letter in log tau");
      kmax = std::max(kmax, (letter - 1) / 2);
    }

  const auto inv = invert_time_change(time_change_rows(u, kmax));

  // rewrite F with letter t_{2k+1} replaced by sum_j inv[k][j] T_j, where
  // T_j is carried as letter j+1 of a fresh polynomial
  TPoly<K> FT;
  for (const auto& [mono, c] : F.terms()) {
    TPoly<K> term = TPoly<K>::term(c, {});
    for (const auto& [letter, e] : mono) {
      const int k = (letter - 1) / 2;
      TPoly<K> lin;
      for (int j = 0; j <= k; ++j) {
        const K& cj = inv[static_cast<size_t>(k)][static_cast<size_t>(j)];
        if (!cj.is_zero()) lin += TPoly<K>::t(j + 1, 1).scaled(cj);
      }
      for (int i = 0; i < e; ++i) term = term * lin;
    }
    FT += term;
  }
  FT = FT.letters_filtered(n);

  // descendant series Phi_a
  std::vector<Laurent<K>> phi;
  {
    Laurent<K> xpinv = u.is_zero()
                           ? Laurent<K>::monomial(K(1), -1).truncate(phi_window)
                           : Laurent<K>::from_coeffs(-1, {K(1), K(0), -u * u},
                                                     Laurent<K>::kExact)
                                 .truncate(phi_window);
    phi.push_back(Laurent<K>::monomial(K(1), -1).truncate(phi_window));
    for (int a = 1; a <= kmax; ++a)
      phi.push_back(phi.back().derivative().scaled(K(-1)) * xpinv);
  }

  // assemble; tail keys (pole order <= 1) must cancel before insertion
  std::map<std::vector<int>, K> raw;
  for (const auto& [mono, c] : FT.terms()) {
    K inter = c;
    std::vector<int> slots;
    for (const auto& [letter, e] : mono) {
      inter = inter * kof<K>(factorial(e));
      for (int i = 0; i < e; ++i) slots.push_back(letter - 1);
    }
    std::sort(slots.begin(), slots.end());
    do {
      std::vector<std::pair<std::vector<int>, K>> partial{{{}, inter}};
      for (int a = 0; a < n; ++a) {
        std::vector<std::pair<std::vector<int>, K>> next;
        const Laurent<K>& ph = phi[static_cast<size_t>(slots[static_cast<size_t>(a)])];
        for (long long kk = ph.ord(); kk < ph.stored_hi(); ++kk) {
          const K& vv = ph.coeff(kk);
          if (vv.is_zero()) continue;
          const K fac = kof<K>(Rational(kk)) * vv;
          for (const auto& [key, val] : partial) {
            auto k2 = key;
            k2.push_back(static_cast<int>(1 - kk));
            next.emplace_back(std::move(k2), val * fac);
          }
        }
        partial = std::move(next);
      }
      for (auto& [key, val] : partial) raw[key] += val;
    } while (std::next_permutation(slots.begin(), slots.end()));
  }

  MultiDiff<K> out;
  for (const auto& [key, val] : raw) out.add(key, val);
  return out;
}

}  // namespace hodgetau
