#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "hodgetau/caj.hpp"
#include "hodgetau/curve.hpp"

namespace hodgetau {

// Time-shift coefficients v_{2k+1} of the reduction to one parameter u:
// the dressed tau at (p, q) = (2u^2, -u^2) equals the undressed tau with
// every odd time translated by v_{2k+1}/hbar. Flavor 0 shifts t_3, t_5,
// ...; flavor 1 starts one letter later at t_5 and carries the harmonic
// weights H_k = sum_{j<k} 1/(2j+1).
template <class K>
std::map<int, K> kdv_shift_coefficients(int alpha, const K& u, int letter_max) {
  if (alpha != 0 && alpha != 1)
    throw std::domain_error("kdv_shift_coefficients: flavor must be 0 or 1");
  std::map<int, K> v;
  const K u2 = u * u;
  if (alpha == 0) {
    K upow = u2;  // u^{2k}
    for (int k = 1; 2 * k + 1 <= letter_max; ++k, upow = upow * u2)
      v[2 * k + 1] = -upow / kof<K>(Rational(2 * k + 1));
  } else {
    K upow = u2;  // u^{2(k-1)}
    Rational H(1);  // H_k, starting at H_2 = 1 + 1/3
    for (int k = 2; 2 * k + 1 <= letter_max; ++k, upow = upow * u2) {
      H += Rational(1, 2 * k - 1);
      v[2 * k + 1] = -upow * kof<K>(H) / kof<K>(Rational(2 * k + 1));
    }
  }
  return v;
}

// tau({t_i + v_i / hbar}) expanded letter by letter: each factor t_i^e
// contributes binom(e,j) v_i^j t_i^{e-j} and drops the hbar level by j.
// Contributions below level 0 would make the result meaningless, so any
// such landing throws instead of being dropped.
template <class K>
GradedSeries<K> shift_times(const GradedSeries<K>& tau, const std::map<int, K>& v,
                            int out_depth) {
  GradedSeries<K> out = GradedSeries<K>::unit(out_depth);
  out.level(0) = TPoly<K>();
  for (int lv = 0; lv <= tau.depth(); ++lv) {
    for (const auto& [mono, coeff] : tau.level(lv).terms()) {
      // expansion state: (remaining-letter index position, level drop, term)
      std::vector<std::pair<int, TPoly<K>>> cur{{0, TPoly<K>::term(coeff, {})}};
      std::vector<std::pair<int, TPoly<K>>> next;
      for (const auto& [letter, e] : mono) {
        auto it = v.find(letter);
        next.clear();
        for (const auto& [drop, part] : cur) {
          if (it == v.end()) {
            next.emplace_back(drop, part * TPoly<K>::t(letter, e));
            continue;
          }
          K vpow(1);
          for (int j = 0; j <= e; ++j) {
            TPoly<K> piece = part.scaled(kof<K>(binomial(e, j)) * vpow);
            if (j < e) piece = piece * TPoly<K>::t(letter, e - j);
            next.emplace_back(drop + j, piece);
            vpow = vpow * it->second;
          }
        }
        std::swap(cur, next);
      }
      for (const auto& [drop, part] : cur) {
        const int target = lv - drop;
        if (part.is_zero()) continue;
        if (target < 0)
          throw std::logic_error("shift_times: contribution below hbar level 0");
        if (target <= out_depth) out.level(target) += part;
      }
    }
  }
  return out;
}

// Full reduction check at one parameter value: the dressed tau series on
// the curve (p, s) = (2u^2, u) against the time-shifted undressed tau,
// levels 0..M. The undressed series is built deep enough that every
// contribution falling into levels <= M is present.
template <class K>
bool kdv_reduction_matches(int alpha, const K& u, int M) {
  const K p = K(2) * u * u, s = u;
  const int D = (2 * alpha + 1) * M;
  const int T = 3 * D + 2 * alpha + 8;
  auto c = build_curve(p, s, T);
  GradedSeries<K> conj = [&] {
    if (alpha == 0) {
      SeriesTables<K> tab(c.ft);
      return cut_and_join_levels(tab, 0, std::optional<K>(), M);
    }
    SeriesTables<K> tab(c.f1);
    const K ccon = (c.f1.coeff(2) * c.f1.coeff(2) - c.f1.coeff(3)) / K(2);
    return cut_and_join_levels(tab, 1, std::optional<K>(ccon), M);
  }();

  const int L = alpha == 0 ? (3 * M + 1) / 2 : (5 * M + 1) / 2;
  auto base = cut_and_join_base_levels<K>(alpha, L);
  auto v = kdv_shift_coefficients(alpha, u, (2 * alpha + 1) * L);
  auto shifted = shift_times(base, v, M);
  for (int lv = 0; lv <= M; ++lv)
    if (!(shifted.level(lv) == conj.level(lv))) return false;
  return true;
}

// kappa-class translation parameters: the s_j with
//   1 - exp(-sum_j s_j z^j) = sum_j q_j z^j,
// where q_j = (2(j+alpha)+1)!! v_{2(j+alpha)+1} are the double-factorial
// rescalings of the shift coefficients.
template <class K>
std::vector<K> kappa_parameters(int alpha, const K& u, int jmax) {
  auto v = kdv_shift_coefficients(alpha, u, 2 * (jmax + alpha) + 1);
  std::vector<K> qs(static_cast<size_t>(jmax) + 1, K(0));
  for (int j = 1; j <= jmax; ++j) {
    const int letter = 2 * (j + alpha) + 1;
    auto it = v.find(letter);
    if (it != v.end()) qs[static_cast<size_t>(j)] = kof<K>(double_factorial_odd(letter)) * it->second;
  }
  // sum s_j z^j = -log(1 - Q)
  auto Q = Laurent<K>::from_coeffs(0, qs, jmax + 1);
  auto S = Q.scaled(K(-1)).log1p();  // log(1 - Q)
  std::vector<K> out(static_cast<size_t>(jmax) + 1, K(0));
  for (int j = 1; j <= jmax; ++j) out[static_cast<size_t>(j)] = K(0) - S.coeff(j);
  return out;
}

// Elementary Schur direction: recover q_j from the s_j.
template <class K>
std::vector<K> elementary_schur_q(const std::vector<K>& s) {
  const int jmax = static_cast<int>(s.size()) - 1;
  std::vector<K> neg(s.size(), K(0));
  for (int j = 1; j <= jmax; ++j) neg[static_cast<size_t>(j)] = K(0) - s[static_cast<size_t>(j)];
  auto E = Laurent<K>::from_coeffs(0, neg, jmax + 1).exp();  // exp(-sum s_j z^j)
  std::vector<K> q(s.size(), K(0));
  for (int j = 1; j <= jmax; ++j) q[static_cast<size_t>(j)] = K(0) - E.coeff(j);
  return q;
}

// Constant (t-free) part of the genus-g free energy in the one-parameter
// reduction, in closed form. Only defined for g >= 2.
template <class K>
K fp_closed_form(int g, const K& u) {
  if (g < 2) throw std::domain_error("fp_closed_form: needs g >= 2");
  const Rational r = Rational(2).pow(2 * g - 3) * (bernoulli(2 * g) / Rational(2 * g)) *
                     (bernoulli(2 * g - 2) / Rational(2 * g - 2)) / factorial(2 * g - 2);
  K upow(1);
  for (int i = 0; i < 6 * g - 6; ++i) upow = upow * u;
  return kof<K>(r) * upow;
}

}  // namespace hodgetau
