#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hodgetau/tpoly.hpp"

namespace hodgetau {

// Elementary Fock-space operator: multiplication by t_k or d/dt_k.
struct ElemOp {
  enum Kind { kMul, kDel } kind;
  int k;
};

// A word of elementary operators with a scalar coefficient. The word acts
// right to left, matching operator composition.
template <class K>
struct OpTerm {
  K coeff;
  std::vector<ElemOp> word;
};

// Finite sum of operator words acting on TPoly<K>.
template <class K>
class OperatorExpr {
 public:
  OperatorExpr() = default;

  static OperatorExpr single(K c, std::vector<ElemOp> word) {
    OperatorExpr r;
    if (!c.is_zero()) r.terms_.push_back({std::move(c), std::move(word)});
    return r;
  }

  const std::vector<OpTerm<K>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(K c, std::vector<ElemOp> word) {
    if (!c.is_zero()) terms_.push_back({std::move(c), std::move(word)});
  }

  OperatorExpr& operator+=(const OperatorExpr& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    return *this;
  }
  friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }

  OperatorExpr scaled(const K& c) const {
    OperatorExpr r;
    if (c.is_zero()) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff = t.coeff * c;
    return r;
  }

  TPoly<K> apply(const TPoly<K>& p) const {
    TPoly<K> out;
    for (const auto& t : terms_) {
      TPoly<K> cur = p;
      for (auto it = t.word.rbegin(); it != t.word.rend(); ++it) {
        cur = it->kind == ElemOp::kDel ? cur.d_dt(it->k) : cur.mul_t(it->k);
        if (cur.is_zero()) break;
      }
      if (!cur.is_zero()) out += cur.scaled(t.coeff);
    }
    return out;
  }

 private:
  std::vector<OpTerm<K>> terms_;
};

template <class K>
TPoly<K> commutator_on(const OperatorExpr<K>& a, const OperatorExpr<K>& b, const TPoly<K>& p) {
  return a.apply(b.apply(p)) - b.apply(a.apply(p));
}

// Heisenberg mode: J_m = d/dt_m for m > 0, (-m) t_{-m} for m < 0, 0 for m = 0.
template <class K>
OperatorExpr<K> j_op(int m) {
  OperatorExpr<K> r;
  if (m > 0)
    r.add_term(K(1), {ElemOp{ElemOp::kDel, m}});
  else if (m < 0)
    r.add_term(kof<K>(Rational(-m)), {ElemOp{ElemOp::kMul, -m}});
  return r;
}

// Direct action of J_m on a polynomial; agrees with j_op(m).apply(p) but
// avoids building the operator expression in the hot recursion paths.
template <class K>
TPoly<K> apply_j(int m, const TPoly<K>& p) {
  if (m == 0 || p.is_zero()) return TPoly<K>();
  if (m > 0) return p.d_dt(m);
  return p.mul_t(-m).scaled(kof<K>(Rational(-m)));
}

// Direct action of L_m. The infinite middle sum k t_k d/dt_{k+m} is applied
// per monomial: every letter v of the monomial with v - m >= 1 contributes
// (v-m) t_{v-m} (d/dt_v), so no index bound has to be guessed.
template <class K>
TPoly<K> apply_l(int m, const TPoly<K>& p) {
  TPoly<K> r;
  if (p.is_zero()) return r;
  if (m <= -2) {
    for (int a = 1; a <= -m - 1; ++a) {
      const int b = -m - a;
      r += p.mul_t(a).mul_t(b).scaled(kfrac<K>(a * b, 2));
    }
  }
  for (const auto& [mono, c] : p.terms()) {
    const TPoly<K> single = TPoly<K>::term(c, mono);
    for (const auto& [v, e] : mono) {
      const int k = v - m;
      if (k >= 1)
        r += single.d_dt(v).mul_t(k).scaled(kof<K>(Rational(k)));
    }
  }
  if (m >= 2) {
    for (int a = 1; a <= m - 1; ++a)
      r += p.d_dt(a).d_dt(m - a).scaled(kfrac<K>(1, 2));
  }
  return r;
}

// Virasoro mode in the standard Fock representation:
//   L_m = 1/2 sum_{a+b=-m} a b t_a t_b
//       + sum_{k>=1, k+m>=1} k t_k d/dt_{k+m}
//       + 1/2 sum_{a+b=m} d/dt_a d/dt_b
// (each sum over ordered pairs of positive indices). The middle sum is
// infinite; terms whose derivative index exceeds max_t_index annihilate
// every polynomial in t_1..t_{max_t_index} and are omitted.
template <class K>
OperatorExpr<K> l_op(int m, int max_t_index) {
  OperatorExpr<K> r;
  if (m <= -2) {
    for (int a = 1; a <= -m - 1; ++a) {
      const int b = -m - a;
      r.add_term(kof<K>(Rational(a * b, 2)),
                 {ElemOp{ElemOp::kMul, a}, ElemOp{ElemOp::kMul, b}});
    }
  }
  for (int k = std::max(1, 1 - m); k + m <= max_t_index; ++k)
    r.add_term(kof<K>(Rational(k)), {ElemOp{ElemOp::kMul, k}, ElemOp{ElemOp::kDel, k + m}});
  if (m >= 2) {
    for (int a = 1; a <= m - 1; ++a)
      r.add_term(kfrac<K>(1, 2), {ElemOp{ElemOp::kDel, a}, ElemOp{ElemOp::kDel, m - a}});
  }
  return r;
}

}  // namespace hodgetau
