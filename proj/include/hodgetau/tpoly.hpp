#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hodgetau/field.hpp"
#include "hodgetau/rational.hpp"

namespace hodgetau {

// Monomial in the time variables t_1, t_2, ...: sorted (index, power) pairs
// with power >= 1. The map order (lexicographic on the pair list) is the
// deterministic term order used for printing and serialization.
using TMono = std::vector<std::pair<int, int>>;

inline int tmono_weight(const TMono& m) {
  int w = 0;
  for (const auto& [i, e] : m) w += i * e;
  return w;
}

inline int tmono_letters(const TMono& m) {
  int n = 0;
  for (const auto& [i, e] : m) n += e;
  return n;
}

inline TMono tmono_mul(const TMono& a, const TMono& b) {
  TMono r;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i, ++j;
    }
  }
  return r;
}

// Polynomial in t_1, t_2, ... over the field K.
template <class K>
class TPoly {
 public:
  using Map = std::map<TMono, K>;

  TPoly() = default;
  explicit TPoly(const K& c) {
    if (!c.is_zero()) c_[TMono{}] = c;
  }

  static TPoly one() { return TPoly(K(1)); }
  static TPoly t(int k, int power = 1) {
    if (k < 1 || power < 1) throw std::domain_error("TPoly: bad variable");
    TPoly r;
    r.c_[TMono{{k, power}}] = K(1);
    return r;
  }
  static TPoly term(const K& c, TMono m) {
    TPoly r;
    if (!c.is_zero()) r.c_[std::move(m)] = c;
    return r;
  }

  const Map& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  K coeff(const TMono& m) const {
    auto it = c_.find(m);
    return it == c_.end() ? K(0) : it->second;
  }
  K constant_term() const { return coeff(TMono{}); }

  // Largest sum of index*power over the monomials (t_k carries weight k);
  // -1 for the zero polynomial.
  int weight() const {
    int w = -1;
    for (const auto& [m, v] : c_) w = std::max(w, tmono_weight(m));
    return w;
  }

  int max_index() const {
    int r = 0;
    for (const auto& [m, v] : c_)
      if (!m.empty()) r = std::max(r, m.back().first);
    return r;
  }

  void add_term(const TMono& m, const K& v) {
    if (v.is_zero()) return;
    auto it = c_.find(m);
    if (it == c_.end()) {
      c_[m] = v;
    } else {
      it->second += v;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  TPoly operator-() const {
    TPoly r = *this;
    for (auto& [m, v] : r.c_) v = -v;
    return r;
  }
  TPoly& operator+=(const TPoly& o) {
    for (const auto& [m, v] : o.c_) add_term(m, v);
    return *this;
  }
  TPoly& operator-=(const TPoly& o) {
    for (const auto& [m, v] : o.c_) add_term(m, -v);
    return *this;
  }
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }

  friend TPoly operator*(const TPoly& a, const TPoly& b) {
    TPoly r;
    for (const auto& [ma, va] : a.c_)
      for (const auto& [mb, vb] : b.c_) r.add_term(tmono_mul(ma, mb), va * vb);
    return r;
  }
  TPoly& operator*=(const TPoly& o) { return *this = *this * o; }

  TPoly scaled(const K& c) const {
    TPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, v] : c_) {
      const K w = v * c;
      if (!w.is_zero()) r.c_[m] = w;
    }
    return r;
  }

  friend bool operator==(const TPoly& a, const TPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }

  // Partial derivative with respect to t_k.
  TPoly d_dt(int k) const {
    TPoly r;
    for (const auto& [m, v] : c_) {
      for (size_t i = 0; i < m.size(); ++i) {
        if (m[i].first != k) continue;
        TMono n = m;
        const int e = n[i].second;
        if (e == 1)
          n.erase(n.begin() + static_cast<long>(i));
        else
          n[i].second = e - 1;
        r.add_term(n, v * kof<K>(Rational(e)));
        break;
      }
    }
    return r;
  }

  TPoly mul_t(int k) const {
    TPoly r;
    const TMono f{{k, 1}};
    for (const auto& [m, v] : c_) r.add_term(tmono_mul(m, f), v);
    return r;
  }

  // Drop monomials of weight above cap.
  TPoly weight_truncated(int cap) const {
    TPoly r;
    for (const auto& [m, v] : c_)
      if (tmono_weight(m) <= cap) r.c_[m] = v;
    return r;
  }

  // Keep only monomials with exactly n letters (counted with multiplicity).
  TPoly letters_filtered(int n) const {
    TPoly r;
    for (const auto& [m, v] : c_)
      if (tmono_letters(m) == n) r.c_[m] = v;
    return r;
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (const auto& [m, v] : c_) {
      if (!out.empty()) out += " + ";
      out += "(" + field_ops<K>::str(v) + ")";
      for (const auto& [i, e] : m) {
        out += "*t" + std::to_string(i);
        if (e > 1) out += "^" + std::to_string(e);
      }
    }
    return out;
  }

 private:
  Map c_;
};

// Finite collection of polynomial levels: value = sum_k level[k] * hbar^k,
// with the reduced Planck grading never stored symbolically. A tau expansion
// keeps level[0] = 1; its logarithm keeps level[0] = 0.
template <class K>
class GradedSeries {
 public:
  GradedSeries() = default;
  explicit GradedSeries(std::vector<TPoly<K>> levels) : lv_(std::move(levels)) {}

  static GradedSeries unit(int depth) {
    GradedSeries r;
    r.lv_.assign(static_cast<size_t>(depth) + 1, TPoly<K>());
    r.lv_[0] = TPoly<K>::one();
    return r;
  }

  int depth() const { return static_cast<int>(lv_.size()) - 1; }
  const TPoly<K>& level(int k) const {
    if (k < 0 || k > depth()) throw std::out_of_range("GradedSeries: level out of range");
    return lv_[static_cast<size_t>(k)];
  }
  TPoly<K>& level(int k) {
    if (k < 0 || k > depth()) throw std::out_of_range("GradedSeries: level out of range");
    return lv_[static_cast<size_t>(k)];
  }
  void resize(int depth) { lv_.resize(static_cast<size_t>(depth) + 1); }

  friend bool operator==(const GradedSeries& a, const GradedSeries& b) { return a.lv_ == b.lv_; }
  friend bool operator!=(const GradedSeries& a, const GradedSeries& b) { return !(a == b); }

  // Level-graded logarithm of a series with unit head:
  // F_k = Z_k - (1/k) sum_{j=1}^{k-1} j F_j Z_{k-j}.
  GradedSeries log() const {
    if (depth() < 0 || !(lv_[0] == TPoly<K>::one()))
      throw std::domain_error("GradedSeries: log needs head term 1");
    GradedSeries f;
    f.lv_.assign(lv_.size(), TPoly<K>());
    for (int k = 1; k <= depth(); ++k) {
      TPoly<K> acc = lv_[static_cast<size_t>(k)];
      for (int j = 1; j < k; ++j)
        acc -= (f.lv_[static_cast<size_t>(j)] * lv_[static_cast<size_t>(k - j)])
                   .scaled(kfrac<K>(j, k));
      f.lv_[static_cast<size_t>(k)] = std::move(acc);
    }
    return f;
  }

  // Level-graded exponential of a series with zero head:
  // Z_k = (1/k) sum_{j=1}^{k} j F_j Z_{k-j}, Z_0 = 1.
  GradedSeries exp() const {
    if (depth() >= 0 && !lv_[0].is_zero())
      throw std::domain_error("GradedSeries: exp needs zero head term");
    GradedSeries z;
    z.lv_.assign(std::max<size_t>(lv_.size(), 1), TPoly<K>());
    z.lv_[0] = TPoly<K>::one();
    for (int k = 1; k <= depth(); ++k) {
      TPoly<K> acc;
      for (int j = 1; j <= k; ++j)
        acc += (lv_[static_cast<size_t>(j)] * z.lv_[static_cast<size_t>(k - j)])
                   .scaled(kfrac<K>(j, k));
      z.lv_[static_cast<size_t>(k)] = std::move(acc);
    }
    return z;
  }

 private:
  std::vector<TPoly<K>> lv_;
};

}  // namespace hodgetau
