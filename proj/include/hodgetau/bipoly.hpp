#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hodgetau/rational.hpp"

namespace hodgetau {

// Monomial p^pe * s^se with a degree-lex order (total degree, then p-degree,
// then s-degree). The order is compatible with multiplication, which makes
// leading-term exact division valid.
struct PSMono {
  int pe = 0, se = 0;
  int total() const { return pe + se; }
  friend bool operator==(const PSMono& a, const PSMono& b) {
    return a.pe == b.pe && a.se == b.se;
  }
  friend bool operator<(const PSMono& a, const PSMono& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    if (a.pe != b.pe) return a.pe < b.pe;
    return a.se < b.se;
  }
};

namespace detail {

// Dense univariate polynomials over Q in the variable p; index = exponent.
using UniPoly = std::vector<Rational>;

inline void utrim(UniPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}
inline bool uis_zero(const UniPoly& a) { return a.empty(); }
inline int udeg(const UniPoly& a) { return static_cast<int>(a.size()) - 1; }

inline UniPoly uscale(const UniPoly& a, const Rational& c) {
  if (c.is_zero()) return {};
  UniPoly r = a;
  for (auto& x : r) x *= c;
  return r;
}

inline UniPoly usub(const UniPoly& a, const UniPoly& b) {
  UniPoly r = a;
  if (b.size() > r.size()) r.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  utrim(r);
  return r;
}

inline UniPoly umul(const UniPoly& a, const UniPoly& b) {
  if (uis_zero(a) || uis_zero(b)) return {};
  UniPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  utrim(r);
  return r;
}

// Division with remainder over Q[p].
inline void udivrem(const UniPoly& a, const UniPoly& b, UniPoly* quot, UniPoly* rem) {
  if (uis_zero(b)) throw std::domain_error("UniPoly: division by zero");
  UniPoly q, r = a;
  utrim(r);
  const Rational lead = b.back();
  while (!uis_zero(r) && udeg(r) >= udeg(b)) {
    const int shift = udeg(r) - udeg(b);
    const Rational c = r.back() / lead;
    if (static_cast<int>(q.size()) < shift + 1) q.resize(shift + 1);
    q[shift] += c;
    UniPoly sub(shift, Rational(0));
    sub.insert(sub.end(), b.begin(), b.end());
    r = usub(r, uscale(sub, c));
  }
  utrim(q);
  if (quot) *quot = std::move(q);
  if (rem) *rem = std::move(r);
}

inline UniPoly uexact_div(const UniPoly& a, const UniPoly& b) {
  UniPoly q, r;
  udivrem(a, b, &q, &r);
  if (!uis_zero(r)) throw std::logic_error("UniPoly: inexact division");
  return q;
}

// Monic gcd over Q[p].
inline UniPoly ugcd(UniPoly a, UniPoly b) {
  utrim(a);
  utrim(b);
  while (!uis_zero(b)) {
    UniPoly r;
    udivrem(a, b, nullptr, &r);
    a = std::move(b);
    b = std::move(r);
  }
  if (uis_zero(a)) return a;
  return uscale(a, a.back().inv());
}

}  // namespace detail

// Sparse bivariate polynomial in (p, s) with exact rational coefficients.
class BiPoly {
 public:
  using Map = std::map<PSMono, Rational>;

  BiPoly() = default;
  explicit BiPoly(const Rational& c) {
    if (!c.is_zero()) c_[PSMono{0, 0}] = c;
  }
  BiPoly(long n) : BiPoly(Rational(n)) {}  // NOLINT

  static BiPoly variable_p() { return monomial(Rational(1), 1, 0); }
  static BiPoly variable_s() { return monomial(Rational(1), 0, 1); }
  static BiPoly monomial(const Rational& c, int pe, int se) {
    BiPoly r;
    if (!c.is_zero()) r.c_[PSMono{pe, se}] = c;
    return r;
  }

  const Map& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const {
    return c_.empty() || (c_.size() == 1 && c_.begin()->first == PSMono{0, 0});
  }
  bool is_one() const {
    return c_.size() == 1 && c_.begin()->first == PSMono{0, 0} && c_.begin()->second.is_one();
  }
  bool is_monomial() const { return c_.size() == 1; }

  Rational constant_value() const {
    if (is_zero()) return Rational(0);
    if (!is_constant()) throw std::logic_error("BiPoly: not a constant");
    return c_.begin()->second;
  }

  // Largest monomial under the degree-lex order.
  std::pair<PSMono, Rational> leading() const {
    if (is_zero()) throw std::logic_error("BiPoly: leading term of zero");
    return *c_.rbegin();
  }

  int total_degree() const { return is_zero() ? -1 : c_.rbegin()->first.total(); }

  BiPoly operator-() const {
    BiPoly r = *this;
    for (auto& [m, v] : r.c_) v = -v;
    return r;
  }
  BiPoly& operator+=(const BiPoly& o) {
    for (const auto& [m, v] : o.c_) add_term(m, v);
    return *this;
  }
  BiPoly& operator-=(const BiPoly& o) {
    for (const auto& [m, v] : o.c_) add_term(m, -v);
    return *this;
  }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }

  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ma, va] : a.c_)
      for (const auto& [mb, vb] : b.c_)
        r.add_term(PSMono{ma.pe + mb.pe, ma.se + mb.se}, va * vb);
    return r;
  }

  BiPoly scaled(const Rational& c) const {
    BiPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, v] : c_) r.c_[m] = v * c;
    return r;
  }

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  Rational eval(const Rational& p0, const Rational& s0) const {
    Rational acc(0);
    for (const auto& [m, v] : c_) acc += v * p0.pow(m.pe) * s0.pow(m.se);
    return acc;
  }

  // Substitution p -> a*p, s -> b*s (pure coefficient rescaling).
  BiPoly scale_vars(const Rational& a, const Rational& b) const {
    BiPoly r;
    for (const auto& [m, v] : c_) {
      const Rational c = v * a.pow(m.pe) * b.pow(m.se);
      if (!c.is_zero()) r.c_[m] = c;
    }
    return r;
  }

  // Rational content carrying the sign of the leading coefficient, so that
  // (*this) = content * primitive with an integer primitive polynomial whose
  // leading coefficient is positive and whose coefficient gcd is 1.
  Rational content() const {
    if (is_zero()) return Rational(0);
    Rational g(0);
    for (const auto& [m, v] : c_) g = Rational::content_gcd(g, v);
    if (c_.rbegin()->second.sign() < 0) g = -g;
    return g;
  }

  BiPoly exact_div(const BiPoly& d) const {
    if (d.is_zero()) throw std::domain_error("BiPoly: division by zero");
    BiPoly r = *this, q;
    const auto [dm, dc] = d.leading();
    while (!r.is_zero()) {
      const auto [rm, rc] = r.leading();
      if (rm.pe < dm.pe || rm.se < dm.se)
        throw std::logic_error("BiPoly: inexact division");
      const PSMono qm{rm.pe - dm.pe, rm.se - dm.se};
      const Rational qc = rc / dc;
      q.add_term(qm, qc);
      BiPoly t;
      t.c_[qm] = qc;
      r -= t * d;
    }
    return q;
  }

  static BiPoly gcd(const BiPoly& a, const BiPoly& b);

  // Deterministic print with terms in descending monomial order; coefficients
  // are printed as exact rationals. Example: "p^2 - p*s^2 + s^4".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      const auto& [m, v] = *it;
      const Rational av = v.abs();
      if (first) {
        if (v.sign() < 0) out += "-";
        first = false;
      } else {
        out += v.sign() < 0 ? " - " : " + ";
      }
      std::string vars;
      if (m.pe > 0) vars += m.pe == 1 ? "p" : "p^" + std::to_string(m.pe);
      if (m.se > 0) {
        if (!vars.empty()) vars += "*";
        vars += m.se == 1 ? "s" : "s^" + std::to_string(m.se);
      }
      if (vars.empty()) {
        out += av.to_string();
      } else {
        if (!av.is_one()) out += av.to_string() + "*";
        out += vars;
      }
    }
    return out;
  }

 private:
  void add_term(const PSMono& m, const Rational& v) {
    if (v.is_zero()) return;
    auto it = c_.find(m);
    if (it == c_.end()) {
      c_[m] = v;
    } else {
      it->second += v;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  Map c_;
};

namespace detail {

// View of a BiPoly as a polynomial in s with coefficients in Q[p].
using SPoly = std::vector<UniPoly>;  // index = s-exponent

inline SPoly to_spoly(const BiPoly& a) {
  SPoly r;
  for (const auto& [m, v] : a.terms()) {
    if (static_cast<int>(r.size()) < m.se + 1) r.resize(m.se + 1);
    UniPoly& u = r[m.se];
    if (static_cast<int>(u.size()) < m.pe + 1) u.resize(m.pe + 1);
    u[m.pe] += v;
  }
  for (auto& u : r) utrim(u);
  while (!r.empty() && uis_zero(r.back())) r.pop_back();
  return r;
}

inline BiPoly from_spoly(const SPoly& a) {
  BiPoly r;
  for (size_t se = 0; se < a.size(); ++se)
    for (size_t pe = 0; pe < a[se].size(); ++pe)
      r += BiPoly::monomial(a[se][pe], static_cast<int>(pe), static_cast<int>(se));
  return r;
}

inline bool sis_zero(const SPoly& a) { return a.empty(); }
inline int sdeg(const SPoly& a) { return static_cast<int>(a.size()) - 1; }

inline void strim(SPoly& a) {
  while (!a.empty() && uis_zero(a.back())) a.pop_back();
}

inline UniPoly scontent(const SPoly& a) {
  UniPoly g;
  for (const auto& u : a) g = ugcd(g, u);
  return g;
}

inline SPoly sdiv_content(const SPoly& a, const UniPoly& g) {
  SPoly r = a;
  for (auto& u : r)
    if (!uis_zero(u)) u = uexact_div(u, g);
  return r;
}

inline SPoly sprimitive(const SPoly& a) {
  if (sis_zero(a)) return a;
  return sdiv_content(a, scontent(a));
}

// Pseudo-remainder in s over Q[p]; the result is only needed up to content,
// which the primitive-PRS loop strips immediately.
inline SPoly sprem(SPoly a, const SPoly& b) {
  strim(a);
  const UniPoly lead = b.back();
  while (!sis_zero(a) && sdeg(a) >= sdeg(b)) {
    const int shift = sdeg(a) - sdeg(b);
    const UniPoly top = a.back();
    // a <- lead * a - top * s^shift * b
    SPoly next(std::max(a.size(), b.size() + static_cast<size_t>(shift)));
    for (size_t i = 0; i < a.size(); ++i) next[i] = umul(a[i], lead);
    for (size_t i = 0; i < b.size(); ++i)
      next[i + shift] = usub(next[i + shift], umul(top, b[i]));
    a = std::move(next);
    strim(a);
  }
  return a;
}

}  // namespace detail

inline BiPoly BiPoly::gcd(const BiPoly& a, const BiPoly& b) {
  using namespace detail;
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  SPoly as = to_spoly(a), bs = to_spoly(b);
  const UniPoly ca = scontent(as), cb = scontent(bs);
  const UniPoly cg = ugcd(ca, cb);
  SPoly ap = sdiv_content(as, ca), bp = sdiv_content(bs, cb);
  if (sdeg(ap) < sdeg(bp)) std::swap(ap, bp);
  while (!sis_zero(bp)) {
    SPoly r = sprem(ap, bp);
    ap = std::move(bp);
    bp = sprimitive(r);
  }
  SPoly g = sprimitive(ap);
  // multiply primitive s-gcd by the content gcd (a polynomial in p)
  for (auto& u : g) u = umul(u, cg);
  return from_spoly(g);
}

}  // namespace hodgetau
