#pragma once

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "hodgetau/bipoly.hpp"
#include "hodgetau/rational.hpp"

namespace hodgetau {

// Exact rational function in the two curve parameters (p, s). The third
// parameter q is not independent: q = s^2 - p, and the parser eliminates it
// on input. Canonical form: gcd(num, den) = 1 and den is a primitive integer
// polynomial with positive leading coefficient.
class ParamScalar {
 public:
  ParamScalar() : num_(), den_(Rational(1)) {}
  ParamScalar(long n) : num_(Rational(n)), den_(Rational(1)) {}  // NOLINT
  ParamScalar(const Rational& r) : num_(r), den_(Rational(1)) {}  // NOLINT
  ParamScalar(BiPoly n, BiPoly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("ParamScalar: zero denominator");
    reduce();
  }

  static ParamScalar var_p() { return ParamScalar(BiPoly::variable_p(), BiPoly(Rational(1))); }
  static ParamScalar var_s() { return ParamScalar(BiPoly::variable_s(), BiPoly(Rational(1))); }
  static ParamScalar var_q() {
    return ParamScalar(BiPoly::variable_s() * BiPoly::variable_s() - BiPoly::variable_p(),
                       BiPoly(Rational(1)));
  }
  static ParamScalar from_string(std::string_view text);

  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }

  Rational rational_value() const {
    if (!is_rational()) throw std::logic_error("ParamScalar: not a rational constant");
    return num_.constant_value() / den_.constant_value();
  }

  ParamScalar operator-() const {
    ParamScalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  friend ParamScalar operator+(const ParamScalar& a, const ParamScalar& b) {
    if (a.den_ == b.den_) return ParamScalar(a.num_ + b.num_, a.den_);
    return ParamScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend ParamScalar operator-(const ParamScalar& a, const ParamScalar& b) {
    if (a.den_ == b.den_) return ParamScalar(a.num_ - b.num_, a.den_);
    return ParamScalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
    return ParamScalar(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend ParamScalar operator/(const ParamScalar& a, const ParamScalar& b) {
    if (b.is_zero()) throw std::domain_error("ParamScalar: division by zero");
    return ParamScalar(a.num_ * b.den_, a.den_ * b.num_);
  }
  ParamScalar& operator+=(const ParamScalar& o) { return *this = *this + o; }
  ParamScalar& operator-=(const ParamScalar& o) { return *this = *this - o; }
  ParamScalar& operator*=(const ParamScalar& o) { return *this = *this * o; }
  ParamScalar& operator/=(const ParamScalar& o) { return *this = *this / o; }

  friend bool operator==(const ParamScalar& a, const ParamScalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const ParamScalar& a, const ParamScalar& b) { return !(a == b); }

  ParamScalar inv() const {
    if (is_zero()) throw std::domain_error("ParamScalar: inverse of zero");
    return ParamScalar(den_, num_);
  }

  ParamScalar pow(long e) const {
    if (e < 0) return inv().pow(-e);
    ParamScalar acc(1), base = *this;
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  Rational specialize(const Rational& p0, const Rational& s0) const {
    const Rational d = den_.eval(p0, s0);
    if (d.is_zero()) throw std::domain_error("ParamScalar: denominator vanishes at (p, s)");
    return num_.eval(p0, s0) / d;
  }

  // Scaling weight w, detected through the grading p -> 4p, s -> 2s which
  // multiplies a weight-w quantity by 2^(2w). Half-integer weights occur, so
  // the result is returned as an exact rational. nullopt if the value is not
  // homogeneous under the grading.
  std::optional<Rational> weight_of() const {
    if (is_zero()) return std::nullopt;
    const BiPoly sn = num_.scale_vars(Rational(4), Rational(2));
    const BiPoly sd = den_.scale_vars(Rational(4), Rational(2));
    // Homogeneous iff sn*den == c * num*sd for a constant c.
    const BiPoly lhs = sn * den_, rhs = num_ * sd;
    const Rational c = lhs.content() / rhs.content();
    if (lhs != rhs.scaled(c)) return std::nullopt;
    long m = 0;
    if (!c.is_power_of_two(&m)) return std::nullopt;
    return Rational(m, 2);
  }

  // Canonical print "(r)*(N)/(D)": r the rational content of the numerator,
  // N and D primitive integer polynomials. Degenerate pieces are dropped, so
  // constants print bare and a trivial denominator is omitted. The output is
  // valid input for from_string.
  std::string to_string() const {
    if (is_zero()) return "0";
    const Rational r = num_.content();
    const BiPoly n = num_.exact_div(BiPoly(r));
    std::string out;
    const bool have_n = !n.is_one();
    const bool have_d = !den_.is_one();
    if (!r.is_one() || !have_n) {
      const std::string rs = r.to_string();
      out += r.is_integer() && r.sign() >= 0 ? rs : "(" + rs + ")";
    }
    if (have_n) {
      if (!out.empty()) out += "*";
      out += "(" + n.to_string() + ")";
    }
    if (have_d) out += "/(" + den_.to_string() + ")";
    return out;
  }

 private:
  void reduce() {
    if (num_.is_zero()) {
      den_ = BiPoly(Rational(1));
      return;
    }
    if (den_.is_monomial()) {
      reduce_monomial_den();
      return;
    }
    const BiPoly g = BiPoly::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
    const Rational c = den_.content();
    if (!c.is_one()) {
      den_ = den_.exact_div(BiPoly(c));
      num_ = num_.scaled(c.inv());
    }
  }

  // The symbolic pipeline keeps denominators of the form c*p^a*s^b almost
  // everywhere; cancelling them needs only exponent minima, no gcd.
  void reduce_monomial_den() {
    const auto [dm, dc] = den_.leading();
    int pe = dm.pe, se = dm.se;
    for (const auto& [m, v] : num_.terms()) {
      pe = std::min(pe, m.pe);
      se = std::min(se, m.se);
      if (pe == 0 && se == 0) break;
    }
    BiPoly n;
    for (const auto& [m, v] : num_.terms())
      n += BiPoly::monomial(v / dc, m.pe - pe, m.se - se);
    num_ = std::move(n);
    den_ = BiPoly::monomial(Rational(1), dm.pe - pe, dm.se - se);
  }

  BiPoly num_;
  BiPoly den_;
};

namespace detail {

class ParamParser {
 public:
  explicit ParamParser(std::string_view s) : s_(s) {}

  ParamScalar parse() {
    ParamScalar v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parameter expression: " + what + " at offset " +
                                std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  ParamScalar expr() {
    ParamScalar v = eat('-') ? -term() : (eat('+'), term());
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  ParamScalar term() {
    ParamScalar v = factor();
    for (;;) {
      if (eat('*'))
        v *= factor();
      else if (eat('/'))
        v /= factor();
      else
        return v;
    }
  }

  ParamScalar factor() {
    if (eat('-')) return -factor();
    ParamScalar v = atom();
    if (eat('^')) {
      const bool neg = eat('-');
      const long e = integer();
      v = v.pow(neg ? -e : e);
    }
    return v;
  }

  long integer() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected integer");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v < 0) fail("integer overflow");
      ++pos_;
    }
    return v;
  }

  ParamScalar atom() {
    const char c = peek();
    if (c == '(') {
      eat('(');
      ParamScalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == 'p') {
      ++pos_;
      return ParamScalar::var_p();
    }
    if (c == 's') {
      ++pos_;
      return ParamScalar::var_s();
    }
    if (c == 'q') {
      ++pos_;
      return ParamScalar::var_q();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return ParamScalar(Rational(integer()));
    fail("unexpected character");
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace detail

inline ParamScalar ParamScalar::from_string(std::string_view text) {
  return detail::ParamParser(text).parse();
}

}  // namespace hodgetau
