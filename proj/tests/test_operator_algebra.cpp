#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "hodgetau/operator_algebra.hpp"
#include "hodgetau/tpoly.hpp"

using hodgetau::commutator_on;
using hodgetau::ElemOp;
using hodgetau::OperatorExpr;
using hodgetau::Rational;
using P = hodgetau::TPoly<hodgetau::Rational>;

static Rational R(long n, long d = 1) { return Rational(n, d); }

namespace {

std::vector<P> sample_polys() {
  return {P::one(),
          P::t(1),
          P::t(2) * P::t(4),
          P::t(1, 3),
          P::t(3) * P::t(5),
          P::t(1) * P::t(2) * P::t(3) + P::t(2, 2).scaled(R(7))};
}

}  // namespace

TEST_CASE("operator words act right to left") {
  OperatorExpr<Rational> op;
  op.add_term(R(1), {ElemOp{ElemOp::kMul, 1}, ElemOp{ElemOp::kDel, 2}});
  REQUIRE(op.apply(P::t(2)) == P::t(1));
  REQUIRE(op.apply(P::t(1)).is_zero());

  // Compare with the opposite order to pin the convention.
  OperatorExpr<Rational> rev;
  rev.add_term(R(1), {ElemOp{ElemOp::kDel, 2}, ElemOp{ElemOp::kMul, 2}});
  REQUIRE(rev.apply(P::one()) == P::one());          // d/dt2 (t2 * 1) = 1
  REQUIRE(op.apply(P::t(2, 2)) == P::t(1) * P::t(2).scaled(R(2)));

  REQUIRE(op.scaled(R(3)).apply(P::t(2)) == P::t(1).scaled(R(3)));
  REQUIRE((op + rev).apply(P::t(2)) == P::t(1) + P::t(2).scaled(R(2)));
  REQUIRE(op.scaled(R(0)).is_zero());
}

TEST_CASE("direct mode actions agree with the operator expressions") {
  for (const P& p : sample_polys()) {
    for (int m = -4; m <= 4; ++m) {
      REQUIRE(hodgetau::apply_j(m, p) == hodgetau::j_op<Rational>(m).apply(p));
      REQUIRE(hodgetau::apply_l(m, p) == hodgetau::l_op<Rational>(m, 12).apply(p));
    }
  }
  REQUIRE(hodgetau::j_op<Rational>(0).is_zero());
}

TEST_CASE("mode actions on simple polynomials") {
  REQUIRE(hodgetau::apply_j(2, P::t(2)) == P::one());
  REQUIRE(hodgetau::apply_j(-3, P::one()) == P::t(3).scaled(R(3)));
  // L_0 is the weight operator
  REQUIRE(hodgetau::apply_l(0, P::t(2) * P::t(4)) == (P::t(2) * P::t(4)).scaled(R(6)));
  // L_{-2} on 1: only the quadratic creation part survives
  REQUIRE(hodgetau::apply_l(-2, P::one()) == P::t(1, 2).scaled(R(1, 2)));
  // L_2 on t1^2: only the double-annihilation part survives
  REQUIRE(hodgetau::apply_l(2, P::t(1, 2)) == P(R(1)));
}

TEST_CASE("Heisenberg modes close on a central term") {
  for (const P& p : sample_polys()) {
    for (int k = -3; k <= 3; ++k) {
      if (k == 0) continue;
      for (int m = -3; m <= 3; ++m) {
        if (m == 0) continue;
        const P lhs = commutator_on(hodgetau::j_op<Rational>(k),
                                    hodgetau::j_op<Rational>(m), p);
        const P rhs = (k == -m) ? p.scaled(R(k)) : P();
        REQUIRE(lhs == rhs);
      }
    }
  }
}

TEST_CASE("Virasoro modes rotate the Heisenberg ones") {
  for (const P& p : sample_polys()) {
    for (int k = -3; k <= 3; ++k) {
      for (int m = -3; m <= 3; ++m) {
        if (m == 0) continue;
        const P lhs = commutator_on(hodgetau::l_op<Rational>(k, 12),
                                    hodgetau::j_op<Rational>(m), p);
        REQUIRE(lhs == hodgetau::apply_j(k + m, p).scaled(R(-m)));
      }
    }
  }
}

TEST_CASE("Virasoro bracket with its central extension") {
  for (const P& p : sample_polys()) {
    for (int k = -3; k <= 3; ++k) {
      for (int m = -3; m <= 3; ++m) {
        const P lhs = commutator_on(hodgetau::l_op<Rational>(k, 12),
                                    hodgetau::l_op<Rational>(m, 12), p);
        P rhs = hodgetau::apply_l(k + m, p).scaled(R(k - m));
        if (k == -m) rhs += p.scaled(R(static_cast<long>(k) * k * k - k, 12));
        REQUIRE(lhs == rhs);
      }
    }
  }
}

TEST_CASE("central charge shows up in a hand-checked bracket") {
  const P p = P::t(2) * P::t(4);
  const P lhs = commutator_on(hodgetau::l_op<Rational>(2, 12),
                              hodgetau::l_op<Rational>(-2, 12), p);
  // 4 L_0 contributes weight 6 four times over; the central term adds 1/2.
  REQUIRE(lhs == p.scaled(R(49, 2)));
}
