#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <vector>

#include "hodgetau/kdv.hpp"
#include "hodgetau/reference_data.hpp"

using hodgetau::GradedSeries;
using hodgetau::Rational;
using P = hodgetau::TPoly<hodgetau::Rational>;

static Rational R(long n, long d = 1) { return Rational(n, d); }

TEST_CASE("time-shift coefficients have their closed forms") {
  const auto v0 = hodgetau::kdv_shift_coefficients(0, R(2), 9);
  REQUIRE(v0.size() == 4);
  REQUIRE(v0.count(1) == 0);
  REQUIRE(v0.at(3) == R(-4, 3));    // -u^2/3
  REQUIRE(v0.at(5) == R(-16, 5));   // -u^4/5
  REQUIRE(v0.at(7) == R(-64, 7));   // -u^6/7
  REQUIRE(v0.at(9) == R(-256, 9));  // -u^8/9

  const auto v1 = hodgetau::kdv_shift_coefficients(1, R(1), 9);
  REQUIRE(v1.size() == 3);
  REQUIRE(v1.count(3) == 0);
  REQUIRE(v1.at(5) == R(-4, 15));    // -(1 + 1/3)/5
  REQUIRE(v1.at(7) == R(-23, 105));  // -(1 + 1/3 + 1/5)/7
  REQUIRE(v1.at(9) == R(-176, 945)); // -(1 + 1/3 + 1/5 + 1/7)/9

  REQUIRE_THROWS_AS(hodgetau::kdv_shift_coefficients(2, R(1), 5), std::domain_error);
}

TEST_CASE("time shift redistributes levels and refuses to fall below zero") {
  const Rational a(7, 2);
  const std::map<int, Rational> v{{3, a}};

  GradedSeries<Rational> tau(std::vector<P>{P::one(), P::t(3), P::t(3, 2)});
  const auto out = hodgetau::shift_times(tau, v, 2);
  // t3^2 contributes binomially: a^2 to level 0, 2 a t3 to level 1
  REQUIRE(out.level(0) == P(R(1) + a + a * a));
  REQUIRE(out.level(1) == P::t(3) + P::t(3).scaled(a * R(2)));
  REQUIRE(out.level(2) == P::t(3, 2));

  // untouched letters pass through
  GradedSeries<Rational> tau2(std::vector<P>{P::one(), P::t(2) * P::t(3)});
  REQUIRE(hodgetau::shift_times(tau2, v, 1).level(0) == P::one() + P::t(2).scaled(a));

  // a shifted letter at level 0 has nowhere to go
  GradedSeries<Rational> bad(std::vector<P>{P::t(3)});
  REQUIRE_THROWS_AS(hodgetau::shift_times(bad, v, 1), std::logic_error);
}

TEST_CASE("one-parameter reduction holds") {
  REQUIRE(hodgetau::kdv_reduction_matches(0, R(1), 3));
  REQUIRE(hodgetau::kdv_reduction_matches(0, R(1, 2), 2));
  REQUIRE(hodgetau::kdv_reduction_matches(1, R(1), 2));
  REQUIRE(hodgetau::kdv_reduction_matches(1, R(1, 2), 1));
}

TEST_CASE("translation parameters match their frozen values") {
  for (const Rational& u : {R(1), R(1, 2), R(3)}) {
    for (int alpha : {0, 1}) {
      const auto s = hodgetau::kappa_parameters(alpha, u, 3);
      for (int j = 1; j <= 3; ++j)
        REQUIRE(s[static_cast<size_t>(j)] ==
                hodgetau::refdata::kappa_parameter_golden(alpha, j, u));
    }
  }
}

TEST_CASE("translation parameters invert through elementary Schur data") {
  for (int alpha : {0, 1}) {
    const Rational u(3, 2);
    const auto s = hodgetau::kappa_parameters(alpha, u, 5);
    const auto q = hodgetau::elementary_schur_q(s);
    // q_j = (2(j+alpha)+1)!! v_{2(j+alpha)+1}
    const auto v = hodgetau::kdv_shift_coefficients(alpha, u, 2 * (5 + alpha) + 1);
    for (int j = 1; j <= 5; ++j) {
      const int letter = 2 * (j + alpha) + 1;
      REQUIRE(q[static_cast<size_t>(j)] ==
              hodgetau::kof<Rational>(hodgetau::double_factorial_odd(letter)) *
                  v.at(letter));
    }
  }
}

TEST_CASE("constant part of the genus-two free energy") {
  REQUIRE(hodgetau::fp_closed_form(2, R(1)) == R(-1, 1440));
  REQUIRE(hodgetau::fp_closed_form(2, R(2)) == R(-64, 1440));
  REQUIRE_THROWS_AS(hodgetau::fp_closed_form(1, R(1)), std::domain_error);

  // independent route: specialize the frozen two-parameter expansion at the
  // reduction point (p, s) = (2u^2, u)
  for (const Rational& u : {R(1), R(1, 2)}) {
    const auto f21 = hodgetau::refdata::specialize(
        hodgetau::refdata::conjugated_free_energy(1, 2), R(2) * u * u, u);
    REQUIRE(f21.constant_term() == hodgetau::fp_closed_form(2, u));
  }
}
