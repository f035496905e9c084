#include <catch2/catch_amalgamated.hpp>

#include <utility>
#include <vector>

#include "hodgetau/curve.hpp"
#include "hodgetau/param_scalar.hpp"

using hodgetau::build_curve;
using hodgetau::Curve;
using hodgetau::ParamScalar;
using hodgetau::Rational;
using L = hodgetau::Laurent<hodgetau::Rational>;
using LS = hodgetau::Laurent<hodgetau::ParamScalar>;

static Rational R(long n, long d = 1) { return Rational(n, d); }

namespace {

constexpr long long kOrder = 12;

// The five structural identities every frame family has to satisfy, checked
// through series order `ord` in exact arithmetic.
template <class K>
void check_identities(const Curve<K>& c, const hodgetau::Laurent<K>& fb1, long long ord) {
  const auto z = hodgetau::Laurent<K>::z();

  // 1. h undoes f
  REQUIRE(agree_to(compose(c.f, c.h), z, ord));

  // 2. ft undoes ht
  REQUIRE(agree_to(compose(c.ht, c.ft), z, ord));

  // 3. the odd diagonal frame threads back through both changes
  REQUIRE(agree_to(compose(c.f, compose(c.ht, c.Y)), z, ord));

  // 4. cube normalization of the flavor-1 frame, against the closed-form
  //    Bernoulli route for the same series
  const auto cube = (c.ft * c.xp).antiderivative();
  REQUIRE(agree_to(c.f1.pow(3).scaled(hodgetau::kfrac<K>(1, 3)), cube, ord + 2));
  REQUIRE(agree_to(compose(fb1, c.ft), c.f1, ord));

  // 5. exponential relation between x and y1
  REQUIRE(exp_relation_holds(c, ord));
}

}  // namespace

TEST_CASE("series identities hold symbolically in the parameters") {
  const ParamScalar p = ParamScalar::var_p();
  const ParamScalar s = ParamScalar::var_s();
  const Curve<ParamScalar> c = build_curve(p, s, 14);
  check_identities(c, hodgetau::fb1_bernoulli(p, s, 14), kOrder);
}

TEST_CASE("series identities hold at rational points") {
  const std::vector<std::pair<Rational, Rational>> pts = {
      {R(3), R(2)}, {R(5), R(3)}, {R(-2), R(3)}, {R(1, 2), R(1)}};
  for (const auto& [p0, s0] : pts) {
    const Curve<Rational> c = build_curve(p0, s0, 16);
    check_identities(c, hodgetau::fb1_bernoulli(p0, s0, 16), kOrder);
  }
}

TEST_CASE("specialized frames agree with the symbolic ones") {
  const Curve<ParamScalar> cs =
      build_curve(ParamScalar::var_p(), ParamScalar::var_s(), 12);
  const Curve<Rational> cr = build_curve(R(3), R(2), 12);
  for (long long n = 1; n < 12; ++n) {
    REQUIRE(cs.ft.coeff(n).specialize(R(3), R(2)) == cr.ft.coeff(n));
    REQUIRE(cs.Y.coeff(n).specialize(R(3), R(2)) == cr.Y.coeff(n));
    REQUIRE(cs.f1.coeff(n).specialize(R(3), R(2)) == cr.f1.coeff(n));
  }
}
