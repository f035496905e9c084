#include <catch2/catch_amalgamated.hpp>

#include <optional>

#include "hodgetau/caj.hpp"
#include "hodgetau/reference_data.hpp"

using hodgetau::build_curve;
using hodgetau::Curve;
using hodgetau::GradedSeries;
using hodgetau::ParamScalar;
using hodgetau::Rational;
using hodgetau::SeriesTables;
using P = hodgetau::TPoly<hodgetau::Rational>;

static Rational R(long n, long d = 1) { return Rational(n, d); }

namespace {

// Dressed level recursion on the frame attached to (p, s); flavor 1 carries
// the constant produced by the frame change.
template <class K>
GradedSeries<K> dressed_levels(const Curve<K>& c, int alpha, int depth) {
  if (alpha == 0) {
    SeriesTables<K> tab(c.ft);
    return cut_and_join_levels(tab, 0, std::optional<K>(), depth);
  }
  SeriesTables<K> tab(c.f1);
  const K ccon = (c.f1.coeff(2) * c.f1.coeff(2) - c.f1.coeff(3)) / K(2);
  return cut_and_join_levels(tab, 1, std::optional<K>(ccon), depth);
}

}  // namespace

TEST_CASE("undressed recursion reproduces the frozen expansions") {
  const auto tau0 = hodgetau::cut_and_join_base_levels<Rational>(0, 6);
  const auto f0 = tau0.log();
  for (int k = 1; k <= 6; ++k)
    REQUIRE(f0.level(k) == hodgetau::refdata::base_free_energy<Rational>(0, k));

  const auto tau1 = hodgetau::cut_and_join_base_levels<Rational>(1, 3);
  const auto f1 = tau1.log();
  for (int k = 1; k <= 3; ++k)
    REQUIRE(f1.level(k) == hodgetau::refdata::base_free_energy<Rational>(1, k));

  // spot check straight off the recursion, independent of the table
  REQUIRE(tau0.level(1) == P::t(1).scaled(R(1, 8)));
  REQUIRE(f1.level(1) == P::t(1, 3).scaled(R(1, 6)) + P::t(3).scaled(R(1, 8)));
}

TEST_CASE("three undressed routes agree") {
  for (int alpha : {0, 1}) {
    const int depth = alpha == 0 ? 4 : 3;
    const auto base = hodgetau::cut_and_join_base_levels<Rational>(alpha, depth);

    auto id = SeriesTables<Rational>::identity();
    const auto star = hodgetau::cut_and_join_star_levels(id, alpha, depth);
    REQUIRE(star == base);

    const auto cells = hodgetau::cut_and_join_star_by_letters<Rational>(alpha, depth);
    for (int k = 0; k <= depth; ++k) {
      P sum;
      for (const auto& [n, part] : cells[static_cast<size_t>(k)]) {
        REQUIRE(part == part.letters_filtered(n));  // cells are letter-pure
        sum += part;
      }
      REQUIRE(sum == base.level(k));
    }
  }
}

TEST_CASE("dressed recursion matches the frozen expansions at a point") {
  {
    const auto c = build_curve(R(3), R(2), 20);
    const auto f = dressed_levels(c, 0, 3).log();
    for (int k = 1; k <= 3; ++k)
      REQUIRE(f.level(k) == hodgetau::refdata::specialize(
                                hodgetau::refdata::conjugated_free_energy(0, k), R(3), R(2)));
  }
  {
    const auto c = build_curve(R(3), R(2), 28);
    const auto f = dressed_levels(c, 1, 2).log();
    for (int k = 1; k <= 2; ++k)
      REQUIRE(f.level(k) == hodgetau::refdata::specialize(
                                hodgetau::refdata::conjugated_free_energy(1, k), R(3), R(2)));
  }
}

TEST_CASE("dressed recursion matches the frozen expansions symbolically") {
  const auto c = build_curve(ParamScalar::var_p(), ParamScalar::var_s(), 14);
  const auto f = dressed_levels(c, 0, 2).log();
  for (int k = 1; k <= 2; ++k)
    REQUIRE(f.level(k) == hodgetau::refdata::conjugated_free_energy(0, k));
}

TEST_CASE("dressed and cubic-current routes agree") {
  {
    const auto c = build_curve(R(3), R(2), 20);
    SeriesTables<Rational> tab(c.ft);
    const auto star = hodgetau::cut_and_join_star_levels(tab, 0, 3);
    REQUIRE(star == dressed_levels(c, 0, 3));
  }
  {
    const auto c = build_curve(R(3), R(2), 28);
    SeriesTables<Rational> tab(c.f1);
    const auto star = hodgetau::cut_and_join_star_levels(tab, 1, 2);
    // the cubic-current route carries no separate constant: the low-degree
    // terms written out explicitly already contain it
    REQUIRE(star == dressed_levels(c, 1, 2));
  }
}

TEST_CASE("frame-change constant has its closed form") {
  const auto c = build_curve(ParamScalar::var_p(), ParamScalar::var_s(), 10);
  const ParamScalar ccon =
      (c.f1.coeff(2) * c.f1.coeff(2) - c.f1.coeff(3)) / ParamScalar(R(2));
  REQUIRE(ccon == ParamScalar::from_string("-2/45*(p^2+p*q+q^2)/(p+q)"));
}

TEST_CASE("operators validate the flavor") {
  auto id = SeriesTables<Rational>::identity();
  REQUIRE_THROWS_AS(hodgetau::cut_and_join(id, 2, std::optional<Rational>(), P::one(), 2),
                    std::domain_error);
  REQUIRE_THROWS_AS(hodgetau::cut_and_join_base(-1, P::one(), 2), std::domain_error);
  REQUIRE_THROWS_AS(hodgetau::cut_and_join_star(id, 3, P::one(), 2), std::domain_error);
  REQUIRE_THROWS_AS(hodgetau::cut_and_join_star_by_letters<Rational>(2, 2),
                    std::domain_error);
}
