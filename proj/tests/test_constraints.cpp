#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <vector>

#include "hodgetau/caj.hpp"
#include "hodgetau/constraints.hpp"

using hodgetau::build_curve;
using hodgetau::ConstraintFrame;
using hodgetau::Curve;
using hodgetau::GradedSeries;
using hodgetau::Rational;
using hodgetau::SeriesTables;
using hodgetau::TMono;
using P = hodgetau::TPoly<hodgetau::Rational>;

static Rational R(long n, long d = 1) { return Rational(n, d); }

namespace {

// All partitions of weight 0..wmax as sorted monomials, empty one included.
std::vector<TMono> partition_monomials(int wmax) {
  std::vector<TMono> out{TMono{}};
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
    if (remaining == 0) {
      TMono m;
      for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        if (!m.empty() && m.back().first == *it)
          ++m.back().second;
        else
          m.emplace_back(*it, 1);
      }
      out.push_back(std::move(m));
      return;
    }
    for (int p = std::min(remaining, maxpart); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  for (int w = 1; w <= wmax; ++w) rec(rec, w, w);
  return out;
}

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

TEST_CASE("partition basis has the expected size") {
  REQUIRE(partition_monomials(5).size() == 19);
  REQUIRE(partition_monomials(8).size() == 67);
}

TEST_CASE("frame constant") {
  const auto c = build_curve(R(3), R(2), 12);
  ConstraintFrame<Rational> fr(c);
  REQUIRE(fr.cconst() == R(13, 192));
}

TEST_CASE("dressed currents annihilate the dressed tau") {
  const auto c = build_curve(R(3), R(2), 20);
  ConstraintFrame<Rational> fr(c);
  for (int alpha : {0, 1}) {
    const int depth = alpha == 0 ? 3 : 2;
    const auto tau =
        dressed_levels(alpha == 0 ? c : build_curve(R(3), R(2), 28), alpha, depth);
    for (long k = 1; k <= 3; ++k)
      for (int lv = 0; lv < depth; ++lv)
        REQUIRE(heisenberg_out(fr, k, tau, lv).is_zero());
    for (long k = -alpha; k <= 3; ++k)
      for (int lv = 0; lv < depth; ++lv)
        REQUIRE(virasoro_out(fr, alpha, k, tau, lv).is_zero());
  }
}

TEST_CASE("dressed mode brackets close on the partition basis") {
  const auto c = build_curve(R(5), R(3), 16);
  ConstraintFrame<Rational> fr(c);
  const auto basis = partition_monomials(5);

  for (int alpha : {0, 1}) {
    for (long k = -alpha; k <= 2; ++k) {
      for (long m = -alpha; m <= 2; ++m) {
        for (const TMono& mono : basis) {
          const P p = P::term(R(1), mono);

          // level-preserving Virasoro block: (k - m) A_L(k+m)
          const P aa = fr.a_l(alpha, k, fr.a_l(alpha, m, p)) -
                       fr.a_l(alpha, m, fr.a_l(alpha, k, p));
          const P aa_ref = k == m ? P() : fr.a_l(alpha, k + m, p).scaled(R(k - m));
          REQUIRE(aa == aa_ref);

          // level-lowering block of the same bracket: (k - m) B_L(k+m)
          const P ab = fr.a_l(alpha, k, fr.b_l(alpha, m, p)) -
                       fr.b_l(alpha, m, fr.a_l(alpha, k, p)) +
                       fr.b_l(alpha, k, fr.a_l(alpha, m, p)) -
                       fr.a_l(alpha, m, fr.b_l(alpha, k, p));
          REQUIRE(ab == fr.b_l(alpha, k + m, p).scaled(R(k - m)));

          // two level drops cancel
          const P bb = fr.b_l(alpha, k, fr.b_l(alpha, m, p)) -
                       fr.b_l(alpha, m, fr.b_l(alpha, k, p));
          REQUIRE(bb.is_zero());
        }
      }

      for (long m = 1; m <= 3; ++m) {
        for (const TMono& mono : basis) {
          const P p = P::term(R(1), mono);

          // Virasoro rotates the currents: [L, J] -> -m J_{k+m}
          const P la = fr.a_l(alpha, k, fr.a_j(m, p)) - fr.a_j(m, fr.a_l(alpha, k, p));
          REQUIRE(la == fr.a_j(k + m, p).scaled(R(-m)));

          const P lb = fr.b_l(alpha, k, fr.a_j(m, p)) - fr.a_j(m, fr.b_l(alpha, k, p));
          REQUIRE(lb.is_zero());
        }
      }
    }
  }

  // currents commute among themselves in the verified range
  for (long k = 1; k <= 3; ++k)
    for (long m = 1; m <= 3; ++m)
      for (const TMono& mono : basis) {
        const P p = P::term(R(1), mono);
        REQUIRE(fr.a_j(k, fr.a_j(m, p)) == fr.a_j(m, fr.a_j(k, p)));
      }
}

TEST_CASE("mode validation") {
  const auto c = build_curve(R(3), R(2), 12);
  ConstraintFrame<Rational> fr(c);
  REQUIRE_THROWS_AS(fr.a_l(0, -1, P::one()), std::domain_error);
  REQUIRE_THROWS_AS(fr.a_l(1, -2, P::one()), std::domain_error);
  REQUIRE_THROWS_AS(fr.b_l(2, 1, P::one()), std::domain_error);
}

TEST_CASE("chi entries vanish below the diagonal cutoff") {
  const auto c = build_curve(R(3), R(2), 16);
  ConstraintFrame<Rational> fr(c);
  for (int alpha : {0, 1})
    for (long k = -alpha; k <= 3; ++k)
      for (long m = -8; m < 2 * k + 1 + 2 * alpha; ++m)
        REQUIRE(fr.chi(alpha, 2 * k, m) == R(0));
}
