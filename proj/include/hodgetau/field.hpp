#pragma once

#include <string>

#include "hodgetau/param_scalar.hpp"
#include "hodgetau/rational.hpp"

namespace hodgetau {

// Uniform access to the two coefficient fields the engine runs over: plain
// rationals (numeric specializations) and rational functions in (p, s)
// (fully symbolic runs). Series, polynomial and operator code is templated
// on K and touches the field only through these hooks plus the arithmetic
// operators both types share.
template <class K>
struct field_ops;

template <>
struct field_ops<Rational> {
  static Rational from_rational(const Rational& r) { return r; }
  static std::string str(const Rational& x) { return x.to_string(); }
};

template <>
struct field_ops<ParamScalar> {
  static ParamScalar from_rational(const Rational& r) { return ParamScalar(r); }
  static std::string str(const ParamScalar& x) { return x.to_string(); }
};

template <class K>
K kof(const Rational& r) {
  return field_ops<K>::from_rational(r);
}

template <class K>
K kfrac(long num, long den) {
  return field_ops<K>::from_rational(Rational(num, den));
}

}  // namespace hodgetau
