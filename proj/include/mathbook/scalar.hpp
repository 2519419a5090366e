#pragma once

// Scalar types shared by every module. Integers and fractions are exact and
// unbounded (GMP through Boost.Multiprecision); expression templates are off
// so the types behave like plain values inside Eigen and std containers.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cmath>
#include <concepts>
#include <limits>
#include <string>
#include <string_view>
#include <type_traits>

namespace mathbook {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

inline BigInt numerator(const Rational& q) {
  return BigInt(boost::multiprecision::numerator(q));
}
inline BigInt denominator(const Rational& q) {
  return BigInt(boost::multiprecision::denominator(q));
}

inline Rational pow(const Rational& q, unsigned e) {
  return Rational(BigInt(boost::multiprecision::pow(numerator(q), e)),
                  BigInt(boost::multiprecision::pow(denominator(q), e)));
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(const BigInt& z) { return z.convert_to<double>(); }
inline double to_double(double x) { return x; }

/// Exact value of a finite double (every binary64 is a dyadic fraction).
Rational exact_rational(double x);

/// Parses "p/q", an integer, or a decimal such as "-3.25" or "1.2e-3" into an
/// exact fraction. Decimal notation is taken literally, so "1.2" is 6/5.
/// Throws Error(ParseError) on anything else.
Rational parse_rational(std::string_view text);

BigInt parse_bigint(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Compile-time switch between exact elimination and floating elimination.
template <class S>
struct scalar_traits {
  static constexpr bool exact = false;
  static bool is_zero(const S& x, const S& scale) {
    using std::abs;
    return abs(x) <= S(64) * std::numeric_limits<S>::epsilon() * scale;
  }
  static S magnitude(const S& x) {
    using std::abs;
    return abs(x);
  }
};

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static bool is_zero(const Rational& x, const Rational&) { return x == 0; }
  static Rational magnitude(const Rational& x) { return abs(x); }
};

template <>
struct scalar_traits<BigInt> {
  static constexpr bool exact = true;
  static bool is_zero(const BigInt& x, const BigInt&) { return x == 0; }
  static BigInt magnitude(const BigInt& x) { return abs(x); }
};

/// A sample (x, y), used for interpolation and fitting.
template <class S>
struct Point {
  S x;
  S y;

  friend bool operator==(const Point&, const Point&) = default;
};

template <class S>
concept ExactScalar = scalar_traits<S>::exact;

}  // namespace mathbook
