#pragma once

// Dense polynomials over exact rationals, quadratic solving, Lagrange
// interpolation and the interpolation form of Reed-Solomon coding.

#include "mathbook/complex.hpp"
#include "mathbook/scalar.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mathbook::poly {

/// Coefficients by ascending power with no trailing zeros; the zero
/// polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  /// c x^n
  static Polynomial monomial(const Rational& c, std::size_t n);

  const std::vector<Rational>& coefficients() const noexcept { return c_; }
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  Rational coefficient(std::size_t power) const;
  Rational leading() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void normalize();
  std::vector<Rational> c_;
};

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_sub(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
Polynomial poly_scale(const Rational& c, const Polynomial& p);

/// num = q den + r with deg r < deg den. DivisionByZeroPolynomial for den = 0.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& num, const Polynomial& den);

/// Monic gcd by Euclid's algorithm. BothZero when p = q = 0.
Polynomial poly_gcd(const Polynomial& p, const Polynomial& q);

Rational poly_eval(const Polynomial& p, const Rational& x);
double poly_eval(const Polynomial& p, double x);
Polynomial poly_derivative(const Polynomial& p);

/// Human-readable form such as "x^3+6*x-20" or "43/60*x^3-16/5*x^2".
std::string to_string(const Polynomial& p);

/// Parses expressions in x with + - * / ^ and parentheses, e.g.
/// "(x-2)*(x^2+2x+10)" or "5x^3 - x^2 + 6". Juxtaposition multiplies.
Polynomial parse_polynomial(std::string_view text);

struct QuadraticRoots {
  cx::ComplexD plus;   // (-b + sqrt(disc)) / 2a
  cx::ComplexD minus;  // (-b - sqrt(disc)) / 2a
  Rational discriminant;
  /// Both roots when the discriminant is the square of a rational.
  std::optional<std::pair<Rational, Rational>> exact;
};

/// Real roots use the cancellation-free form; complex roots come back as an
/// exact conjugate pair. NotQuadratic when a = 0.
QuadraticRoots quadratic_roots(const Rational& a, const Rational& b, const Rational& c);

/// a x^2 + b x + c = a (x - h)^2 - k, so h = -b / 2a and k = b^2 / 4a - c.
/// The vertex of the parabola is (h, -k).
struct VertexForm {
  Rational a;
  Rational h;
  Rational k;

  friend bool operator==(const VertexForm&, const VertexForm&) = default;
};

VertexForm complete_square(const Rational& a, const Rational& b, const Rational& c);
Polynomial expand(const VertexForm& v);

/// Interpolant of degree <= n - 1 through n points with distinct abscissae.
/// DuplicateAbscissa on a repeated x; InsufficientPoints on no points.
Polynomial lagrange_interpolate(std::span<const Point<Rational>> points);

/// Reed-Solomon in interpolation form: data sits at x = 1..k and the k
/// redundancy values are the interpolant evaluated at x = k+1..2k.
std::vector<Rational> rs_encode(std::span<const Rational> data);

/// Interpolant through (i, values[i-1]) for i = 1..n.
Polynomial rs_interpolant(std::span<const Rational> values);

/// True iff the interpolant of all 2k values has degree <= k - 1.
/// LengthMismatch for an odd or empty codeword.
bool rs_verify(std::span<const Rational> codeword);

struct RsCorrection {
  std::vector<Rational> data;
  std::vector<Rational> codeword;
  std::vector<std::size_t> error_positions;  // 1-based
};

/// Omits subsets of positions, smallest size first and lexicographically
/// within a size, until the remaining points interpolate a polynomial of
/// degree <= k - 1. Sizes above k - 1 are never tried, since k points always
/// pass. Nothing is returned when no subset of size <= t works.
std::optional<RsCorrection> rs_correct(std::span<const Rational> codeword, std::size_t max_errors);

}  // namespace mathbook::poly
