#include "doctest.h"
#include "test_support.hpp"

#include "mathbook/polynomial.hpp"

#include <cmath>
#include <random>

using namespace mathbook;
using namespace mathbook::poly;

namespace {

Polynomial p(std::string_view text) { return parse_polynomial(text); }

std::vector<Rational> values(std::initializer_list<const char*> texts) {
  std::vector<Rational> out;
  for (const char* t : texts) out.push_back(parse_rational(t));
  return out;
}

Polynomial random_poly(std::mt19937_64& rng, int max_degree) {
  std::vector<Rational> c(rng() % static_cast<unsigned>(max_degree + 2));
  for (auto& x : c) x = Rational(static_cast<long>(rng() % 41) - 20, static_cast<long>(1 + rng() % 7));
  return Polynomial(c);
}

}  // namespace

TEST_CASE("normalization") {
  const Polynomial z{0, 0};
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(Polynomial{1, 2, 0}.degree() == 1);
  CHECK(Polynomial::monomial(3, 4).leading() == 3);
}

TEST_CASE("ring operations") {
  CHECK(poly_mul(p("x-2"), p("x^2+2x+10")) == p("x^3+6x-20"));
  CHECK(poly_mul(poly_mul(p("x-3"), p("x-3")), p("x+1")) == p("x^3-5x^2+3x+9"));
  CHECK(poly_add(p("x^2+1"), Polynomial{}) == p("x^2+1"));
  CHECK(poly_sub(p("x^2+x"), p("x^2")) == p("x"));
  CHECK(poly_sub(p("x^2+1"), p("x^2+1")).is_zero());
  CHECK(poly_scale(Rational(1, 2), p("4x+2")) == p("2x+1"));
}

TEST_CASE("division") {
  auto [q1, r1] = poly_divmod(p("5x^3-x^2+6"), p("x-4"));
  CHECK(q1 == p("5x^2+19x+76"));
  CHECK(r1 == Polynomial::constant(310));

  const auto a = p("x^5+2x^4-4x^3-7x^2+4x+4"), b = p("x^4+2x^3+2x^2+3x-2");
  auto [q2, r2] = poly_divmod(a, b);
  CHECK(q2 == p("x"));
  CHECK(r2 == p("-6x^3-10x^2+6x+4"));

  auto [q3, r3] = poly_divmod(b, b);
  CHECK(q3 == Polynomial::constant(1));
  CHECK(r3.is_zero());
  CHECK_KIND(poly_divmod(a, Polynomial{}), DivisionByZeroPolynomial);
}

TEST_CASE("gcd") {
  const auto a = p("x^5+2x^4-4x^3-7x^2+4x+4"), b = p("x^4+2x^3+2x^2+3x-2");
  CHECK(poly_gcd(a, b) == p("x+2"));
  CHECK(poly_gcd(p("2x^2+4"), Polynomial{}) == p("x^2+2"));
  const auto g = poly_gcd(poly_mul(p("x-1"), p("x+2")), poly_mul(p("x-1"), p("x+5")));
  CHECK(g == p("x-1"));
  CHECK(poly_divmod(p("x^2+x-2"), g).second.is_zero());
  CHECK_KIND(poly_gcd(Polynomial{}, Polynomial{}), BothZero);
}

TEST_CASE("evaluation and derivative") {
  CHECK(poly_eval(p("x^3+6x-20"), Rational(2)) == 0);
  CHECK(poly_eval(p("x^2-x-1"), 2.0) == 1.0);
  CHECK(poly_derivative(Polynomial::constant(7)).is_zero());
  CHECK(poly_derivative(p("x^3+6x-20")) == p("3x^2+6"));

  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_poly(rng, 6), g = random_poly(rng, 6);
    CHECK(poly_derivative(poly_add(f, g)) == poly_add(poly_derivative(f), poly_derivative(g)));
  }
}

TEST_CASE("text form") {
  CHECK(to_string(p("x^3+6x-20")) == "x^3+6*x-20");
  CHECK(to_string(Polynomial{}) == "0");
  CHECK(p("(x-1)(x+1)") == p("x^2-1"));
  CHECK(p("x/2 + 3/4") == Polynomial{Rational(3, 4), Rational(1, 2)});
  CHECK_KIND(p("x^"), ParseError);
  CHECK_KIND(p("y+1"), ParseError);
}

TEST_CASE("quadratic roots") {
  const auto golden = quadratic_roots(1, -1, -1);
  CHECK(std::abs(golden.plus.re - 1.618033988749895) <= 1e-12);
  CHECK(golden.plus.im == 0.0);
  CHECK(golden.discriminant == 5);

  const auto imag = quadratic_roots(1, 0, 4);
  CHECK(imag.plus.re == 0.0);
  CHECK(imag.plus.im == doctest::Approx(2.0));
  CHECK(imag.minus.im == -imag.plus.im);

  const auto dbl = quadratic_roots(1, -6, 9);
  REQUIRE(dbl.exact);
  CHECK(dbl.exact->first == 3);
  CHECK(dbl.exact->second == 3);
  CHECK_KIND(quadratic_roots(0, 1, 1), NotQuadratic);

  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 1000; ++trial) {
    const Rational a(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 5));
    if (a == 0) continue;
    const Rational b(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 5));
    const Rational c(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 5));
    const auto r = quadratic_roots(a, b, c);
    const double da = to_double(a), db = to_double(b), dc = to_double(c);
    for (const auto& z : {r.plus, r.minus}) {
      const double re = da * (z.re * z.re - z.im * z.im) + db * z.re + dc;
      const double im = da * 2 * z.re * z.im + db * z.im;
      const double scale = std::abs(da) * (z.re * z.re + z.im * z.im) + std::abs(db) * std::hypot(z.re, z.im) + std::abs(dc);
      CHECK(std::hypot(re, im) <= 1e-12 * std::max(1.0, scale));
    }
    if (r.discriminant < 0) CHECK(r.minus.im == -r.plus.im);
    if (r.exact) {
      CHECK(a * r.exact->first * r.exact->first + b * r.exact->first + c == 0);
      CHECK(a * r.exact->second * r.exact->second + b * r.exact->second + c == 0);
    }
  }
}

TEST_CASE("complete the square") {
  CHECK(complete_square(1, -1, -1) == VertexForm{1, Rational(1, 2), Rational(5, 4)});
  CHECK(complete_square(1, -2, -3) == VertexForm{1, 1, 4});
  CHECK(complete_square(1, 0, 0) == VertexForm{1, 0, 0});
  CHECK_KIND(complete_square(0, 2, 1), NotQuadratic);

  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 1000; ++trial) {
    const Rational a(1 + static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 4));
    const Rational b(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 7));
    const Rational c(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 7));
    CHECK(expand(complete_square(trial % 2 ? a : -a, b, c)) == Polynomial{c, b, trial % 2 ? a : -a});
  }
}

TEST_CASE("lagrange interpolation") {
  const std::vector<Point<Rational>> three{{1, parse_rational("2.2")}, {parse_rational("3.1"), parse_rational("0.5")}, {4, -1}};
  CHECK(lagrange_interpolate(three) == poly_scale(Rational(-1, 105), p("30x^2-38x-223")));

  const std::vector<Point<Rational>> one{{5, 9}};
  CHECK(lagrange_interpolate(one) == Polynomial::constant(9));

  const std::vector<Point<Rational>> dup{{1, 2}, {1, 3}};
  CHECK_KIND(lagrange_interpolate(dup), DuplicateAbscissa);
  CHECK_KIND(lagrange_interpolate(std::vector<Point<Rational>>{}), InsufficientPoints);
}

TEST_CASE("Reed-Solomon encoding") {
  const auto data = values({"1.2", "-3.2", "-5.4", "-1.1"});
  const auto cw = rs_encode(data);
  CHECK(cw == values({"1.2", "-3.2", "-5.4", "-1.1", "14", "44.2", "93.8", "167.1"}));
  CHECK(poly_eval(rs_interpolant(data), Rational(5)) == 14);
  CHECK(rs_verify(cw));

  CHECK(rs_encode(values({"3", "3"})) == values({"3", "3", "3", "3"}));
  CHECK(rs_encode(values({"7"})) == values({"7", "7"}));
  CHECK(rs_verify(values({"7", "7"})));
  CHECK_KIND(rs_verify(values({"1", "2", "3"})), LengthMismatch);
}

TEST_CASE("Reed-Solomon detection and repair") {
  const auto bad = values({"1.2", "3.2", "-5.4", "-1.1", "12.8", "44.2", "93.8", "167.1"});
  CHECK_FALSE(rs_verify(bad));
  CHECK(rs_interpolant(bad) ==
        poly_scale(Rational(1, 1800), p("31x^7-1009x^6+13513x^5-95995x^4+389074x^3-886516x^2+1020282x-437220")));

  const auto fix = rs_correct(bad, 2);
  REQUIRE(fix);
  CHECK(fix->error_positions == std::vector<std::size_t>{2, 5});
  CHECK(fix->codeword[1] == parse_rational("-3.2"));
  CHECK(fix->codeword[4] == 14);
  CHECK(fix->data == values({"1.2", "-3.2", "-5.4", "-1.1"}));
  CHECK_FALSE(rs_correct(bad, 1).has_value());

  const auto clean = rs_correct(rs_encode(fix->data), 2);
  REQUIRE(clean);
  CHECK(clean->error_positions.empty());
  CHECK(clean->data == fix->data);
  CHECK_KIND(rs_correct(values({"1", "2", "3"}), 1), LengthMismatch);
}

TEST_CASE("Reed-Solomon repair of a ten-symbol code") {
  const auto code = values({"2", "3", "6", "7", "11", "22", "48", "100", "192", "341"});
  CHECK_FALSE(rs_verify(code));
  const auto fix = rs_correct(code, 2);
  REQUIRE(fix);
  CHECK(fix->error_positions.size() <= 2);
  CHECK(rs_verify(fix->codeword));
  std::size_t changed = 0;
  for (std::size_t i = 0; i < code.size(); ++i) changed += code[i] != fix->codeword[i];
  CHECK(changed == fix->error_positions.size());
  CHECK(rs_encode(fix->data) == fix->codeword);
}
