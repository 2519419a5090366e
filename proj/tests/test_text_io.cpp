#include "doctest.h"
#include "test_support.hpp"

#include "mathbook/text_io.hpp"

using namespace mathbook;
using namespace mathbook::io;

TEST_CASE("scalars") {
  CHECK(parse_rational("1.2") == Rational(6, 5));
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("2.5e-3") == Rational(1, 400));
  CHECK(parse_rational("+.5") == Rational(1, 2));
  CHECK(parse_rational("0.078") == Rational(39, 500));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("010") == 10);
  CHECK(parse_bigint("0012") == 12);
  CHECK(parse_bigint("-0") == 0);
  CHECK(parse_bigint("-781235309451520333346669091134226464") == BigInt("-781235309451520333346669091134226464"));
  CHECK(parse_scalar<BigInt>("12") == 12);
  CHECK(parse_scalar<double>("0.25") == 0.25);
  CHECK_KIND(parse_rational("1/0"), ParseError);
  CHECK_KIND(parse_rational("abc"), ParseError);
  CHECK_KIND(parse_rational("."), ParseError);
  CHECK_KIND(parse_scalar<BigInt>("1/2"), ParseError);
  CHECK(to_string(Rational(-4, 6)) == "-2/3");
  CHECK(to_string(Rational(8, 4)) == "2");
}

TEST_CASE("matrices") {
  const auto a = parse_matrix<Rational>("1 2/3\n-1, 0.5\n");
  CHECK(a.rows() == 2);
  CHECK(a(0, 1) == Rational(2, 3));
  CHECK(a(1, 1) == Rational(1, 2));
  CHECK(parse_matrix<Rational>("1 2;3 4") == parse_matrix<Rational>("# header\n1 2\n\n3 4\n"));
  CHECK(format_matrix(a) == "1 2/3\n-1 1/2\n");
  CHECK(parse_matrix<Rational>(format_matrix(a)) == a);
  CHECK_KIND(parse_matrix<Rational>("1 2;3"), ParseError);
  CHECK_KIND(parse_matrix<Rational>("  \n"), ParseError);
}

TEST_CASE("points") {
  const auto pairs = parse_points<Rational>("1:2.2 3.1:0.5, 4:-1");
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[1].x == Rational(31, 10));
  CHECK(pairs[2].y == -1);

  const auto csv = parse_points<double>("speed,dist\n50,35\n55,40\n");
  REQUIRE(csv.size() == 2);
  CHECK(csv[1].y == 40.0);
  CHECK_KIND(parse_points<double>("1,2\nx,y\n"), ParseError);
  CHECK_KIND(parse_points<double>("1:2 3"), ParseError);
}

TEST_CASE("files") {
  CHECK_FALSE(read_file(testing::data_path("braking.csv")).empty());
  CHECK_KIND(read_file(testing::data_path("missing.txt")), InvalidInput);
}
