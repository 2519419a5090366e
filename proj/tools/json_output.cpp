#include "json_output.hpp"

#include "mathbook/error.hpp"

#include <cstdint>
#include <limits>

namespace mathbook::json_out {

json integer(const BigInt& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max()) {
    return z.convert_to<std::int64_t>();
  }
  return z.str();
}

json rational(const Rational& q) { return {{"num", integer(numerator(q))}, {"den", integer(denominator(q))}}; }

json complex(const cx::ComplexD& z) { return {{"re", z.re}, {"im", z.im}}; }

json complex(const cx::ComplexQ& z) { return {{"re", rational(z.re)}, {"im", rational(z.im)}}; }

json polar(const cx::Polar& p) {
  return {{"modulus", p.modulus}, {"argument", p.argument}, {"argument_deg", cx::rad_to_deg(p.argument)}};
}

json polynomial(const poly::Polynomial& p) {
  return {{"coefficients", array(p.coefficients(), [](const Rational& q) { return rational(q); })},
          {"degree", p.degree()},
          {"text", poly::to_string(p)}};
}

namespace {

template <class S, class F>
json matrix_rows(const la::Matrix<S>& m, F convert) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(convert(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

json matrix(const la::Matrix<Rational>& m) { return matrix_rows(m, [](const Rational& q) { return rational(q); }); }
json matrix(const la::Matrix<BigInt>& m) { return matrix_rows(m, [](const BigInt& z) { return integer(z); }); }
json matrix(const la::Matrix<double>& m) { return matrix_rows(m, [](double x) { return json(x); }); }

BigInt to_integer(const json& j) {
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  raise(ErrorKind::ParseError, "not an integer: " + j.dump());
}

Rational to_rational(const json& j) {
  if (j.is_object()) return Rational(to_integer(j.at("num")), to_integer(j.at("den")));
  return Rational(to_integer(j));
}

}  // namespace mathbook::json_out
