#pragma once

// Canonical JSON for library values. Keys come out sorted; integers that do
// not fit in 64 bits are written as decimal strings.

#include "mathbook/complex.hpp"
#include "mathbook/linalg.hpp"
#include "mathbook/polynomial.hpp"
#include "mathbook/scalar.hpp"

#include <json.hpp>

#include <vector>

namespace mathbook::json_out {

using json = nlohmann::json;

json integer(const BigInt& z);
json rational(const Rational& q);
json complex(const cx::ComplexD& z);
json complex(const cx::ComplexQ& z);
json polar(const cx::Polar& p);
json polynomial(const poly::Polynomial& p);

json matrix(const la::Matrix<Rational>& m);
json matrix(const la::Matrix<BigInt>& m);
json matrix(const la::Matrix<double>& m);

template <class T, class F>
json array(const std::vector<T>& items, F convert) {
  json out = json::array();
  for (const auto& x : items) out.push_back(convert(x));
  return out;
}

BigInt to_integer(const json& j);
Rational to_rational(const json& j);

}  // namespace mathbook::json_out
