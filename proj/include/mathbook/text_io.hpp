#pragma once

// Plain-text formats: the matrix text format (one row per line or ';'-separated,
// entries separated by whitespace or commas, rationals as p/q) and point lists
// written as "x:y" pairs or CSV lines "x,y".

#include "mathbook/linalg.hpp"
#include "mathbook/scalar.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace mathbook::io {

template <class S>
S parse_scalar(std::string_view token);

template <>
Rational parse_scalar<Rational>(std::string_view token);
template <>
BigInt parse_scalar<BigInt>(std::string_view token);
template <>
double parse_scalar<double>(std::string_view token);

/// Splits on whitespace and commas.
std::vector<std::string> split_tokens(std::string_view text);

/// Rows separated by newlines or ';'. Blank rows and lines starting with '#'
/// are skipped. Throws ParseError on ragged rows or bad entries.
template <class S>
la::Matrix<S> parse_matrix(std::string_view text);

extern template la::Matrix<Rational> parse_matrix<Rational>(std::string_view);
extern template la::Matrix<BigInt> parse_matrix<BigInt>(std::string_view);
extern template la::Matrix<double> parse_matrix<double>(std::string_view);

std::string format_scalar(const Rational& q);
std::string format_scalar(const BigInt& z);
std::string format_scalar(double x);

template <class S>
std::string format_matrix(const la::Matrix<S>& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ' ';
      out += format_scalar(m(i, j));
    }
    out += '\n';
  }
  return out;
}

/// "x:y" tokens, or CSV with one "x,y" pair per line. A leading line that
/// does not parse as numbers is treated as a header and skipped.
template <class S>
std::vector<Point<S>> parse_points(std::string_view text);

extern template std::vector<Point<Rational>> parse_points<Rational>(std::string_view);
extern template std::vector<Point<double>> parse_points<double>(std::string_view);

std::string read_file(const std::string& path);

}  // namespace mathbook::io
