#include "mathbook/text_io.hpp"

#include "mathbook/error.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace mathbook {

namespace {

// Boost reads a leading 0 as an octal prefix.
BigInt decimal(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return BigInt(std::string(digits));
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_number(std::string_view text) {
  raise(ErrorKind::ParseError, "not a number: '" + std::string(text) + "'");
}

}  // namespace

Rational exact_rational(double x) {
  if (!std::isfinite(x)) raise(ErrorKind::InvalidInput, "non-finite value");
  return Rational(x);
}

BigInt parse_bigint(std::string_view text) {
  text = trim(text);
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body)) bad_number(text);
  const BigInt z = decimal(body);
  return negative ? BigInt(-z) : z;
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt num = parse_bigint(text.substr(0, slash));
    const BigInt den = parse_bigint(text.substr(slash + 1));
    if (den == 0) raise(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }

  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  long long exponent = 0;
  if (const auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = body.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) bad_number(text);
    exponent = std::stoll(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
    body = body.substr(0, e);
  }
  std::string digits;
  if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = body.substr(0, dot);
    const std::string_view frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      bad_number(text);
    }
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long long>(frac.size());
  } else {
    if (!all_digits(body)) bad_number(text);
    digits = std::string(body);
  }
  BigInt num = decimal(digits);
  if (negative) num = -num;
  const BigInt ten_pow = pow(BigInt(10), static_cast<unsigned>(std::llabs(exponent)));
  return exponent >= 0 ? Rational(num * ten_pow) : Rational(num, ten_pow);
}

std::string to_string(const Rational& q) {
  const BigInt den = denominator(q);
  if (den == 1) return numerator(q).str();
  return numerator(q).str() + "/" + den.str();
}

std::string to_string(const BigInt& z) { return z.str(); }

namespace io {

template <>
Rational parse_scalar<Rational>(std::string_view token) {
  return parse_rational(token);
}

template <>
BigInt parse_scalar<BigInt>(std::string_view token) {
  const Rational q = parse_rational(token);
  if (denominator(q) != 1) raise(ErrorKind::ParseError, "expected an integer: '" + std::string(token) + "'");
  return numerator(q);
}

template <>
double parse_scalar<double>(std::string_view token) {
  return to_double(parse_rational(token));
}

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

template <class S>
la::Matrix<S> parse_matrix(std::string_view text) {
  std::vector<std::vector<S>> rows;
  std::string line;
  auto flush = [&]() {
    const std::string_view t = trim(line);
    if (!t.empty() && t.front() != '#') {
      std::vector<S> row;
      for (const auto& tok : split_tokens(t)) row.push_back(parse_scalar<S>(tok));
      if (!rows.empty() && row.size() != rows.front().size()) {
        raise(ErrorKind::ParseError, "ragged matrix rows");
      }
      rows.push_back(std::move(row));
    }
    line.clear();
  };
  for (char c : text) {
    if (c == '\n' || c == ';') {
      flush();
    } else {
      line.push_back(c);
    }
  }
  flush();
  if (rows.empty() || rows.front().empty()) raise(ErrorKind::ParseError, "empty matrix");
  la::Matrix<S> m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

template la::Matrix<Rational> parse_matrix<Rational>(std::string_view);
template la::Matrix<BigInt> parse_matrix<BigInt>(std::string_view);
template la::Matrix<double> parse_matrix<double>(std::string_view);

std::string format_scalar(const Rational& q) { return to_string(q); }
std::string format_scalar(const BigInt& z) { return z.str(); }
std::string format_scalar(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

template <class S>
std::vector<Point<S>> parse_points(std::string_view text) {
  std::vector<Point<S>> out;
  const bool pair_syntax = text.find(':') != std::string_view::npos;
  if (pair_syntax) {
    for (const auto& tok : split_tokens(text)) {
      const auto colon = tok.find(':');
      if (colon == std::string::npos) raise(ErrorKind::ParseError, "expected x:y, got '" + tok + "'");
      out.push_back({parse_scalar<S>(tok.substr(0, colon)), parse_scalar<S>(tok.substr(colon + 1))});
    }
    return out;
  }
  std::istringstream in{std::string(text)};
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    const std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto toks = split_tokens(t);
    try {
      if (toks.size() != 2) raise(ErrorKind::ParseError, "expected two columns: '" + std::string(t) + "'");
      out.push_back({parse_scalar<S>(toks[0]), parse_scalar<S>(toks[1])});
    } catch (const Error&) {
      if (!first) throw;
    }
    first = false;
  }
  return out;
}

template std::vector<Point<Rational>> parse_points<Rational>(std::string_view);
template std::vector<Point<double>> parse_points<double>(std::string_view);

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorKind::InvalidInput, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace io
}  // namespace mathbook
