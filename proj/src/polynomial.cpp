#include "mathbook/polynomial.hpp"

#include "mathbook/error.hpp"

#include <gmp.h>

#include <cctype>
#include <cmath>
#include <set>

namespace mathbook::poly {

Polynomial::Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
  normalize();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : c_(coefficients) {
  normalize();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t n) {
  std::vector<Rational> v(n + 1);
  v[n] = c;
  return Polynomial(std::move(v));
}

Rational Polynomial::coefficient(std::size_t power) const {
  return power < c_.size() ? c_[power] : Rational(0);
}

Rational Polynomial::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

void Polynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) {
  std::vector<Rational> out(std::max(p.coefficients().size(), q.coefficients().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.coefficient(i) + q.coefficient(i);
  return Polynomial(std::move(out));
}

Polynomial poly_sub(const Polynomial& p, const Polynomial& q) {
  std::vector<Rational> out(std::max(p.coefficients().size(), q.coefficients().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.coefficient(i) - q.coefficient(i);
  return Polynomial(std::move(out));
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto& a = p.coefficients();
  const auto& b = q.coefficients();
  std::vector<Rational> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return Polynomial(std::move(out));
}

Polynomial poly_scale(const Rational& c, const Polynomial& p) {
  std::vector<Rational> out = p.coefficients();
  for (auto& x : out) x *= c;
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) raise(ErrorKind::DivisionByZeroPolynomial, "division by the zero polynomial");
  if (num.degree() < den.degree()) return {Polynomial{}, num};
  std::vector<Rational> r = num.coefficients();
  const auto& d = den.coefficients();
  const std::size_t shift_max = r.size() - d.size();
  std::vector<Rational> q(shift_max + 1);
  for (std::size_t s = shift_max + 1; s-- > 0;) {
    const Rational f = r[s + d.size() - 1] / d.back();
    q[s] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) r[s + j] -= f * d[j];
  }
  r.resize(d.size() - 1);
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() && q.is_zero()) raise(ErrorKind::BothZero, "gcd(0, 0) is undefined");
  Polynomial a = p, b = q;
  while (!b.is_zero()) {
    Polynomial r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_scale(Rational(1) / a.leading(), a);
}

Rational poly_eval(const Polynomial& p, const Rational& x) {
  Rational acc(0);
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

double poly_eval(const Polynomial& p, double x) {
  double acc = 0.0;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + to_double(c[k]);
  return acc;
}

Polynomial poly_derivative(const Polynomial& p) {
  const auto& c = p.coefficients();
  if (c.size() <= 1) return {};
  std::vector<Rational> out(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) out[k - 1] = c[k] * k;
  return Polynomial(std::move(out));
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    const Rational mag = abs(c[k]);
    if (c[k] < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const bool unit = mag == 1 && k > 0;
    if (!unit) out += mathbook::to_string(mag);
    if (k > 0) {
      if (!unit) out += '*';
      out += 'x';
      if (k > 1) out += '^' + std::to_string(k);
    }
  }
  return out;
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : s_(text) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    raise(ErrorKind::ParseError, "polynomial: " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == '(' || c == 'x' || c == 'X' || c == '.' || std::isdigit(static_cast<unsigned char>(c));
  }

  Polynomial expr() {
    Polynomial acc;
    bool first = true;
    while (true) {
      bool negative = false;
      if (eat('-')) {
        negative = true;
      } else if (!eat('+') && !first) {
        break;
      }
      Polynomial t = term();
      acc = negative ? poly_sub(acc, t) : poly_add(acc, t);
      first = false;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = power();
    while (true) {
      if (eat('*')) {
        acc = poly_mul(acc, power());
      } else if (eat('/')) {
        const Polynomial d = power();
        if (d.degree() != 0) fail("division only by nonzero constants");
        acc = poly_scale(Rational(1) / d.leading(), acc);
      } else if (starts_factor()) {
        acc = poly_mul(acc, power());
      } else {
        return acc;
      }
    }
  }

  Polynomial power() {
    Polynomial base = primary();
    if (eat('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a non-negative integer");
      const unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (e > 10000) fail("exponent too large");
      Polynomial out = Polynomial::constant(1);
      for (unsigned long i = 0; i < e; ++i) out = poly_mul(out, base);
      return out;
    }
    return base;
  }

  Polynomial primary() {
    skip();
    if (eat('(')) {
      Polynomial p = expr();
      if (!eat(')')) fail("missing ')'");
      return p;
    }
    if (eat('x') || eat('X')) return Polynomial::monomial(1, 1);
    if (eat('-')) return poly_scale(-1, power());
    const std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
      ++pos_;
    }
    if (start == pos_) fail(pos_ < s_.size() ? "unexpected '" + std::string(1, s_[pos_]) + "'" : "unexpected end");
    return Polynomial::constant(parse_rational(s_.substr(start, pos_ - start)));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

bool rational_sqrt(const Rational& q, Rational& root) {
  if (q < 0) return false;
  const BigInt n = numerator(q), d = denominator(q);
  if (mpz_perfect_square_p(n.backend().data()) == 0 || mpz_perfect_square_p(d.backend().data()) == 0) {
    return false;
  }
  root = Rational(sqrt(n), sqrt(d));
  return true;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return ExprParser(text).parse(); }

QuadraticRoots quadratic_roots(const Rational& a, const Rational& b, const Rational& c) {
  if (a == 0) raise(ErrorKind::NotQuadratic, "leading coefficient is zero");
  QuadraticRoots out;
  out.discriminant = b * b - 4 * a * c;
  const double ad = to_double(a), bd = to_double(b), cd = to_double(c);
  const double disc = to_double(out.discriminant);
  if (out.discriminant >= 0) {
    const double s = std::sqrt(disc);
    // q = -(b + sign(b) s) / 2 gives one root as q/a and the other as c/q.
    const double q = -0.5 * (bd + (bd >= 0.0 ? s : -s));
    double r1 = 0.0, r2 = 0.0;
    if (q != 0.0) {
      r1 = q / ad;
      r2 = cd / q;
    }
    // r1 carries the sign of -b; pick which is the "+" root.
    const bool r1_is_plus = bd < 0.0;
    out.plus = {r1_is_plus ? r1 : r2, 0.0};
    out.minus = {r1_is_plus ? r2 : r1, 0.0};
    if (out.discriminant == 0) out.plus = out.minus = {-bd / (2.0 * ad), 0.0};
    Rational root;
    if (rational_sqrt(out.discriminant, root)) {
      out.exact = std::make_pair((-b + root) / (2 * a), (-b - root) / (2 * a));
    }
  } else {
    const double re = -bd / (2.0 * ad);
    const double im = std::sqrt(-disc) / (2.0 * std::abs(ad));
    const double sign = ad > 0.0 ? 1.0 : -1.0;
    out.plus = {re, sign * im};
    out.minus = {re, -sign * im};
  }
  return out;
}

VertexForm complete_square(const Rational& a, const Rational& b, const Rational& c) {
  if (a == 0) raise(ErrorKind::NotQuadratic, "leading coefficient is zero");
  return {a, -b / (2 * a), b * b / (4 * a) - c};
}

Polynomial expand(const VertexForm& v) {
  return Polynomial({v.a * v.h * v.h - v.k, -2 * v.a * v.h, v.a});
}

Polynomial lagrange_interpolate(std::span<const Point<Rational>> points) {
  if (points.empty()) raise(ErrorKind::InsufficientPoints, "no points to interpolate");
  std::set<Rational> seen;
  for (const auto& pt : points) {
    if (!seen.insert(pt.x).second) {
      raise(ErrorKind::DuplicateAbscissa, "abscissa " + mathbook::to_string(pt.x) + " repeats");
    }
  }
  Polynomial out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    // phi_i(x) = prod_{j != i} (x - x_j) / (x_i - x_j)
    Polynomial phi = Polynomial::constant(1);
    Rational denom(1);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      phi = poly_mul(phi, Polynomial({-points[j].x, Rational(1)}));
      denom *= points[i].x - points[j].x;
    }
    out = poly_add(out, poly_scale(points[i].y / denom, phi));
  }
  return out;
}

namespace {

std::vector<Point<Rational>> positioned(std::span<const Rational> values) {
  std::vector<Point<Rational>> pts;
  pts.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) pts.push_back({Rational(i + 1), values[i]});
  return pts;
}

std::size_t data_length(std::span<const Rational> codeword) {
  if (codeword.empty() || codeword.size() % 2 != 0) {
    raise(ErrorKind::LengthMismatch, "codeword length must be a positive even number");
  }
  return codeword.size() / 2;
}

// Advances a sorted index combination; false after the last one.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Rational> rs_encode(std::span<const Rational> data) {
  if (data.empty()) raise(ErrorKind::LengthMismatch, "nothing to encode");
  const Polynomial p = rs_interpolant(data);
  std::vector<Rational> out(data.begin(), data.end());
  for (std::size_t x = data.size() + 1; x <= 2 * data.size(); ++x) out.push_back(poly_eval(p, Rational(x)));
  return out;
}

Polynomial rs_interpolant(std::span<const Rational> values) {
  const auto pts = positioned(values);
  return lagrange_interpolate(pts);
}

bool rs_verify(std::span<const Rational> codeword) {
  const std::size_t k = data_length(codeword);
  return rs_interpolant(codeword).degree() <= static_cast<long>(k) - 1;
}

std::optional<RsCorrection> rs_correct(std::span<const Rational> codeword, std::size_t max_errors) {
  const std::size_t k = data_length(codeword);
  const std::size_t n = codeword.size();
  const auto all = positioned(codeword);
  const std::size_t limit = std::min(max_errors, k - 1);
  for (std::size_t size = 0; size <= limit; ++size) {
    std::vector<std::size_t> omit(size);
    for (std::size_t i = 0; i < size; ++i) omit[i] = i;
    do {
      std::vector<Point<Rational>> kept;
      for (std::size_t i = 0, o = 0; i < n; ++i) {
        if (o < omit.size() && omit[o] == i) {
          ++o;
          continue;
        }
        kept.push_back(all[i]);
      }
      const Polynomial q = lagrange_interpolate(kept);
      if (q.degree() <= static_cast<long>(k) - 1) {
        RsCorrection fix;
        fix.codeword.assign(codeword.begin(), codeword.end());
        for (std::size_t i : omit) {
          fix.codeword[i] = poly_eval(q, Rational(i + 1));
          fix.error_positions.push_back(i + 1);
        }
        fix.data.assign(fix.codeword.begin(), fix.codeword.begin() + k);
        return fix;
      }
    } while (size > 0 && next_combination(omit, n));
  }
  return std::nullopt;
}

}  // namespace mathbook::poly
