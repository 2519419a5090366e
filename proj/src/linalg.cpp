#include "mathbook/linalg.hpp"

#include "mathbook/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace mathbook::la {

IntegerMatrix mat_mod(const IntegerMatrix& a, const BigInt& m) {
  if (m <= 1) raise(ErrorKind::InvalidModulus, "modulus must exceed 1");
  IntegerMatrix out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out(i, j) = nt::mod_reduce(a(i, j), m);
  return out;
}

std::optional<IntegerMatrix> mat_inv_mod(const IntegerMatrix& a, const BigInt& m) {
  if (m <= 1) raise(ErrorKind::InvalidModulus, "modulus must exceed 1");
  detail::require_square(a);
  const auto det_inv = nt::inv_mod(determinant(a), m);
  if (!det_inv) return std::nullopt;
  const IntegerMatrix adj = adjugate(a);
  return mat_mod(IntegerMatrix(*det_inv * adj), m);
}

void validate_incidence(const IntegerMatrix& incidence) {
  detail::require_square(incidence);
  for (Eigen::Index i = 0; i < incidence.rows(); ++i) {
    for (Eigen::Index j = 0; j < incidence.cols(); ++j) {
      if (incidence(i, j) < 0 || incidence(i, j) != incidence(j, i)) {
        raise(ErrorKind::InvalidIncidence, "incidence matrix must be symmetric and non-negative");
      }
    }
  }
}

BigInt path_count(const IntegerMatrix& incidence, Eigen::Index i, Eigen::Index j,
                  unsigned long long p) {
  validate_incidence(incidence);
  const Eigen::Index n = incidence.rows();
  if (i < 1 || j < 1 || i > n || j > n) {
    raise(ErrorKind::IndexOutOfRange, "city labels run from 1 to " + std::to_string(n));
  }
  return mat_pow(incidence, p)(i - 1, j - 1);
}

double sum_squared_errors(std::span<const Point<double>> points, std::span<const double> coefficients) {
  double sse = 0.0;
  for (const auto& pt : points) {
    double value = 0.0;
    for (std::size_t k = coefficients.size(); k-- > 0;) value = value * pt.x + coefficients[k];
    const double r = pt.y - value;
    sse += r * r;
  }
  return sse;
}

FitResult fit_poly(std::span<const Point<double>> points, unsigned degree, bool through_origin) {
  const unsigned first_power = through_origin ? 1 : 0;
  const std::size_t unknowns = degree + 1 - first_power;
  if (unknowns == 0) raise(ErrorKind::InvalidInput, "through-origin fit needs degree >= 1");

  std::set<double> distinct;
  for (const auto& pt : points) distinct.insert(pt.x);
  if (distinct.size() < unknowns) {
    raise(ErrorKind::InsufficientPoints,
          "need at least " + std::to_string(unknowns) + " distinct abscissae");
  }

  // Design matrix X with columns x^first_power .. x^degree; solve X^T X c = X^T y.
  RealMatrix design(points.size(), unknowns);
  Vector<double> y(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t k = 0; k < unknowns; ++k) {
      design(i, k) = std::pow(points[i].x, double(k + first_power));
    }
    y(i) = points[i].y;
  }
  const RealMatrix normal = design.transpose() * design;
  const Vector<double> rhs = design.transpose() * y;
  const auto outcome = gauss_solve(normal, rhs);
  if (outcome.kind != SolveKind::Unique) {
    raise(ErrorKind::SingularNormalEquations, "normal equations are singular");
  }

  FitResult fit;
  fit.coefficients.assign(degree + 1, 0.0);
  for (std::size_t k = 0; k < unknowns; ++k) fit.coefficients[k + first_power] = outcome.solution(k);
  fit.sse = sum_squared_errors(points, fit.coefficients);
  return fit;
}

std::vector<Point<double>> ratio_points(std::span<const Point<double>> points) {
  std::vector<Point<double>> out;
  out.reserve(points.size());
  for (const auto& pt : points) {
    if (!(pt.x > 0.0)) raise(ErrorKind::NonPositive, "ratio model needs v > 0");
    out.push_back({pt.x, pt.y / pt.x});
  }
  return out;
}

double friction_coefficient(double a, double g) {
  if (!(a > 0.0)) raise(ErrorKind::NonPositive, "braking coefficient must be positive");
  return 1.0 / (2.0 * a * g);
}

}  // namespace mathbook::la
