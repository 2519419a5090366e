#pragma once

// Dense matrix algebra templated on the scalar. Rational is the default for
// solving, inverting and modular work; double is used for least squares.
// Indices are 0-based in the API except where noted (path_count follows the
// 1-based city labels of an incidence matrix).

#include "mathbook/error.hpp"
#include "mathbook/scalar.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace mathbook::la {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<BigInt>;
using RealMatrix = Matrix<double>;

namespace detail {
template <class DA, class DB>
void require_same_shape(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    raise(ErrorKind::DimensionMismatch, "operands differ in shape");
  }
}
template <class D>
void require_square(const Eigen::MatrixBase<D>& a) {
  if (a.rows() != a.cols()) raise(ErrorKind::NonSquare, "matrix is not square");
}
}  // namespace detail

/// c_ij = sum_k a_ik b_kj.
template <class DA, class DB>
Matrix<typename DA::Scalar> matmul(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  if (a.cols() != b.rows()) raise(ErrorKind::DimensionMismatch, "inner dimensions differ");
  return a * b;
}

template <class D>
Matrix<typename D::Scalar> transpose(const Eigen::MatrixBase<D>& a) {
  return a.transpose();
}

template <class DA, class DB>
Matrix<typename DA::Scalar> hadamard(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  detail::require_same_shape(a, b);
  return a.cwiseProduct(b);
}

template <class DA, class DB>
Matrix<typename DA::Scalar> add(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  detail::require_same_shape(a, b);
  return a + b;
}

template <class D>
Matrix<typename D::Scalar> scale(const typename D::Scalar& c, const Eigen::MatrixBase<D>& a) {
  return c * a;
}

template <class S>
Matrix<S> identity(Eigen::Index n) {
  return Matrix<S>::Identity(n, n);
}

/// Fraction-free (Bareiss) elimination: every division is exact, so the
/// same routine serves integer and rational matrices.
template <class D>
typename D::Scalar determinant(const Eigen::MatrixBase<D>& a_in) {
  using S = typename D::Scalar;
  detail::require_square(a_in);
  Matrix<S> a = a_in;
  const Eigen::Index n = a.rows();
  if (n == 0) return S(1);
  S sign(1);
  S prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap_row = -1;
      for (Eigen::Index i = k + 1; i < n; ++i) {
        if (a(i, k) != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return S(0);
      a.row(k).swap(a.row(swap_row));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = S(0);
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Gauss-Jordan with the largest-magnitude pivot in each column. Returns
/// nothing for a singular matrix.
template <class D>
std::optional<Matrix<typename D::Scalar>> invert(const Eigen::MatrixBase<D>& a_in) {
  using S = typename D::Scalar;
  using traits = scalar_traits<S>;
  detail::require_square(a_in);
  const Eigen::Index n = a_in.rows();
  Matrix<S> a = a_in;
  Matrix<S> inv = identity<S>(n);
  S scale_ref(0);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (traits::magnitude(a(i, j)) > scale_ref) scale_ref = traits::magnitude(a(i, j));

  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (traits::magnitude(a(i, k)) > traits::magnitude(a(pivot, k))) pivot = i;
    }
    if (traits::is_zero(a(pivot, k), scale_ref)) return std::nullopt;
    if (pivot != k) {
      a.row(k).swap(a.row(pivot));
      inv.row(k).swap(inv.row(pivot));
    }
    const S p = a(k, k);
    a.row(k) /= p;
    inv.row(k) /= p;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k || a(i, k) == S(0)) continue;
      const S f = a(i, k);
      a.row(i) -= f * a.row(k);
      inv.row(i) -= f * inv.row(k);
    }
  }
  return inv;
}

enum class SolveKind { Unique, Inconsistent, Underdetermined };

template <class S>
struct SolveOutcome {
  SolveKind kind = SolveKind::Unique;
  Vector<S> solution;  // set only for Unique
};

/// Forward elimination with partial pivoting (largest absolute value in the
/// column moves up), then back substitution on the triangular system.
template <class DA, class DB>
SolveOutcome<typename DA::Scalar> gauss_solve(const Eigen::MatrixBase<DA>& a_in,
                                              const Eigen::MatrixBase<DB>& b_in) {
  using S = typename DA::Scalar;
  using traits = scalar_traits<S>;
  detail::require_square(a_in);
  if (b_in.rows() != a_in.rows() || b_in.cols() != 1) {
    raise(ErrorKind::DimensionMismatch, "right-hand side length differs from matrix size");
  }
  const Eigen::Index n = a_in.rows();
  Matrix<S> a = a_in;
  Vector<S> b = b_in;

  S scale_ref(0);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (traits::magnitude(a(i, j)) > scale_ref) scale_ref = traits::magnitude(a(i, j));

  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < n && row < n; ++col) {
    Eigen::Index pivot = row;
    for (Eigen::Index i = row + 1; i < n; ++i) {
      if (traits::magnitude(a(i, col)) > traits::magnitude(a(pivot, col))) pivot = i;
    }
    if (traits::is_zero(a(pivot, col), scale_ref)) continue;
    if (pivot != row) {
      a.row(row).swap(a.row(pivot));
      std::swap(b(row), b(pivot));
    }
    for (Eigen::Index i = row + 1; i < n; ++i) {
      if (a(i, col) == S(0)) continue;
      const S f = a(i, col) / a(row, col);
      a.row(i) -= f * a.row(row);
      a(i, col) = S(0);
      b(i) -= f * b(row);
    }
    pivot_cols.push_back(col);
    ++row;
  }

  S b_scale(0);
  for (Eigen::Index i = 0; i < n; ++i)
    if (traits::magnitude(b(i)) > b_scale) b_scale = traits::magnitude(b(i));
  for (Eigen::Index i = row; i < n; ++i) {
    if (!traits::is_zero(b(i), b_scale)) return {SolveKind::Inconsistent, {}};
  }
  if (row < n) return {SolveKind::Underdetermined, {}};

  Vector<S> x(n);
  for (Eigen::Index i = n; i-- > 0;) {
    S acc = b(i);
    for (Eigen::Index j = i + 1; j < n; ++j) acc -= a(i, j) * x(j);
    x(i) = acc / a(i, i);
  }
  return {SolveKind::Unique, x};
}

/// Transposed cofactor matrix; A * adj(A) = det(A) I.
template <class D>
Matrix<typename D::Scalar> adjugate(const Eigen::MatrixBase<D>& a) {
  using S = typename D::Scalar;
  detail::require_square(a);
  const Eigen::Index n = a.rows();
  Matrix<S> adj(n, n);
  if (n == 1) {
    adj(0, 0) = S(1);
    return adj;
  }
  Matrix<S> minor(n - 1, n - 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (Eigen::Index c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = a(r, c);
        }
        ++mr;
      }
      const S cof = determinant(minor);
      adj(j, i) = ((i + j) % 2 == 0) ? cof : S(-cof);
    }
  }
  return adj;
}

/// A^p by repeated squaring, p >= 1.
template <class D>
Matrix<typename D::Scalar> mat_pow(const Eigen::MatrixBase<D>& a, unsigned long long p) {
  using S = typename D::Scalar;
  detail::require_square(a);
  if (p == 0) raise(ErrorKind::InvalidInput, "power must be at least 1");
  Matrix<S> result = identity<S>(a.rows());
  Matrix<S> base = a;
  while (p > 0) {
    if (p & 1ULL) result = (result * base).eval();
    p >>= 1;
    if (p > 0) base = (base * base).eval();
  }
  return result;
}

/// Entrywise least non-negative residue.
IntegerMatrix mat_mod(const IntegerMatrix& a, const BigInt& m);

/// B with A*B = I (mod m), entries in [0, m); nothing when gcd(det A, m) > 1.
std::optional<IntegerMatrix> mat_inv_mod(const IntegerMatrix& a, const BigInt& m);

/// Number of walks of length p from city i to city j (1-based labels) in a
/// graph given by a symmetric non-negative incidence matrix.
BigInt path_count(const IntegerMatrix& incidence, Eigen::Index i, Eigen::Index j,
                  unsigned long long p);

void validate_incidence(const IntegerMatrix& incidence);

/// Least-squares polynomial; coefficients in ascending power. With
/// through_origin the constant term is pinned to zero.
struct FitResult {
  std::vector<double> coefficients;
  double sse = 0.0;
};

FitResult fit_poly(std::span<const Point<double>> points, unsigned degree, bool through_origin);

/// Maps samples (v, d) to (v, d / v); fitting a line there gives the model
/// d = a v^2 + b v with coefficients {b, a}.
std::vector<Point<double>> ratio_points(std::span<const Point<double>> points);

/// Friction coefficient mu from the quadratic braking term a = 1 / (2 mu g).
double friction_coefficient(double a, double g = 9.81);

/// Sum of squared residuals of the polynomial given by ascending coefficients.
double sum_squared_errors(std::span<const Point<double>> points, std::span<const double> coefficients);

}  // namespace mathbook::la
