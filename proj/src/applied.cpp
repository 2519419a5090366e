#include "mathbook/applied.hpp"

#include "mathbook/complex.hpp"
#include "mathbook/error.hpp"

#include <cmath>
#include <numbers>

namespace mathbook::applied {

using cx::deg_to_rad;
using cx::rad_to_deg;
using std::numbers::pi;

Projectile projectile(double v0, double alpha_deg, double g) {
  if (!(v0 > 0.0) || !(alpha_deg > 0.0 && alpha_deg < 90.0) || !(g > 0.0)) {
    raise(ErrorKind::OutOfRange, "need v0 > 0, 0 < alpha < 90 and g > 0");
  }
  const double a = deg_to_rad(alpha_deg);
  return {v0 * v0 / g * std::sin(2.0 * a), 2.0 * v0 * std::sin(a) / g};
}

double law_of_cosines(double b, double c, double alpha_deg) {
  const double a2 = b * b + c * c - 2.0 * b * c * std::cos(deg_to_rad(alpha_deg));
  return std::sqrt(std::max(a2, 0.0));
}

double law_of_sines(double a, double alpha_deg, double beta_deg) {
  const double s = std::sin(deg_to_rad(alpha_deg));
  if (s == 0.0) raise(ErrorKind::OutOfRange, "alpha must not be a multiple of 180");
  return a * std::sin(deg_to_rad(beta_deg)) / s;
}

WindSolution wind_triangle(double true_course_deg, double tas, double wind_from_deg, double wind_speed) {
  if (!(wind_speed >= 0.0) || !(wind_speed < tas)) {
    raise(ErrorKind::WindExceedsTas, "wind speed must be below true airspeed");
  }
  const double delta = deg_to_rad(wind_from_deg - true_course_deg);
  const double wca = std::asin(wind_speed * std::sin(delta) / tas);
  WindSolution s;
  s.ground_speed = tas * std::cos(wca) - wind_speed * std::cos(delta);
  s.drift_deg = rad_to_deg(wca);
  s.heading_deg = std::fmod(true_course_deg + s.drift_deg + 360.0, 360.0);
  return s;
}

double wind_recomposition_residual(double true_course_deg, double tas, double wind_from_deg,
                                   double wind_speed, const WindSolution& s) {
  // Bearings measured clockwise from north: (east, north) = (sin, cos).
  const double tc = deg_to_rad(true_course_deg);
  const double wt = deg_to_rad(wind_from_deg + 180.0);
  const double ge = s.ground_speed * std::sin(tc), gn = s.ground_speed * std::cos(tc);
  const double we = wind_speed * std::sin(wt), wn = wind_speed * std::cos(wt);
  const double ae = ge - we, an = gn - wn;
  const double hd = deg_to_rad(s.heading_deg);
  const double along = std::hypot(ae, an) - tas;
  const double across = ae * std::cos(hd) - an * std::sin(hd);
  return std::hypot(along, across);
}

double richter_ratio(double m1, double m2) { return std::pow(10.0, m1 - m2); }

double aristarchus_ratio(double half_to_half_days, double cycle_days) {
  if (!(cycle_days > 0.0) || !(half_to_half_days > 0.0) || !(2.0 * half_to_half_days < cycle_days)) {
    raise(ErrorKind::OutOfRange, "need 0 < half < cycle / 2");
  }
  const double psi = pi * half_to_half_days / cycle_days;
  const double phi = pi / 2.0 - psi;
  const double ratio = 1.0 / std::sin(phi);
  if (!(ratio < 1e6)) raise(ErrorKind::OutOfRange, "grazing geometry");
  return ratio;
}

std::string name(ConicKind k) {
  switch (k) {
    case ConicKind::Circle: return "Circle";
    case ConicKind::Ellipse: return "Ellipse";
    case ConicKind::HyperbolaH: return "HyperbolaH";
    case ConicKind::HyperbolaV: return "HyperbolaV";
    case ConicKind::Parabola: return "Parabola";
    case ConicKind::DegeneratePoint: return "DegeneratePoint";
    case ConicKind::DegenerateLines: return "DegenerateLines";
    case ConicKind::Empty: return "Empty";
  }
  return "Unknown";
}

namespace {

void central_geometry(ConicCanonical& c) {
  // alpha (x-x0)^2 + beta (y-y0)^2 = gamma = +-1; u, v are the signed squared semi-axes.
  const double u = to_double(c.gamma / c.alpha);
  const double v = to_double(c.gamma / c.beta);
  const double x0 = to_double(c.x0), y0 = to_double(c.y0);
  if (c.kind == ConicKind::Circle || c.kind == ConicKind::Ellipse) {
    c.major_axis = u >= v ? 'x' : 'y';
    c.a = std::sqrt(std::max(u, v));
    c.b = std::sqrt(std::min(u, v));
    const double f = std::sqrt(c.a * c.a - c.b * c.b);
    c.focal = f;
    c.e = f / c.a;
    if (c.kind == ConicKind::Circle) {
      c.foci = {{x0, y0}};
    } else if (c.major_axis == 'x') {
      c.foci = {{x0 - f, y0}, {x0 + f, y0}};
    } else {
      c.foci = {{x0, y0 - f}, {x0, y0 + f}};
    }
  } else {
    const bool horizontal = c.kind == ConicKind::HyperbolaH;
    c.major_axis = horizontal ? 'x' : 'y';
    c.a = std::sqrt(horizontal ? u : v);
    c.b = std::sqrt(horizontal ? -v : -u);
    const double f = std::hypot(c.a, c.b);
    c.focal = f;
    c.e = f / c.a;
    c.foci = horizontal ? std::vector<Point<double>>{{x0 - f, y0}, {x0 + f, y0}}
                        : std::vector<Point<double>>{{x0, y0 - f}, {x0, y0 + f}};
  }
}

}  // namespace

ConicCanonical conic_canonical(const Rational& A, const Rational& C, const Rational& D,
                               const Rational& E, const Rational& F) {
  if (A == 0 && C == 0) raise(ErrorKind::NotAConic, "no quadratic term");
  ConicCanonical c;

  if (A != 0 && C != 0) {
    c.x0 = -D / (2 * A);
    c.y0 = -E / (2 * C);
    // A (x-x0)^2 + C (y-y0)^2 = R
    const Rational R = D * D / (4 * A) + E * E / (4 * C) - F;
    const bool same_sign = (A > 0) == (C > 0);
    if (R == 0) {
      c.alpha = A / abs(A);
      c.beta = C / abs(A);
      c.gamma = 0;
      c.kind = same_sign ? ConicKind::DegeneratePoint : ConicKind::DegenerateLines;
      if (same_sign) c.foci = {{to_double(c.x0), to_double(c.y0)}};
      return c;
    }
    // Dividing by |R| keeps the orientation of the input equation.
    c.alpha = A / abs(R);
    c.beta = C / abs(R);
    c.gamma = R > 0 ? 1 : -1;
    if (same_sign) {
      if (c.alpha * c.gamma < 0) {
        c.kind = ConicKind::Empty;
        return c;
      }
      c.kind = c.alpha == c.beta ? ConicKind::Circle : ConicKind::Ellipse;
    } else {
      c.kind = c.alpha * c.gamma > 0 ? ConicKind::HyperbolaH : ConicKind::HyperbolaV;
    }
    central_geometry(c);
    return c;
  }

  // One squared variable s with coefficient Q, its linear term L, the other
  // variable's linear term M: Q s^2 + L s + M t + F = 0.
  const bool x_squared = A != 0;
  const Rational Q = x_squared ? A : C;
  const Rational L = x_squared ? D : E;
  const Rational M = x_squared ? E : D;
  const Rational s0 = -L / (2 * Q);
  // Q (s - s0)^2 + M t + (F - L^2 / 4Q) = 0
  const Rational rest = F - L * L / (4 * Q);
  c.gamma = 0;
  (x_squared ? c.alpha : c.beta) = Q / abs(Q);
  (x_squared ? c.x0 : c.y0) = s0;

  if (M == 0) {
    // sgn(Q) (s - s0)^2 = -rest / |Q|: two parallel lines, one double line, or nothing.
    c.gamma = -rest / abs(Q);
    c.kind = c.gamma * Q < 0 ? ConicKind::Empty : ConicKind::DegenerateLines;
    return c;
  }

  // (s - s0)^2 = -(M / Q) (t - t0) with t0 = -rest / M.
  const Rational t0 = -rest / M;
  (x_squared ? c.y0 : c.x0) = t0;
  (x_squared ? c.ly : c.lx) = M / abs(Q);
  c.kind = ConicKind::Parabola;
  c.major_axis = x_squared ? 'y' : 'x';
  // (s - s0)^2 = 4 f (t - t0) with 4 f = -M / Q.
  const double f = to_double(-M / Q) / 4.0;
  c.focal = std::abs(f);
  c.e = 1.0;
  const double xs = to_double(c.x0), ys = to_double(c.y0);
  c.foci = {x_squared ? Point<double>{xs, ys + f} : Point<double>{xs + f, ys}};
  return c;
}

ConicCoefficients conic_coefficients(const ConicCanonical& c) {
  ConicCoefficients k;
  k.A = c.alpha;
  k.C = c.beta;
  k.D = -2 * c.alpha * c.x0 + c.lx;
  k.E = -2 * c.beta * c.y0 + c.ly;
  k.F = c.alpha * c.x0 * c.x0 + c.beta * c.y0 * c.y0 - c.lx * c.x0 - c.ly * c.y0 - c.gamma;
  return k;
}

ChimneyEllipse cylinder_ellipse(double radius, double alpha_deg) {
  if (!(radius > 0.0) || !(alpha_deg >= 0.0 && alpha_deg < 90.0)) {
    raise(ErrorKind::OutOfRange, "need R > 0 and 0 <= alpha < 90");
  }
  const double s = std::sin(deg_to_rad(alpha_deg));
  const double root = std::sqrt(1.0 + s * s);
  return {radius * root, radius * s, 2.0 * radius * root};
}

}  // namespace mathbook::applied
