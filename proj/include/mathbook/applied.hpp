#pragma once

// Worked applications: projectiles, triangle laws, the wind triangle,
// Richter and Aristarchus ratios, unrotated conics and the chimney ellipse.
// Angles are degrees unless a name says otherwise.

#include "mathbook/scalar.hpp"

#include <string>
#include <vector>

namespace mathbook::applied {

struct Projectile {
  double range = 0.0;
  double flight_time = 0.0;
};

/// Range v0^2 sin(2 alpha) / g and flight time 2 v0 sin(alpha) / g.
/// OutOfRange unless v0 > 0, 0 < alpha < 90 and g > 0.
Projectile projectile(double v0, double alpha_deg, double g = 9.80);

double law_of_cosines(double b, double c, double alpha_deg);
double law_of_sines(double a, double alpha_deg, double beta_deg);

struct WindSolution {
  double ground_speed = 0.0;  // knots
  double drift_deg = 0.0;     // heading - course, signed
  double heading_deg = 0.0;   // in [0, 360)
};

/// `wind_from` is the direction the wind blows from. WindExceedsTas unless
/// 0 <= wind_speed < tas.
WindSolution wind_triangle(double true_course_deg, double tas, double wind_from_deg, double wind_speed);

/// | airspeed vector | - tas for the given solution; zero up to rounding.
double wind_recomposition_residual(double true_course_deg, double tas, double wind_from_deg,
                                   double wind_speed, const WindSolution& s);

/// 10^(m1 - m2).
double richter_ratio(double m1, double m2);

/// psi = pi half / cycle, phi = pi/2 - psi, ratio = 1 / sin(phi).
/// OutOfRange unless 0 < half < cycle / 2 and the ratio stays below 1e6.
double aristarchus_ratio(double half_to_half_days, double cycle_days);

enum class ConicKind {
  Circle,
  Ellipse,
  HyperbolaH,
  HyperbolaV,
  Parabola,
  DegeneratePoint,
  DegenerateLines,
  Empty
};

std::string name(ConicKind k);

/// alpha (x - x0)^2 + beta (y - y0)^2 + lx (x - x0) + ly (y - y0) = gamma,
/// kept exact and equal to the input equation divided by a positive number.
/// Central conics have lx = ly = 0 and gamma = +-1; parabolas have one squared
/// term and one linear term. The double fields describe the geometry: for
/// central conics a is the semi-major and b the semi-minor half-axis (for
/// hyperbolas a is the transverse half-axis) and `focal` the center-to-focus
/// distance; for a parabola `focal` is the vertex-to-focus distance.
struct ConicCanonical {
  ConicKind kind = ConicKind::Empty;
  Rational x0, y0;
  Rational alpha, beta, lx, ly, gamma;
  char major_axis = 'x';
  double a = 0.0;
  double b = 0.0;
  double e = 0.0;
  double focal = 0.0;
  std::vector<Point<double>> foci;
};

/// A x^2 + C y^2 + D x + E y + F = 0 without an xy term, classified by
/// completing squares. NotAConic when A = C = 0.
ConicCanonical conic_canonical(const Rational& A, const Rational& C, const Rational& D,
                               const Rational& E, const Rational& F);

struct ConicCoefficients {
  Rational A, C, D, E, F;
};

/// Expands the canonical equation back to A x^2 + C y^2 + D x + E y + F = 0.
ConicCoefficients conic_coefficients(const ConicCanonical& c);

struct ChimneyEllipse {
  double semi_major = 0.0;     // S = R sqrt(1 + sin^2 alpha)
  double focal = 0.0;          // F = R sin alpha
  double string_length = 0.0;  // L = 2 R sqrt(1 + sin^2 alpha)
};

/// Hole for a tube of radius R through a roof of pitch alpha.
/// OutOfRange unless R > 0 and 0 <= alpha < 90.
ChimneyEllipse cylinder_ellipse(double radius, double alpha_deg);

}  // namespace mathbook::applied
