#include "doctest.h"
#include "test_support.hpp"

#include "mathbook/applied.hpp"
#include "mathbook/complex.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace mathbook;
using namespace mathbook::applied;

namespace {

constexpr double pi = std::numbers::pi;

double rad(double d) { return d * pi / 180.0; }

}  // namespace

TEST_CASE("angle conversion") {
  CHECK(cx::deg_to_rad(60) == doctest::Approx(pi / 3));
  CHECK(cx::deg_to_rad(0) == 0.0);
  CHECK(std::abs(cx::rad_to_deg(1) - 57.3) <= 0.05);
  for (int i = 0; i <= 10000; ++i) {
    const double t = cx::deg_to_rad(i * 0.036 - 180.0);
    CHECK(std::abs(std::sin(t) * std::sin(t) + std::cos(t) * std::cos(t) - 1.0) < 1e-15);
  }
}

TEST_CASE("projectile") {
  const auto p = projectile(20, 45, 10);
  CHECK(p.range == doctest::Approx(40));
  CHECK(p.flight_time == doctest::Approx(2 * 20 * std::sin(rad(45)) / 10));
  CHECK(projectile(20, 1e-6).range < 1e-5);
  CHECK(projectile(20, 1e-6).range < projectile(20, 1e-3).range);

  double best = 0.0, best_alpha = 0.0;
  for (int a = 1; a < 90; ++a) {
    const double r = projectile(30, a).range;
    if (r > best) best = r, best_alpha = a;
    CHECK(std::abs(r - projectile(30, 90 - a).range) < 1e-9);
  }
  CHECK(best_alpha == 45);
  CHECK_KIND(projectile(0, 30), OutOfRange);
  CHECK_KIND(projectile(10, 90), OutOfRange);
  CHECK_KIND(projectile(10, 0), OutOfRange);
}

TEST_CASE("triangle laws") {
  CHECK(law_of_cosines(3, 4, 90) == doctest::Approx(5));
  CHECK(law_of_cosines(7, 3, 0) == doctest::Approx(4));
  CHECK(law_of_sines(5, 40, 40) == doctest::Approx(5));
  CHECK(law_of_sines(1, 30, 90) == doctest::Approx(2));
}

TEST_CASE("wind triangle") {
  const auto s = wind_triangle(143, 120, 140, 11);
  CHECK(std::abs(s.ground_speed - 109.01) <= 0.05);
  CHECK(std::abs(std::abs(s.drift_deg) - 0.27) <= 0.02);
  CHECK(wind_recomposition_residual(143, 120, 140, 11, s) < 1e-6);

  const auto calm = wind_triangle(200, 150, 30, 0);
  CHECK(calm.ground_speed == doctest::Approx(150));
  CHECK(calm.drift_deg == doctest::Approx(0.0));

  const auto head = wind_triangle(90, 150, 90, 30);
  CHECK(head.ground_speed == doctest::Approx(120));
  CHECK(head.drift_deg == doctest::Approx(0.0));

  CHECK_KIND(wind_triangle(90, 20, 0, 30), WindExceedsTas);
}

TEST_CASE("wind triangle against a vector oracle") {
  std::mt19937_64 rng(103);
  std::uniform_real_distribution<double> angle(0, 360), tas(80, 500), frac(0, 0.95);
  for (int trial = 0; trial < 1000; ++trial) {
    const double tc = angle(rng), v = tas(rng), wd = angle(rng), w = frac(rng) * v;
    const auto s = wind_triangle(tc, v, wd, w);
    // East/north components; wind blows toward wd + 180.
    const double gx = s.ground_speed * std::sin(rad(tc)), gy = s.ground_speed * std::cos(rad(tc));
    const double wx = -w * std::sin(rad(wd)), wy = -w * std::cos(rad(wd));
    const double ax = gx - wx, ay = gy - wy;
    CHECK(std::abs(std::hypot(ax, ay) - v) < 1e-6);
    CHECK(std::abs(cx::principal_argument(std::atan2(ax, ay) - rad(tc + s.drift_deg))) < 1e-9);
    CHECK(s.ground_speed > 0);
    CHECK(std::abs(s.drift_deg) < 90);
    CHECK(wind_recomposition_residual(tc, v, wd, w, s) < 1e-6);
  }
}

TEST_CASE("ratios") {
  CHECK(std::abs(richter_ratio(8.1, 7.9) - 1.585) <= 0.001);
  CHECK(std::abs(richter_ratio(9.5, 8.1) - 25.1) <= 0.1);
  CHECK(richter_ratio(6, 6) == 1.0);

  const double psi = pi * 14.25 / 29.5;
  CHECK(aristarchus_ratio(14.25, 29.5) == doctest::Approx(1 / std::sin(pi / 2 - psi)));
  CHECK(std::abs(aristarchus_ratio(14.25, 29.5) - 18.79) < 0.01);
  CHECK(std::abs(1 / std::sin(rad(3)) - 19.1) < 0.05);  // the same estimate with phi rounded to 3 degrees
  CHECK(aristarchus_ratio(7.5, 30) == doctest::Approx(std::sqrt(2.0)));
  CHECK_KIND(aristarchus_ratio(14.75, 29.5), OutOfRange);
  CHECK_KIND(aristarchus_ratio(14.7499999999, 29.5), OutOfRange);
  CHECK_KIND(aristarchus_ratio(0, 29.5), OutOfRange);
}

TEST_CASE("conic classification") {
  const auto lines = conic_canonical(1, -1, 0, 0, 0);
  CHECK(lines.kind == ConicKind::DegenerateLines);

  const auto parabola = conic_canonical(1, 0, -2, -1, -3);
  CHECK(parabola.kind == ConicKind::Parabola);
  CHECK(parabola.x0 == 1);
  CHECK(parabola.y0 == -4);
  REQUIRE(parabola.foci.size() == 1);
  CHECK(parabola.foci[0].y - (-4) == doctest::Approx(0.25));

  const auto ellipse = conic_canonical(25, 36, 0, 0, -900);
  CHECK(ellipse.kind == ConicKind::Ellipse);
  CHECK(ellipse.a == doctest::Approx(6));
  CHECK(ellipse.b == doctest::Approx(5));
  CHECK(ellipse.e == doctest::Approx(std::sqrt(11.0) / 6));
  REQUIRE(ellipse.foci.size() == 2);
  CHECK(std::abs(ellipse.foci[0].x) == doctest::Approx(std::sqrt(11.0)));
  CHECK(ellipse.foci[0].y == 0.0);

  CHECK(conic_canonical(1, 1, -2, 0, -3).kind == ConicKind::Circle);
  CHECK(conic_canonical(1, 1, 0, 0, 0).kind == ConicKind::DegeneratePoint);
  CHECK(conic_canonical(1, 1, 0, 0, 1).kind == ConicKind::Empty);
  CHECK(conic_canonical(1, -4, 0, 0, -4).kind == ConicKind::HyperbolaH);
  CHECK(conic_canonical(-1, 4, 0, 0, -4).kind == ConicKind::HyperbolaV);
  CHECK(conic_canonical(-1, 4, 0, 0, 4).kind == ConicKind::HyperbolaH);
  CHECK(conic_canonical(-25, -36, 0, 0, 900).kind == ConicKind::Ellipse);
  CHECK(conic_canonical(-1, -1, 0, 0, -1).kind == ConicKind::Empty);
  CHECK(conic_canonical(-1, 0, 0, 0, -1).kind == ConicKind::Empty);
  CHECK(conic_canonical(-1, 0, 0, 0, 1).kind == ConicKind::DegenerateLines);
  CHECK_KIND(conic_canonical(0, 0, 1, 1, 0), NotAConic);
}

TEST_CASE("conic invariants") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 1000; ++trial) {
    auto r = [&] { return Rational(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 3)); };
    const Rational a = r(), c = r(), d = r(), e = r(), f = r();
    if (a == 0 && c == 0) continue;
    const auto k = conic_canonical(a, c, d, e, f);
    if (k.kind == ConicKind::Ellipse) {
      const double big = std::max(k.a, k.b), small = std::min(k.a, k.b);
      CHECK(k.focal * k.focal + small * small == doctest::Approx(big * big));
      CHECK(k.e >= 0.0);
      CHECK(k.e < 1.0);
    }
    if (k.kind == ConicKind::HyperbolaH || k.kind == ConicKind::HyperbolaV) {
      CHECK(k.focal * k.focal == doctest::Approx(k.a * k.a + k.b * k.b));
      CHECK(k.e > 1.0);
    }
    const auto back = conic_coefficients(k);
    const Rational in[5] = {a, c, d, e, f}, out[5] = {back.A, back.C, back.D, back.E, back.F};
    std::optional<Rational> scale;
    for (int i = 0; i < 5; ++i) {
      CHECK((in[i] == 0) == (out[i] == 0));
      if (in[i] == 0) continue;
      CHECK(out[i] / in[i] > 0);
      if (scale) CHECK(out[i] / in[i] == *scale);
      scale = out[i] / in[i];
    }
  }
}

TEST_CASE("chimney ellipse") {
  const auto flat = cylinder_ellipse(2, 0);
  CHECK(flat.semi_major == 2);
  CHECK(flat.focal == 0);
  CHECK(flat.string_length == 4);

  const auto c = cylinder_ellipse(1, 30);
  CHECK(c.semi_major == doctest::Approx(std::sqrt(1.25)));
  CHECK(c.focal == doctest::Approx(0.5));
  CHECK(c.string_length == doctest::Approx(2.2361).epsilon(1e-4));
  CHECK(c.semi_major * c.semi_major == doctest::Approx(c.focal * c.focal + 1));
  CHECK_KIND(cylinder_ellipse(1, 90), OutOfRange);
  CHECK_KIND(cylinder_ellipse(0, 10), OutOfRange);
}
