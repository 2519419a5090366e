#include "mathbook/complex.hpp"

#include <cmath>
#include <numbers>

namespace mathbook::cx {

using std::numbers::pi;

double principal_argument(double theta) {
  double t = std::remainder(theta, 2.0 * pi);
  if (t <= -pi) t += 2.0 * pi;
  return t;
}

Polar to_polar(const ComplexD& z) {
  if (z.re == 0.0 && z.im == 0.0) return {0.0, 0.0};
  return {std::hypot(z.re, z.im), std::atan2(z.im, z.re)};
}

ComplexD to_rect(const Polar& p) {
  return {p.modulus * std::cos(p.argument), p.modulus * std::sin(p.argument)};
}

Polar polar_mul(const Polar& p, const Polar& q) {
  return {p.modulus * q.modulus, principal_argument(p.argument + q.argument)};
}

Polar polar_div(const Polar& p, const Polar& q) {
  if (q.modulus == 0.0) raise(ErrorKind::DivisionByZero, "division by zero");
  return {p.modulus / q.modulus, principal_argument(p.argument - q.argument)};
}

Polar de_moivre_pow(const Polar& p, long long n) {
  if (p.modulus == 0.0) {
    if (n < 0) raise(ErrorKind::DivisionByZero, "zero to a negative power");
    return n == 0 ? Polar{1.0, 0.0} : Polar{0.0, 0.0};
  }
  const double nd = static_cast<double>(n);
  return {std::pow(p.modulus, nd), principal_argument(nd * p.argument)};
}

std::vector<Polar> nth_roots(const ComplexD& z, unsigned n) {
  if (n == 0) raise(ErrorKind::InvalidInput, "root index must be at least 1");
  if (z.re == 0.0 && z.im == 0.0) raise(ErrorKind::ZeroInput, "zero has no distinct roots");
  const Polar p = to_polar(z);
  const double r = std::pow(p.modulus, 1.0 / n);
  std::vector<Polar> roots;
  roots.reserve(n);
  for (unsigned k = 0; k < n; ++k) {
    roots.push_back({r, principal_argument((p.argument + 2.0 * pi * k) / n)});
  }
  return roots;
}

Polar phasor_sum(std::span<const Polar> phasors) {
  if (phasors.empty()) raise(ErrorKind::EmptyList, "nothing to add");
  ComplexD acc;
  for (const auto& p : phasors) acc = c_add(acc, to_rect(p));
  return to_polar(acc);
}

double deg_to_rad(double d) { return d * pi / 180.0; }
double rad_to_deg(double r) { return r * 180.0 / pi; }

namespace {

void validate(const CircuitSpec& s) {
  if (!(s.w > 0.0)) raise(ErrorKind::InvalidCircuit, "angular frequency must be positive");
  if (s.r < 0.0 || s.l < 0.0) raise(ErrorKind::InvalidCircuit, "R and L must be non-negative");
  if (s.c && !(*s.c > 0.0)) raise(ErrorKind::InvalidCircuit, "capacitance must be positive");
}

}  // namespace

RlcResult series_rlc_source(const CircuitSpec& spec) {
  validate(spec);
  const double xl = spec.w * spec.l;
  const double xc = spec.c ? -1.0 / (spec.w * *spec.c) : 0.0;
  RlcResult out;
  out.impedance = {spec.r, xl + xc};
  const Polar current{spec.i0, 0.0};
  out.source = polar_mul(current, to_polar(out.impedance));
  out.v_r = polar_mul(current, to_polar(ComplexD{spec.r, 0.0}));
  out.v_l = polar_mul(current, to_polar(ComplexD{0.0, xl}));
  out.v_c = polar_mul(current, to_polar(ComplexD{0.0, xc}));
  out.amplitude = spec.i0 * std::hypot(spec.r, xl + xc);
  out.phase = std::atan2(xl + xc, spec.r);
  return out;
}

double series_rlc_current(double v, const CircuitSpec& spec) {
  CircuitSpec unit = spec;
  unit.i0 = 1.0;
  const double z = series_rlc_source(unit).amplitude;
  if (z == 0.0) raise(ErrorKind::InvalidCircuit, "zero impedance");
  return v / z;
}

}  // namespace mathbook::cx
