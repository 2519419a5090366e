#pragma once

// Complex numbers in binomial form over any field scalar (double, or Rational
// for exact division), polar form with the principal argument in (-pi, pi],
// n-th roots, phasor sums and series RLC circuits.

#include "mathbook/error.hpp"
#include "mathbook/scalar.hpp"

#include <optional>
#include <span>
#include <vector>

namespace mathbook::cx {

template <class S>
struct Complex {
  S re{};
  S im{};

  friend bool operator==(const Complex&, const Complex&) = default;
};

template <class S>
Complex<S> c_add(const Complex<S>& z, const Complex<S>& w) {
  return {z.re + w.re, z.im + w.im};
}

template <class S>
Complex<S> c_sub(const Complex<S>& z, const Complex<S>& w) {
  return {z.re - w.re, z.im - w.im};
}

/// (a, b)(c, d) = (ac - bd, ad + bc).
template <class S>
Complex<S> c_mul(const Complex<S>& z, const Complex<S>& w) {
  return {z.re * w.re - z.im * w.im, z.re * w.im + z.im * w.re};
}

template <class S>
Complex<S> c_conj(const Complex<S>& z) {
  return {z.re, -z.im};
}

template <class S>
S c_norm2(const Complex<S>& z) {
  return z.re * z.re + z.im * z.im;
}

/// conj(z) / (z conj(z)). DivisionByZero for z = 0.
template <class S>
Complex<S> c_inv(const Complex<S>& z) {
  const S n = c_norm2(z);
  if (n == S(0)) raise(ErrorKind::DivisionByZero, "zero has no inverse");
  return {z.re / n, -z.im / n};
}

template <class S>
Complex<S> c_div(const Complex<S>& z, const Complex<S>& w) {
  const S n = c_norm2(w);
  if (n == S(0)) raise(ErrorKind::DivisionByZero, "division by zero");
  const Complex<S> num = c_mul(z, c_conj(w));
  return {num.re / n, num.im / n};
}

using ComplexD = Complex<double>;
using ComplexQ = Complex<Rational>;

struct Polar {
  double modulus = 0.0;
  double argument = 0.0;  // radians, (-pi, pi]
};

/// Maps any angle into (-pi, pi].
double principal_argument(double theta);

/// arg(0) is defined as 0.
Polar to_polar(const ComplexD& z);
ComplexD to_rect(const Polar& p);

Polar polar_mul(const Polar& p, const Polar& q);
Polar polar_div(const Polar& p, const Polar& q);

/// |z|^n at angle n theta. DivisionByZero for 0 raised to a negative power.
Polar de_moivre_pow(const Polar& p, long long n);

/// k = 0 .. n-1: |z|^(1/n) at (theta + 2 k pi) / n. ZeroInput for z = 0.
std::vector<Polar> nth_roots(const ComplexD& z, unsigned n);

/// Sum through the binomial form. EmptyList on no input.
Polar phasor_sum(std::span<const Polar> phasors);

double deg_to_rad(double d);
double rad_to_deg(double r);

/// Series RLC driven at angular frequency w by the current amplitude i0.
/// No capacitance means no capacitor (zero reactance).
struct CircuitSpec {
  double i0 = 1.0;
  double w = 0.0;
  double r = 0.0;
  double l = 0.0;
  std::optional<double> c;
};

struct RlcResult {
  ComplexD impedance;  // R + j(wL - 1/(wC))
  Polar source;        // V_s = I0 Z
  Polar v_r;
  Polar v_l;
  Polar v_c;
  double amplitude = 0.0;  // I0 |Z|
  double phase = 0.0;      // arctan of reactance over R, radians
};

RlcResult series_rlc_source(const CircuitSpec& spec);

/// Current amplitude through the series circuit under a source amplitude v.
double series_rlc_current(double v, const CircuitSpec& spec);

}  // namespace mathbook::cx
