#pragma once

#include <complex>
#include <utility>

#include "gcst/rational.hpp"

namespace gcst::special {

using cplx = std::complex<double>;

double log_gamma(double x); // requires x > 0
double gamma_fn(double x);
double beta_fn(double a, double b); // requires a, b > 0

double pochhammer(double a, int n);
Rational pochhammer(const Rational& a, int n);

// Gauss hypergeometric 2F1(a, b; c; z) by direct series, |z| < 1.
// Terms are added until |term| < 1e-16 * |sum|; more than 10000 terms raises
// ConvergenceError.
cplx gauss_2f1(double a, double b, double c, cplx z);

// Same function through the Euler integral representation,
//   2F1 = Gamma(c) / (Gamma(b) Gamma(c-b)) * int_0^1 t^(b-1) (1-t)^(c-b-1) (1-zt)^(-a) dt,
// evaluated with a Gauss-Jacobi rule of the given order. Requires c > b > 0.
// Used as an independent cross-check of the series path.
cplx gauss_2f1_euler(double a, double b, double c, cplx z, int order = 128);

// Terminating 3F2(-n, 1 - y/2, 3/2 - y/2; 2 - y, 1; 1). Exact in the rational
// overload; requires y in [0, 1] so no denominator Pochhammer vanishes.
double terminating_3f2(int n, double y);
Rational terminating_3f2(int n, const Rational& y);

// Closed form of int_0^{pi/2} cos((p-q)x) cos(x)^(p+q-2) dx
//   = pi / 2^(p+q-1) * Gamma(p+q-1) / (Gamma(p) Gamma(q)),  p + q > 1.
double cosine_power_integral(double p, double q);

// Both sides of sqrt(pi) Gamma(2k+2-y) = 2^(2k+1-y) Gamma(k+1-y/2) Gamma(k+3/2-y/2).
std::pair<double, double> duplication_check(int k, double y);

} // namespace gcst::special
