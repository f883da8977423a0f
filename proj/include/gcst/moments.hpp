#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcst/rational.hpp"

namespace gcst::moments {

// Even moment m_{2n} of the family-2 image measure:
//   4^n * 3F2(-n, 1 - y/2, 3/2 - y/2; 2 - y, 1; 1),  y = 1/lambda.
// Requires lambda >= 1 (probability range).
double symmetric_moment(double lambda, int n);

// m_{2n} as a polynomial p_n(y) in y = 1/lambda; coefficients ascending,
// exact rationals. p_n(1) = C(2n, n) and p_n(0) = Catalan(n).
std::vector<Rational> moment_polynomial(int n);
Rational moment_polynomial_at(int n, const Rational& y);

// Family-2 density normalization
//   2^(1 - 1/lambda) sqrt(pi) Gamma(1-s) Gamma(3/2-s) / Gamma(2 - 1/lambda),
// s = 1/(2 lambda); lambda >= 1. (Identically equal to pi.)
double norm_constant_family2(double lambda);

// n-th moment of the family-3/4 image measure by the trigonometric series
// with asymptotic tail resummation. `terms` caps the number of series terms;
// the result carries an internal error estimate and raises ConvergenceError
// if that estimate exceeds tol.
double nonsymmetric_moment(int family, double lambda, int n, int terms = 5000,
                           double tol = 1e-7);

// Same moment through the angular-variable quadrature route (independent of
// the series); used for cross-verification. Works for all four families.
double moment_quadrature(int family, double lambda, int n, int order = 256);

// Both sides of the exponential generating function identity for p_n(y),
// truncated at N series terms. The right-hand side is the literal reference
// form 2^(1-y) e^{4z} 2F2(1 - y/2, (3-y)/2; 2 - y, 1; 4z); see the tests for
// the corrected variant that actually matches the left side.
std::pair<double, double> egf_check(double y, double z, int N);

struct MomentEntry {
    int order = 0;
    double value = 0;
    std::optional<Rational> exact;
};

struct MomentTable {
    int family_id = 0;
    double lambda = 0;
    std::string method;
    std::vector<MomentEntry> entries;
};

// Moments 0..n_max of the family's image measure. method selects the route:
// "hyp3f2" (family 2), "series" (families 3, 4), "quadrature" (any),
// "rational" (exact; family 1 any lambda, family 2 integer lambda).
MomentTable moment_table(int family, double lambda, int n_max, const std::string& method);

} // namespace gcst::moments
