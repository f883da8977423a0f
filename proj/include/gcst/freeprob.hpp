#pragma once

#include <complex>
#include <vector>

#include "gcst/rational.hpp"

namespace gcst::freeprob {

using cplx = std::complex<double>;

// K-transform of the semicircle with mean m and variance sigma^2:
//   K(z) = sigma^2 z + m + 1/z.
cplx semicircle_k(double m, double sigma, cplx z);

// The auxiliary rational map whose inverse drives the K-transforms:
//   family 2: z^n / (1 - z^2),  family 3: z^n / (1 + z),  family 4: z^n / (1 - z).
cplx utilde_value(int family, int n, cplx z);

// Solves utilde_n(z) = w for the branch with z ~ w^(1/n) near w = 0, where
//   family 2: z^n / (1 - z^2),  family 3: z^n / (1 + z),  family 4: z^n / (1 - z).
// Radical closed forms exist for family 2 with n in {2, 3, 4} and families
// 3, 4 with n in {2, 3}; each closed form is branch-checked against a Newton
// continuation from w = 0 (BranchError on mismatch). Families 3, 4 with
// n = 4 use the continuation directly. n >= 5 raises UnsupportedError unless
// allow_continuation is set. Requires |w| <= 0.35.
cplx invert_utilde(int family, int n, cplx w, bool allow_continuation = false);

// K-transform of the family's n-fold object: K(u) = u + 1/u at
// u = invert_utilde(family, n, z^n); family 1 is K(z) = z + 1/z itself.
// Requires |z|^n within the invert_utilde domain.
cplx k_transform(int family, int n, cplx z);

// Free cumulants r_0, r_1, ..., r_kmax of the family-2, n = 2 object:
// odd-index entries r_{2k+1} = (-1)^k (1/2)_k (k + 3/2) / (k+1)!, even 0.
std::vector<Rational> cumulants_lambda2(int k_max);

// Moment -> free-cumulant conversion through the moment-cumulant recursion
//   m_n = sum_{k=1}^n kappa_k sum_{i_1+...+i_k = n-k} m_{i_1} ... m_{i_k};
// input m[0..N] with m[0] = 1, output kappa[0..N] with kappa[0] = 0.
std::vector<Rational> moments_to_free_cumulants(const std::vector<Rational>& m);
std::vector<Rational> free_cumulants_to_moments(const std::vector<Rational>& kappa);

// Laurent expansion K(z) = 1/z + sum_{j>=0} r_j z^j of k_transform around 0;
// coeffs[j] = r_j, exact rationals from Lagrange inversion. r_0 and r_1 are
// the mean and variance of the underlying measure. order <= 40.
struct KSeries {
    int family = 0;
    int n = 0;
    std::vector<Rational> coeffs;
};
KSeries series_k(int family, int n, int order);

} // namespace gcst::freeprob
