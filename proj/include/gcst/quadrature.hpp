#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "gcst/measures.hpp"

namespace gcst::quad {

using cplx = std::complex<double>;

// Gauss-Jacobi rule for the weight (1-x)^a (1+x)^b on (-1, 1).
struct QuadratureRule {
    double a = 0, b = 0;
    int order = 0;
    std::vector<double> nodes;   // ascending, interior to (-1, 1)
    std::vector<double> weights; // positive, sum = 2^(a+b+1) B(a+1, b+1)
};

// Golub-Welsch construction; requires a > -1, b > -1, order >= 1.
QuadratureRule jacobi_rule(double a, double b, int order);

// Integral over (lo, hi) of (hi-x)^a (x-lo)^b f(x) dx for smooth f: the Jacobi
// weight is implicit, the integrand callback supplies only the smooth factor.
cplx integrate(const QuadratureRule& rule, const std::function<cplx(double)>& f,
               double lo, double hi);

// int log(z - x) dtau(x) over the continuous part and atoms of tau, principal
// branch. Requires z off the support (Re(z) > support or Im(z) != 0).
cplx log_kernel(const QuadratureRule& rule, cplx z, const measures::SpectralMeasure& tau);

} // namespace gcst::quad
