#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "gcst/measures.hpp"

namespace gcst::transforms {

using cplx = std::complex<double>;
using measures::FamilySpec;
using measures::SpectralMeasure;

using Transform = std::function<cplx(cplx)>;

// Cauchy transform of the standard semicircle on [-2, 2]:
//   G(z) = (z - sqrt(z-2) sqrt(z+2)) / 2,
// branch fixed by G(z) ~ 1/z at infinity and Im G < 0 for Im z > 0.
// z on the cut [-2, 2] raises DomainError.
cplx wigner_cst(cplx z);

// Cauchy transform of the arcsine law on [-2, 2]: 1 / (sqrt(z-2) sqrt(z+2)).
cplx arcsine_cst(cplx z);

// Cauchy transform int (z - x)^{-1} dm(x) by quadrature (atoms included).
cplx cst(const SpectralMeasure& m, cplx z, int order = 256);

// Generalized transform int (z - x)^{-lambda} dm(x), principal powers.
// Requires z off the real interval (-inf, support_hi].
cplx gcst(const SpectralMeasure& m, double lambda, cplx z, int order = 256);

// Closed-form factorized transform G(z)^alpha * Gtilde(z)^gamma of a family's
// Markov image measure. Powers of composite factors are evaluated as products
// of principal powers of (z-2) and (z+2) so that no spurious branch cut
// crosses the support.
cplx closed_form_cst(const FamilySpec& spec, cplx z);

struct VerificationReport {
    std::vector<cplx> grid;
    std::vector<cplx> lhs;
    std::vector<cplx> rhs;
    cplx fitted_constant{1.0, 0.0};
    double max_rel_dev = 0;
    bool passed = false;
};

// Checks gcst(mu_std, lambda, z)^(1/lambda) = c * G(z)^alpha Gtilde(z)^gamma
// on the grid: fits the single constant c by least squares (it should be 1
// for the normalized base measure) and reports the max relative deviation.
VerificationReport verify_powered_identity(const FamilySpec& spec,
                                           const std::vector<cplx>& grid,
                                           double tol, int order = 256);

// Checks cst(nu, z) = exp(-int log(z - x) dtau(x)) on the grid, directly,
// with no fitted constant.
VerificationReport verify_markov_identity(const FamilySpec& spec,
                                          const std::vector<cplx>& grid,
                                          double tol, int order = 256);

// exp(a log G1(z) + (1-a) log G2(z)), principal logs.
cplx geometric_mean_cst(const Transform& g1, const Transform& g2, double a, cplx z);

struct ImaginaryTypeReport {
    double max_upper_imag = 0;  // max Im T(z) over the grid (<= 0 if map is into C^-)
    bool maps_to_lower_half = false;
    int points = 0;
};

// Scans Im T(z) over an upper-half-plane grid; T of imaginary type maps into
// the closed lower half-plane.
ImaginaryTypeReport imaginary_type_scan(const Transform& t, const std::vector<cplx>& grid);

// Recovers the density at x from boundary values: -Im T(x + i eps) / pi along
// eps_k = 0.1 * 2^{-k}, k = 0..12, with Richardson extrapolation
// E_k = 2 f(eps_{k+1}) - f(eps_k). Diverging extrapolants raise
// ConvergenceError.
double stieltjes_invert(const Transform& t, double x);

} // namespace gcst::transforms
