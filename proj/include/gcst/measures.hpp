#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "gcst/errors.hpp"

namespace gcst::measures {

using cplx = std::complex<double>;

// Extra factor multiplying the Jacobi weight (2-x)^a (x+2)^b of a measure on
// [-2, 2]. The arcsine-argument variants take a scale parameter c.
enum class SmoothFactor {
    one,
    cos_scaled_arcsin,          // cos(c * arcsin(x/2))
    sin_scaled_shifted_arcsin,  // sin(c * (arcsin(x/2) + pi/2))
    sin_scaled_reflected_arcsin,// sin(c * (pi/2 - arcsin(x/2)))
    linear_minus,               // (2 - x)
    linear_plus,                // (2 + x)
};

struct Atom {
    double location = 0;
    double mass = 0;
};

// A compactly supported measure: continuous density
//   (hi - x)^jacobi_a (x - lo)^jacobi_b * smooth(x) / norm_const
// on (support_lo, support_hi), plus finitely many atoms. continuous_mass
// records the designed mass of the continuous part so that bookkeeping
// identities (total mass, atom complements) hold exactly in floating point.
struct SpectralMeasure {
    double support_lo = -2.0;
    double support_hi = 2.0;
    double jacobi_a = 0.0;
    double jacobi_b = 0.0;
    SmoothFactor smooth = SmoothFactor::one;
    double smooth_c = 0.0;
    double norm_const = 1.0;
    double continuous_mass = 1.0;
    std::vector<Atom> atoms;
};

enum class UtildeKind {
    pow_lambda,          // z^lambda
    pow_over_one_minus_z2, // z^lambda / (1 - z^2)
    pow_over_one_plus_z, // z^lambda / (1 + z)
    pow_over_one_minus_z,// z^lambda / (1 - z)
};

enum class GtildeKind {
    one,
    inv_sqrt_z2_minus_4, // 1 / sqrt(z^2 - 4)
    inv_z_plus_2,        // 1 / (z + 2)
    inv_z_minus_2,       // 1 / (z - 2)
};

// One Beta-type family instantiated at a concrete lambda: the Beta exponents
// of the standardized base measure on [-2, 2], the semicircle parameters
// (m, sigma) of the companion triangular element, the exponent split
// (alpha, gamma) with alpha + gamma = 1, the structure of the auxiliary
// transform factors, and the affine map x_std = affine_scale * x_raw +
// affine_shift from raw to standardized coordinates.
struct FamilySpec {
    int family_id = 0;
    double lambda = 0;
    double lambda_min = 0;
    double jacobi_a = 0; // exponent of (2 - x) in standardized coordinates
    double jacobi_b = 0; // exponent of (x + 2)
    double m = 0;
    double sigma = 0;
    double alpha = 0;
    double gamma = 0;
    UtildeKind utilde = UtildeKind::pow_lambda;
    GtildeKind gtilde = GtildeKind::one;
    double affine_scale = 1;
    double affine_shift = 0;
};

// Populate the family table entry; id in {1,2,3,4}, lambda > lambda_min.
FamilySpec family(int id, double lambda);

// Normalized standardized base measure on [-2, 2] (pure Beta weight).
SpectralMeasure standardized_mu(const FamilySpec& spec);
// Same measure in raw coordinates (support depends on lambda).
SpectralMeasure raw_mu(const FamilySpec& spec);

// Companion discrete/arcsine mixture driving the exponential (Markov) kernel.
// Family 2 requires lambda >= 1; below that an atom mass would be negative.
SpectralMeasure tau_measure(const FamilySpec& spec);

// The Markov-transform image measure (probability measure on [-2, 2]).
// Family 2 requires lambda >= 1.
SpectralMeasure nu_measure(const FamilySpec& spec);

// Density of nu_measure at x in (-2, 2); 0.0 for |x| > 2; the endpoints,
// where the density can diverge, raise DomainError.
double nu_density(const FamilySpec& spec, double x);

// Pushforward under y = scale * x + shift, scale > 0. Only measures whose
// smooth factor is `one` keep the representable form.
SpectralMeasure affine_pushforward(const SpectralMeasure& m, double scale, double shift);

// Integral of g against the *unnormalized* continuous weight
// (hi-x)^a (x-lo)^b smooth(x). Trig smooth factors on [-2, 2] are integrated
// in the angular variable x = -2 cos(2 psi), which restores geometric
// convergence that the plain rule loses on those densities.
cplx integrate_continuous(const SpectralMeasure& m, const std::function<cplx(double)>& g,
                          int order);

// Integral of g against the full normalized measure (continuous part / norm
// plus atoms).
cplx integrate_measure(const SpectralMeasure& m, const std::function<cplx(double)>& g,
                       int order);

// Total mass by quadrature (diagnostic; should be ~1 for catalog measures).
double total_mass(const SpectralMeasure& m, int order = 256);

// Human-readable labels used by the CLI.
std::string utilde_label(UtildeKind k);
std::string gtilde_label(GtildeKind k);

} // namespace gcst::measures
