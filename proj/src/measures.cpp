#include "gcst/measures.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <map>
#include <mutex>
#include <numbers>
#include <utility>

#include "gcst/moments.hpp"
#include "gcst/quadrature.hpp"

namespace gcst::measures {

namespace {

constexpr double pi = std::numbers::pi;

double smooth_value(const SpectralMeasure& m, double x) {
    switch (m.smooth) {
    case SmoothFactor::one: return 1.0;
    case SmoothFactor::cos_scaled_arcsin: return std::cos(m.smooth_c * std::asin(0.5 * x));
    case SmoothFactor::sin_scaled_shifted_arcsin:
        return std::sin(m.smooth_c * (std::asin(0.5 * x) + pi / 2));
    case SmoothFactor::sin_scaled_reflected_arcsin:
        return std::sin(m.smooth_c * (pi / 2 - std::asin(0.5 * x)));
    case SmoothFactor::linear_minus: return 2.0 - x;
    case SmoothFactor::linear_plus: return 2.0 + x;
    }
    throw Error("smooth_value: unreachable");
}

bool needs_angular_route(SmoothFactor s) {
    return s == SmoothFactor::cos_scaled_arcsin ||
           s == SmoothFactor::sin_scaled_shifted_arcsin ||
           s == SmoothFactor::sin_scaled_reflected_arcsin;
}

// Integral of (2-x)^a (x+2)^b S(x) g(x) dx over (-2, 2) through the angular
// substitution x = -2 cos(2 psi), psi in (0, pi/2). The endpoint powers turn
// into cos^(2a+1) psi sin^(2b+1) psi, so a Gauss-Jacobi rule in psi converges
// geometrically even though the trig factor S spoils the algebraic structure
// in x. arcsin(x/2) = 2 psi - pi/2 removes S's endpoint derivative blowup.
template <class T, class Fn>
T angular_integral(const SpectralMeasure& m, const Fn& g, int order) {
    double A = 2 * m.jacobi_a + 1, B = 2 * m.jacobi_b + 1;
    auto rule = quad::jacobi_rule(A, B, order);
    double quarter_pi = pi / 4;
    T sum{};
    for (int i = 0; i < rule.order; ++i) {
        double t = rule.nodes[i];
        double psi = (1 + t) * quarter_pi;     // distance from the x = -2 end
        double u = (1 - t) * quarter_pi;       // pi/2 - psi, exact from the node
        double x = -2 * std::cos(2 * psi);
        double sinc_u = std::sin(u) / u, sinc_psi = std::sin(psi) / psi;
        double factor = std::pow(sinc_u, A) * std::pow(sinc_psi, B);
        double s;
        switch (m.smooth) {
        case SmoothFactor::cos_scaled_arcsin: s = std::cos(m.smooth_c * (2 * psi - pi / 2)); break;
        case SmoothFactor::sin_scaled_shifted_arcsin: s = std::sin(2 * m.smooth_c * psi); break;
        case SmoothFactor::sin_scaled_reflected_arcsin: s = std::sin(2 * m.smooth_c * u); break;
        default: s = 1.0; break;
        }
        sum += rule.weights[i] * factor * s * g(x);
    }
    double scale = std::pow(4.0, m.jacobi_a + m.jacobi_b) * 8.0 * std::pow(quarter_pi, A + B + 1);
    return scale * sum;
}

template <class T, class Fn>
T continuous_integral(const SpectralMeasure& m, const Fn& g, int order) {
    if (needs_angular_route(m.smooth)) {
        if (m.support_lo != -2.0 || m.support_hi != 2.0)
            throw UnsupportedError("integrate_continuous: trig factors need support [-2, 2]");
        return angular_integral<T>(m, g, order);
    }
    auto rule = quad::jacobi_rule(m.jacobi_a, m.jacobi_b, order);
    double half = 0.5 * (m.support_hi - m.support_lo);
    double mid = 0.5 * (m.support_hi + m.support_lo);
    T sum{};
    for (int i = 0; i < rule.order; ++i) {
        double x = mid + half * rule.nodes[i];
        double s = m.smooth == SmoothFactor::one ? 1.0 : smooth_value(m, x);
        sum += rule.weights[i] * s * g(x);
    }
    return std::pow(half, m.jacobi_a + m.jacobi_b + 1) * sum;
}

template <class T, class Fn>
T measure_integral(const SpectralMeasure& m, const Fn& g, int order) {
    T sum{};
    if (m.continuous_mass != 0.0)
        sum = continuous_integral<T>(m, g, order) / m.norm_const;
    for (const auto& atom : m.atoms) sum += atom.mass * g(atom.location);
    return sum;
}

double beta_mass(double a, double b) {
    // int_{-2}^{2} (2-x)^a (x+2)^b dx
    return std::exp((a + b + 1) * 2 * std::numbers::ln2 + std::lgamma(a + 1) +
                    std::lgamma(b + 1) - std::lgamma(a + b + 2));
}

uint64_t bits_of(double x) {
    uint64_t u;
    std::memcpy(&u, &x, sizeof u);
    return u;
}

} // namespace

FamilySpec family(int id, double lambda) {
    FamilySpec s;
    s.family_id = id;
    s.lambda = lambda;
    switch (id) {
    case 1:
        s.lambda_min = 0.0;
        if (!(lambda > 0)) throw DomainError("family 1: requires lambda > 0");
        s.jacobi_a = lambda - 0.5;
        s.jacobi_b = lambda - 0.5;
        s.m = 0;
        s.sigma = std::sqrt((1 + lambda) / 2);
        s.gamma = 0.0;
        s.alpha = 1.0;
        s.utilde = UtildeKind::pow_lambda;
        s.gtilde = GtildeKind::one;
        s.affine_scale = 1 / s.sigma;
        s.affine_shift = 0;
        break;
    case 2:
        s.lambda_min = 0.5;
        if (!(lambda > 0.5)) throw DomainError("family 2: requires lambda > 1/2");
        s.jacobi_a = lambda - 1.5;
        s.jacobi_b = lambda - 1.5;
        s.m = 0;
        s.sigma = std::sqrt(lambda / 2);
        s.gamma = 1 / lambda;
        s.alpha = 1 - s.gamma;
        s.utilde = UtildeKind::pow_over_one_minus_z2;
        s.gtilde = GtildeKind::inv_sqrt_z2_minus_4;
        s.affine_scale = 1 / s.sigma;
        s.affine_shift = 0;
        break;
    case 3:
        s.lambda_min = 0.5;
        if (!(lambda > 0.5)) throw DomainError("family 3: requires lambda > 1/2");
        s.jacobi_a = lambda - 0.5;
        s.jacobi_b = lambda - 1.5;
        s.m = 1 / std::sqrt(2 * lambda - 1);
        s.sigma = lambda / std::sqrt(2 * lambda - 1);
        s.gamma = 1 / (2 * lambda);
        s.alpha = 1 - s.gamma;
        s.utilde = UtildeKind::pow_over_one_plus_z;
        s.gtilde = GtildeKind::inv_z_plus_2;
        s.affine_scale = std::sqrt(2 * lambda - 1) / lambda;
        s.affine_shift = -1 / lambda;
        break;
    case 4:
        s.lambda_min = 0.5;
        if (!(lambda > 0.5)) throw DomainError("family 4: requires lambda > 1/2");
        s.jacobi_a = lambda - 1.5;
        s.jacobi_b = lambda - 0.5;
        s.m = -1 / std::sqrt(2 * lambda - 1);
        s.sigma = lambda / std::sqrt(2 * lambda - 1);
        s.gamma = 1 / (2 * lambda);
        s.alpha = 1 - s.gamma;
        s.utilde = UtildeKind::pow_over_one_minus_z;
        s.gtilde = GtildeKind::inv_z_minus_2;
        s.affine_scale = std::sqrt(2 * lambda - 1) / lambda;
        s.affine_shift = 1 / lambda;
        break;
    default: throw DomainError("family: id must be in {1, 2, 3, 4}");
    }
    return s;
}

SpectralMeasure standardized_mu(const FamilySpec& spec) {
    SpectralMeasure m;
    m.jacobi_a = spec.jacobi_a;
    m.jacobi_b = spec.jacobi_b;
    m.norm_const = beta_mass(m.jacobi_a, m.jacobi_b);
    return m;
}

SpectralMeasure raw_mu(const FamilySpec& spec) {
    return affine_pushforward(standardized_mu(spec), 1 / spec.affine_scale,
                              -spec.affine_shift / spec.affine_scale);
}

SpectralMeasure tau_measure(const FamilySpec& spec) {
    if (spec.family_id == 2 && spec.lambda < 1)
        throw NotAProbabilityMeasure("tau_measure: family 2 needs lambda >= 1");
    SpectralMeasure m;
    m.jacobi_a = -0.5;
    m.jacobi_b = -0.5;
    switch (spec.family_id) {
    case 1:
        m.norm_const = pi;
        break;
    case 2: {
        double w = spec.alpha; // arcsine weight 1 - 1/lambda
        m.continuous_mass = w;
        m.norm_const = w > 0 ? pi / w : 1.0;
        double h = (1 - w) / 2;
        m.atoms = {{-2.0, h}, {2.0, h}};
        break;
    }
    case 3: {
        double w = spec.alpha; // 1 - 1/(2 lambda)
        m.continuous_mass = w;
        m.norm_const = pi / w;
        m.atoms = {{-2.0, 1 - w}};
        break;
    }
    case 4: {
        double w = spec.alpha;
        m.continuous_mass = w;
        m.norm_const = pi / w;
        m.atoms = {{2.0, 1 - w}};
        break;
    }
    }
    return m;
}

SpectralMeasure nu_measure(const FamilySpec& spec) {
    if (spec.family_id == 2 && spec.lambda < 1)
        throw NotAProbabilityMeasure("nu_measure: family 2 needs lambda >= 1");
    double s = 1 / (2 * spec.lambda);
    SpectralMeasure m;
    switch (spec.family_id) {
    case 1:
        m.jacobi_a = 0.5;
        m.jacobi_b = 0.5;
        m.norm_const = 2 * pi;
        break;
    case 2:
        m.jacobi_a = -s;
        m.jacobi_b = -s;
        m.smooth = SmoothFactor::cos_scaled_arcsin;
        m.smooth_c = 1 - 1 / spec.lambda;
        m.norm_const = moments::norm_constant_family2(spec.lambda);
        break;
    case 3:
        m.jacobi_a = 0;
        m.jacobi_b = -s;
        m.smooth = SmoothFactor::sin_scaled_reflected_arcsin;
        m.smooth_c = 1 - s;
        m.norm_const = angular_integral<double>(m, [](double) { return 1.0; }, 256);
        break;
    case 4:
        m.jacobi_a = -s;
        m.jacobi_b = 0;
        m.smooth = SmoothFactor::sin_scaled_shifted_arcsin;
        m.smooth_c = 1 - s;
        m.norm_const = angular_integral<double>(m, [](double) { return 1.0; }, 256);
        break;
    }
    return m;
}

double nu_density(const FamilySpec& spec, double x) {
    if (x < -2.0 || x > 2.0) return 0.0;
    if (x == -2.0 || x == 2.0)
        throw DomainError("nu_density: endpoint values may diverge");

    static std::mutex cache_mutex;
    static std::map<std::pair<int, uint64_t>, SpectralMeasure> cache;
    SpectralMeasure m;
    {
        std::lock_guard lock(cache_mutex);
        auto key = std::make_pair(spec.family_id, bits_of(spec.lambda));
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, nu_measure(spec)).first;
        m = it->second;
    }
    return std::pow(2 - x, m.jacobi_a) * std::pow(x + 2, m.jacobi_b) * smooth_value(m, x) /
           m.norm_const;
}

SpectralMeasure affine_pushforward(const SpectralMeasure& m, double scale, double shift) {
    if (!(scale > 0)) throw DomainError("affine_pushforward: requires scale > 0");
    if (m.smooth != SmoothFactor::one)
        throw UnsupportedError("affine_pushforward: only pure Beta-weight measures");
    SpectralMeasure out = m;
    out.support_lo = scale * m.support_lo + shift;
    out.support_hi = scale * m.support_hi + shift;
    out.norm_const = m.norm_const * std::pow(scale, m.jacobi_a + m.jacobi_b + 1);
    for (auto& atom : out.atoms) atom.location = scale * atom.location + shift;
    return out;
}

cplx integrate_continuous(const SpectralMeasure& m, const std::function<cplx(double)>& g,
                          int order) {
    return continuous_integral<cplx>(m, g, order);
}

cplx integrate_measure(const SpectralMeasure& m, const std::function<cplx(double)>& g,
                       int order) {
    return measure_integral<cplx>(m, g, order);
}

double total_mass(const SpectralMeasure& m, int order) {
    return measure_integral<double>(m, [](double) { return 1.0; }, order);
}

std::string utilde_label(UtildeKind k) {
    switch (k) {
    case UtildeKind::pow_lambda: return "z^lambda";
    case UtildeKind::pow_over_one_minus_z2: return "z^lambda/(1-z^2)";
    case UtildeKind::pow_over_one_plus_z: return "z^lambda/(1+z)";
    case UtildeKind::pow_over_one_minus_z: return "z^lambda/(1-z)";
    }
    return "";
}

std::string gtilde_label(GtildeKind k) {
    switch (k) {
    case GtildeKind::one: return "1";
    case GtildeKind::inv_sqrt_z2_minus_4: return "1/sqrt(z^2-4)";
    case GtildeKind::inv_z_plus_2: return "1/(z+2)";
    case GtildeKind::inv_z_minus_2: return "1/(z-2)";
    }
    return "";
}

} // namespace gcst::measures
