#include "gcst/special.hpp"

#include <cmath>
#include <numbers>

#include "gcst/errors.hpp"
#include "gcst/quadrature.hpp"

namespace gcst::special {

double log_gamma(double x) {
    if (!(x > 0)) throw DomainError("log_gamma: requires x > 0");
    return std::lgamma(x);
}

double gamma_fn(double x) {
    if (x <= 0 && x == std::floor(x)) throw DomainError("gamma_fn: pole at non-positive integer");
    return std::tgamma(x);
}

double beta_fn(double a, double b) {
    if (!(a > 0) || !(b > 0)) throw DomainError("beta_fn: requires a, b > 0");
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

double pochhammer(double a, int n) {
    if (n < 0) throw DomainError("pochhammer: requires n >= 0");
    double p = 1;
    for (int i = 0; i < n; ++i) p *= a + i;
    return p;
}

Rational pochhammer(const Rational& a, int n) {
    if (n < 0) throw DomainError("pochhammer: requires n >= 0");
    Rational p = 1;
    for (int i = 0; i < n; ++i) p *= a + i;
    return p;
}

cplx gauss_2f1(double a, double b, double c, cplx z) {
    if (c <= 0 && c == std::floor(c)) throw DomainError("gauss_2f1: c is a non-positive integer");
    if (std::abs(z) >= 1.0) throw DomainError("gauss_2f1: requires |z| < 1");
    cplx sum = 1.0, term = 1.0;
    for (int n = 0; n < 10000; ++n) {
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum)) return sum;
    }
    throw ConvergenceError("gauss_2f1: series did not converge in 10000 terms");
}

cplx gauss_2f1_euler(double a, double b, double c, cplx z, int order) {
    if (!(c > b && b > 0))
        throw DomainError("gauss_2f1_euler: integral representation needs c > b > 0");
    auto rule = quad::jacobi_rule(c - b - 1, b - 1, order);
    cplx integral = quad::integrate(
        rule, [&](double t) { return std::pow(1.0 - z * t, -a); }, 0.0, 1.0);
    double prefactor = std::exp(std::lgamma(c) - std::lgamma(b) - std::lgamma(c - b));
    return prefactor * integral;
}

double terminating_3f2(int n, double y) {
    if (n < 0) throw DomainError("terminating_3f2: requires n >= 0");
    if (y < 0 || y > 1) throw DomainError("terminating_3f2: requires y in [0, 1]");
    double a2 = 1 - y / 2, a3 = 1.5 - y / 2, b1 = 2 - y;
    double sum = 0, term = 1;
    for (int k = 0; k <= n; ++k) {
        sum += term;
        term *= -(double)(n - k) * (a2 + k) * (a3 + k) / ((b1 + k) * (k + 1.0) * (k + 1.0));
    }
    return sum;
}

Rational terminating_3f2(int n, const Rational& y) {
    if (n < 0) throw DomainError("terminating_3f2: requires n >= 0");
    if (y < 0 || y > 1) throw DomainError("terminating_3f2: requires y in [0, 1]");
    Rational a2 = 1 - y / 2;
    Rational a3 = Rational(3, 2) - y / 2;
    Rational b1 = 2 - y;
    Rational sum = 0, term = 1;
    for (int k = 0; k <= n; ++k) {
        sum += term;
        term *= Rational(-(n - k)) * (a2 + k) * (a3 + k);
        term /= (b1 + k) * (k + 1) * (k + 1);
    }
    return sum;
}

double cosine_power_integral(double p, double q) {
    if (!(p + q > 1)) throw DomainError("cosine_power_integral: requires p + q > 1");
    return std::numbers::pi / std::pow(2.0, p + q - 1) *
           std::exp(std::lgamma(p + q - 1) - std::lgamma(p) - std::lgamma(q));
}

std::pair<double, double> duplication_check(int k, double y) {
    double lhs = 0.5 * std::log(std::numbers::pi) + std::lgamma(2 * k + 2 - y);
    double rhs = (2 * k + 1 - y) * std::numbers::ln2 + std::lgamma(k + 1 - y / 2) +
                 std::lgamma(k + 1.5 - y / 2);
    return {std::exp(lhs), std::exp(rhs)};
}

} // namespace gcst::special
