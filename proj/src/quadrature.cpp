#include "gcst/quadrature.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

#include <Eigen/Dense>

#include "gcst/errors.hpp"

namespace gcst::quad {

namespace {

QuadratureRule build_rule(double a, double b, int order) {
    // Golub-Welsch: nodes are eigenvalues of the Jacobi-polynomial recurrence
    // matrix, weights come from the first components of the eigenvectors.
    Eigen::VectorXd diag(order), sub(order - 1 > 0 ? order - 1 : 0);
    double ab = a + b;
    for (int k = 0; k < order; ++k) {
        if (k == 0)
            diag[k] = (b - a) / (ab + 2);
        else
            diag[k] = (b * b - a * a) / ((2 * k + ab) * (2 * k + ab + 2));
    }
    for (int k = 1; k < order; ++k) {
        double beta;
        if (k == 1)
            beta = 4 * (a + 1) * (b + 1) / ((ab + 2) * (ab + 2) * (ab + 3));
        else
            beta = 4.0 * k * (k + a) * (k + b) * (k + ab) /
                   ((2 * k + ab) * (2 * k + ab) * (2 * k + ab + 1) * (2 * k + ab - 1));
        sub[k - 1] = std::sqrt(beta);
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub);
    if (solver.info() != Eigen::Success)
        throw NumericalError("jacobi_rule: tridiagonal eigensolve failed");

    double mu0 = std::exp((ab + 1) * std::numbers::ln2 + std::lgamma(a + 1) +
                          std::lgamma(b + 1) - std::lgamma(ab + 2));

    QuadratureRule rule;
    rule.a = a;
    rule.b = b;
    rule.order = order;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    for (int i = 0; i < order; ++i) {
        rule.nodes[i] = solver.eigenvalues()[i];
        double v0 = solver.eigenvectors()(0, i);
        rule.weights[i] = mu0 * v0 * v0;
    }
    return rule;
}

uint64_t bits_of(double x) {
    uint64_t u;
    std::memcpy(&u, &x, sizeof u);
    return u;
}

} // namespace

QuadratureRule jacobi_rule(double a, double b, int order) {
    if (!(a > -1) || !(b > -1)) throw DomainError("jacobi_rule: requires a, b > -1");
    if (order < 1) throw DomainError("jacobi_rule: requires order >= 1");

    static std::mutex cache_mutex;
    static std::map<std::tuple<uint64_t, uint64_t, int>, QuadratureRule> cache;
    auto key = std::make_tuple(bits_of(a), bits_of(b), order);
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    QuadratureRule rule = build_rule(a, b, order);
    {
        std::lock_guard lock(cache_mutex);
        cache.emplace(key, rule);
    }
    return rule;
}

cplx integrate(const QuadratureRule& rule, const std::function<cplx(double)>& f,
               double lo, double hi) {
    double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
    cplx sum = 0;
    for (int i = 0; i < rule.order; ++i)
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return std::pow(half, rule.a + rule.b + 1) * sum;
}

cplx log_kernel(const QuadratureRule& rule, cplx z, const measures::SpectralMeasure& tau) {
    if (z.imag() == 0 && z.real() <= tau.support_hi)
        throw DomainError("log_kernel: z must lie off the support");
    cplx sum = 0;
    if (tau.continuous_mass != 0.0)
        sum = measures::integrate_continuous(
                  tau, [&](double x) { return std::log(z - x); }, rule.order) /
              tau.norm_const;
    for (const auto& atom : tau.atoms) sum += atom.mass * std::log(z - atom.location);
    return sum;
}

} // namespace gcst::quad
