#include "gcst/freeprob.hpp"

#include <cmath>

#include "gcst/errors.hpp"
#include "gcst/special.hpp"

namespace gcst::freeprob {

namespace {

cplx int_pow(cplx z, int n) {
    cplx r = 1;
    for (int i = 0; i < n; ++i) r *= z;
    return r;
}

cplx utilde_deriv(int family, int n, cplx z) {
    cplx zn1 = int_pow(z, n - 1);
    switch (family) {
    case 2: {
        cplx d = 1.0 - z * z;
        return zn1 * (double(n) + double(2 - n) * z * z) / (d * d);
    }
    case 3: {
        cplx d = 1.0 + z;
        return zn1 * (double(n) + double(n - 1) * z) / (d * d);
    }
    case 4: {
        cplx d = 1.0 - z;
        return zn1 * (double(n) - double(n - 1) * z) / (d * d);
    }
    }
    throw DomainError("utilde_deriv: family must be 2, 3, or 4");
}

// Tracks the z ~ w^(1/n) branch from 0 to w in steps of ~1e-3, polishing
// with Newton at each step.
cplx continuation_invert(int family, int n, cplx w) {
    int steps = std::max(1, static_cast<int>(std::ceil(std::abs(w) / 1e-3)));
    cplx z = std::pow(w / double(steps), 1.0 / n);
    for (int j = 1; j <= steps; ++j) {
        cplx wj = w * (double(j) / steps);
        for (int it = 0; it < 50; ++it) {
            cplx f = utilde_value(family, n, z) - wj;
            if (std::abs(f) < 1e-15 * std::abs(wj)) break;
            z -= f / utilde_deriv(family, n, z);
        }
    }
    if (std::abs(utilde_value(family, n, z) - w) > 1e-12 * std::abs(w))
        throw ConvergenceError("invert_utilde: continuation did not converge");
    return z;
}

std::vector<cplx> depressed_cubic_roots(cplx p, cplx q) {
    cplx d = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    cplx a3 = -q / 2.0 + d;
    if (std::abs(a3) < std::abs(-q / 2.0 - d)) a3 = -q / 2.0 - d;
    cplx a = std::pow(a3, 1.0 / 3.0);
    cplx b = -p / (3.0 * a);
    const cplx omega(-0.5, std::sqrt(3.0) / 2.0);
    std::vector<cplx> roots;
    cplx rot = 1.0;
    for (int j = 0; j < 3; ++j) {
        roots.push_back(rot * a + b / rot);
        rot *= omega;
    }
    return roots;
}

std::vector<cplx> radical_roots(int family, int n, cplx w) {
    if (family == 2 && n == 2) {
        cplx r = std::sqrt(w / (1.0 + w));
        return {r, -r};
    }
    if (family == 2 && n == 3) {
        // z^3 + w z^2 - w = 0; z = Z - w/3 gives Z^3 + p Z + q
        cplx p = -w * w / 3.0;
        cplx q = 2.0 * w * w * w / 27.0 - w;
        auto roots = depressed_cubic_roots(p, q);
        for (auto& r : roots) r -= w / 3.0;
        return roots;
    }
    if (family == 2 && n == 4) {
        // v = z^2 satisfies v^2 + w v - w = 0
        cplx d = std::sqrt(w * w + 4.0 * w);
        std::vector<cplx> roots;
        for (cplx v : {(-w + d) / 2.0, (-w - d) / 2.0}) {
            cplx r = std::sqrt(v);
            roots.push_back(r);
            roots.push_back(-r);
        }
        return roots;
    }
    if (n == 2) {
        // family 3: z^2 - w z - w = 0; family 4: z^2 + w z - w = 0
        double sign = family == 3 ? 1.0 : -1.0;
        cplx d = std::sqrt(w * w + 4.0 * w);
        return {(sign * w + d) / 2.0, (sign * w - d) / 2.0};
    }
    // n == 3, families 3 and 4: already depressed
    cplx p = family == 3 ? -w : w;
    cplx q = -w;
    return depressed_cubic_roots(p, q);
}

// Truncated power-series coefficients of u(z) where utilde(u) = z^n with
// u ~ z at 0, from the Lagrange inversion formula u_m = [t^{m-1}] phi(t)^m / m
// with phi = (denominator)^(1/n).
std::vector<Rational> u_series(int family, int n, int length) {
    std::vector<Rational> c(length + 1, Rational(0));
    for (int m = 1; m <= length; ++m) {
        Rational q(m, n);
        switch (family) {
        case 2:
            if (m % 2 == 1) {
                int i = (m - 1) / 2;
                Rational v = binomial_rational(q, i) / m;
                c[m] = i % 2 == 0 ? v : -v;
            }
            break;
        case 3: c[m] = binomial_rational(q, m - 1) / m; break;
        case 4: {
            Rational v = binomial_rational(q, m - 1) / m;
            c[m] = (m - 1) % 2 == 0 ? v : -v;
            break;
        }
        }
    }
    return c;
}

// Coefficient of x^r in (sum_j m[j] x^j)^k, truncating at degree r.
Rational conv_power_coeff(const std::vector<Rational>& m, int k, int r) {
    std::vector<Rational> acc(r + 1, Rational(0));
    acc[0] = 1;
    for (int rep = 0; rep < k; ++rep) {
        std::vector<Rational> next(r + 1, Rational(0));
        for (int i = 0; i <= r; ++i) {
            if (acc[i] == 0) continue;
            for (int j = 0; i + j <= r && j < static_cast<int>(m.size()); ++j)
                next[i + j] += acc[i] * m[j];
        }
        acc = std::move(next);
    }
    return acc[r];
}

} // namespace

cplx semicircle_k(double m, double sigma, cplx z) {
    if (z == 0.0) throw DomainError("semicircle_k: z = 0 is the pole");
    return sigma * sigma * z + m + 1.0 / z;
}

cplx utilde_value(int family, int n, cplx z) {
    cplx zn = int_pow(z, n);
    switch (family) {
    case 2: return zn / (1.0 - z * z);
    case 3: return zn / (1.0 + z);
    case 4: return zn / (1.0 - z);
    }
    throw DomainError("utilde_value: family must be 2, 3, or 4");
}

cplx invert_utilde(int family, int n, cplx w, bool allow_continuation) {
    if (family < 2 || family > 4) throw DomainError("invert_utilde: family must be 2, 3, or 4");
    if (n < 2) throw DomainError("invert_utilde: requires n >= 2");
    if (std::abs(w) > 0.35) throw DomainError("invert_utilde: requires |w| <= 0.35");
    if (w == 0.0) return 0.0;

    bool has_radical = family == 2 ? n <= 4 : n <= 3;
    bool continuation_only = family != 2 && n == 4;
    if (!has_radical && !continuation_only && !allow_continuation)
        throw UnsupportedError("invert_utilde: no radical form for n >= 5; enable continuation");

    cplx zc = continuation_invert(family, n, w);
    if (!has_radical) return zc;

    auto roots = radical_roots(family, n, w);
    cplx best = roots[0];
    for (cplx r : roots)
        if (std::abs(r - zc) < std::abs(best - zc)) best = r;
    if (std::abs(best - zc) > 1e-8 * std::max(1.0, std::abs(zc)))
        throw BranchError("invert_utilde: radical roots disagree with continuation");
    return best;
}

cplx k_transform(int family, int n, cplx z) {
    if (z == 0.0) throw DomainError("k_transform: z = 0 is the pole");
    if (family == 1) return z + 1.0 / z;
    cplx u = invert_utilde(family, n, int_pow(z, n));
    return u + 1.0 / u;
}

std::vector<Rational> cumulants_lambda2(int k_max) {
    if (k_max < 0) throw DomainError("cumulants_lambda2: requires k_max >= 0");
    std::vector<Rational> r(k_max + 1, Rational(0));
    for (int k = 0; 2 * k + 1 <= k_max; ++k) {
        Rational val = special::pochhammer(Rational(1, 2), k) * (Rational(2 * k + 3) / 2) /
                       Rational(factorial_int(k + 1));
        r[2 * k + 1] = k % 2 == 0 ? val : -val;
    }
    return r;
}

std::vector<Rational> moments_to_free_cumulants(const std::vector<Rational>& m) {
    if (m.empty() || m[0] != 1)
        throw DomainError("moments_to_free_cumulants: requires m[0] = 1");
    int N = static_cast<int>(m.size()) - 1;
    std::vector<Rational> kappa(N + 1, Rational(0));
    for (int n = 1; n <= N; ++n) {
        Rational s = m[n];
        for (int k = 1; k < n; ++k) s -= kappa[k] * conv_power_coeff(m, k, n - k);
        kappa[n] = s;
    }
    return kappa;
}

std::vector<Rational> free_cumulants_to_moments(const std::vector<Rational>& kappa) {
    if (kappa.empty() || kappa[0] != 0)
        throw DomainError("free_cumulants_to_moments: requires kappa[0] = 0");
    int N = static_cast<int>(kappa.size()) - 1;
    std::vector<Rational> m(N + 1, Rational(0));
    m[0] = 1;
    for (int n = 1; n <= N; ++n) {
        Rational s = 0;
        for (int k = 1; k <= n; ++k) {
            std::vector<Rational> low(m.begin(), m.begin() + n); // moments < n suffice
            s += kappa[k] * conv_power_coeff(low, k, n - k);
        }
        m[n] = s;
    }
    return m;
}

KSeries series_k(int family, int n, int order) {
    if (order < 0 || order > 40) throw DomainError("series_k: order must be in [0, 40]");
    KSeries out;
    out.family = family;
    out.n = n;
    out.coeffs.assign(order + 1, Rational(0));
    if (family == 1) {
        if (order >= 1) out.coeffs[1] = 1;
        return out;
    }
    if (family < 2 || family > 4) throw DomainError("series_k: family must be 1..4");
    if (n < 2) throw DomainError("series_k: requires n >= 2");

    auto c = u_series(family, n, order + 2);
    // 1/u = (1/z) sum b_j z^j with b the reciprocal of 1 + c_2 z + c_3 z^2 + ...
    std::vector<Rational> b(order + 2, Rational(0));
    b[0] = 1;
    for (int j = 1; j <= order + 1; ++j) {
        Rational s = 0;
        for (int i = 1; i <= j; ++i) s += c[i + 1] * b[j - i];
        b[j] = -s;
    }
    for (int j = 0; j <= order; ++j) {
        Rational r = b[j + 1];
        if (j >= 1) r += c[j];
        out.coeffs[j] = r;
    }
    return out;
}

} // namespace gcst::freeprob
