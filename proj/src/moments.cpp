#include "gcst/moments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gcst/errors.hpp"
#include "gcst/measures.hpp"
#include "gcst/special.hpp"

namespace gcst::moments {

using cplx = std::complex<double>;

namespace {

constexpr long double pi_l = std::numbers::pi_v<long double>;

// V_m(g) = int_0^pi cos(w)^m cos(g w) dw for m = 0..M. Reduced sequences
// P_m (even m) and Q_m (odd m) obey forward-stable three-term recurrences;
// no denominator vanishes for the g used here (g in (0,1) u (1,2)).
std::vector<long double> v_table(long double g, int M) {
    std::vector<long double> v(M + 1);
    long double c = std::cos(g * pi_l / 2), s = std::sin(g * pi_l / 2);
    long double p_prev = 2 * s / g; // P_0
    v[0] = c * p_prev;
    long double q_prev = 0;
    if (M >= 1) {
        q_prev = -2 * g * c / (g * g - 1); // Q_1
        v[1] = s * q_prev;
    }
    for (int m = 2; m <= M; ++m) {
        long double denom = g * g - static_cast<long double>(m) * m;
        if (m % 2 == 0) {
            long double p = (2 * g * s - static_cast<long double>(m) * (m - 1) * p_prev) / denom;
            v[m] = c * p;
            p_prev = p;
        } else {
            long double q = (-2 * g * c - static_cast<long double>(m) * (m - 1) * q_prev) / denom;
            v[m] = s * q;
            q_prev = q;
        }
    }
    return v;
}

// Hurwitz zeta(alpha, x) for large x by Euler-Maclaurin (first Bernoulli
// corrections); relative error ~x^{-7}.
long double hurwitz_zeta(long double alpha, long double x) {
    long double xa = std::pow(x, -alpha);
    long double z = std::pow(x, 1 - alpha) / (alpha - 1) + xa / 2;
    long double f = alpha * xa / x;
    z += f / 12;
    f *= (alpha + 1) * (alpha + 2) / (x * x);
    z -= f / 720;
    f *= (alpha + 3) * (alpha + 4) / (x * x);
    z += f / 30240;
    return z;
}

void solve5(long double a[5][5], long double b[5]) {
    for (int col = 0; col < 5; ++col) {
        int piv = col;
        for (int r = col + 1; r < 5; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (int r = col + 1; r < 5; ++r) {
            long double f = a[r][col] / a[col][col];
            for (int c = col; c < 5; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    for (int r = 4; r >= 0; --r) {
        for (int c = r + 1; c < 5; ++c) b[r] -= a[r][c] * b[c];
        b[r] /= a[r][r];
    }
}

// Sum of the series terms t_0..t_K plus a resummed tail. The terms decay
// like k^(s-2) with half-integer-power corrections split by parity, so the
// raw partial sums are useless; a 5-term asymptotic fit per parity plus
// Hurwitz-zeta tail sums restores ~1e-9 accuracy.
long double sum_with_tail(const std::vector<long double>& t, int K, long double s) {
    long double sum = 0;
    for (int k = 0; k <= K; ++k) sum += t[k];
    for (int parity = 0; parity < 2; ++parity) {
        int samples[5];
        for (int i = 0; i < 5; ++i) {
            int k = static_cast<int>(K * std::pow(0.5L, i / 2.0L));
            if (k % 2 != parity) --k;
            samples[i] = k;
        }
        long double a[5][5], b[5];
        for (int i = 0; i < 5; ++i) {
            long double k = samples[i];
            long double x = 1 / std::sqrt(k);
            long double xj = 1;
            for (int j = 0; j < 5; ++j) {
                a[i][j] = xj;
                xj *= x;
            }
            b[i] = t[samples[i]] * std::pow(k, 2 - s);
        }
        solve5(a, b);
        int start = K % 2 == parity ? K : K - 1;
        for (int j = 0; j < 5; ++j) {
            long double alpha = 2 - s + j / 2.0L;
            sum += b[j] * std::pow(2.0L, -alpha) * hurwitz_zeta(alpha, start / 2.0L + 1);
        }
    }
    return sum;
}

struct SeriesResult {
    double value = 0;
    double error_estimate = 0;
};

// Normalized n-th moment of the family-4 image measure from the angular
// series; K terms with tail resummation, error estimated by comparing
// against the resummation at 0.7 K.
SeriesResult family4_moment_series(double lambda, int n, int cap) {
    long double s = 0.5L / static_cast<long double>(lambda);
    int K = std::min(2000, cap);
    SeriesResult res;
    while (true) {
        auto v1 = v_table(s, n + K);
        auto v2 = v_table(2 - s, n + K);
        std::vector<long double> tn(K + 1), t0(K + 1);
        long double coef = 1; // (-1)^k (s)_k / k!
        for (int k = 0; k <= K; ++k) {
            tn[k] = coef * 0.5L * (v1[n + k] - v2[n + k]);
            t0[k] = coef * 0.5L * (v1[k] - v2[k]);
            coef *= -(s + k) / (k + 1);
        }
        auto value_at = [&](int kk) {
            long double sn = sum_with_tail(tn, kk, s);
            long double s0 = sum_with_tail(t0, kk, s);
            long double sign = n % 2 == 0 ? 1 : -1;
            return static_cast<double>(sign * std::pow(2.0L, n) * sn / s0);
        };
        double full = value_at(K);
        double nested = value_at(static_cast<int>(0.7 * K));
        res.value = full;
        res.error_estimate = std::abs(full - nested);
        if (res.error_estimate <= 1e-10 * std::max(1.0, std::abs(full)) || K >= cap) break;
        K = std::min(2 * K, cap);
    }
    return res;
}

} // namespace

double symmetric_moment(double lambda, int n) {
    if (n < 0) throw DomainError("symmetric_moment: requires n >= 0");
    if (!(lambda >= 1))
        throw NotAProbabilityMeasure("symmetric_moment: requires lambda >= 1");
    return std::pow(4.0, n) * special::terminating_3f2(n, 1 / lambda);
}

std::vector<Rational> moment_polynomial(int n) {
    if (n < 0) throw DomainError("moment_polynomial: requires n >= 0");
    std::vector<Rational> poly(n + 1, Rational(0));
    for (int k = 0; k <= n; ++k) {
        // C(n,k) 4^(n-k) / k! * prod_{j=k+2}^{2k+1} (y - j)
        std::vector<Rational> term{Rational(binomial_int(n, k)) * rational_pow(Rational(4), n - k) /
                                   Rational(factorial_int(k))};
        for (int j = k + 2; j <= 2 * k + 1; ++j) {
            std::vector<Rational> next(term.size() + 1, Rational(0));
            for (size_t i = 0; i < term.size(); ++i) {
                next[i] -= term[i] * j;
                next[i + 1] += term[i];
            }
            term = std::move(next);
        }
        for (size_t i = 0; i < term.size(); ++i) poly[i] += term[i];
    }
    return poly;
}

Rational moment_polynomial_at(int n, const Rational& y) {
    auto poly = moment_polynomial(n);
    Rational v = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) v = v * y + *it;
    return v;
}

double norm_constant_family2(double lambda) {
    if (!(lambda >= 1))
        throw NotAProbabilityMeasure("norm_constant_family2: requires lambda >= 1");
    double s = 1 / (2 * lambda);
    return std::pow(2.0, 1 - 1 / lambda) * std::sqrt(std::numbers::pi) *
           std::exp(std::lgamma(1 - s) + std::lgamma(1.5 - s) - std::lgamma(2 - 1 / lambda));
}

double nonsymmetric_moment(int family, double lambda, int n, int terms, double tol) {
    if (family != 3 && family != 4) throw DomainError("nonsymmetric_moment: family must be 3 or 4");
    if (n < 0) throw DomainError("nonsymmetric_moment: requires n >= 0");
    if (!(lambda > 0.5)) throw DomainError("nonsymmetric_moment: requires lambda > 1/2");
    if (terms < 500) throw DomainError("nonsymmetric_moment: needs at least 500 terms");
    SeriesResult res = family4_moment_series(lambda, n, terms);
    if (res.error_estimate > tol * std::max(1.0, std::abs(res.value)))
        throw ConvergenceError("nonsymmetric_moment: tail estimate above tolerance");
    // family 3 is the reflection x -> -x of family 4
    return family == 4 ? res.value : (n % 2 == 0 ? res.value : -res.value);
}

double moment_quadrature(int family, double lambda, int n, int order) {
    if (n < 0) throw DomainError("moment_quadrature: requires n >= 0");
    auto spec = measures::family(family, lambda);
    auto nu = measures::nu_measure(spec);
    return measures::integrate_measure(
               nu, [&](double x) { return cplx(std::pow(x, n)); }, order)
        .real();
}

std::pair<double, double> egf_check(double y, double z, int N) {
    if (N < 0) throw DomainError("egf_check: requires N >= 0");
    double lhs = 0, fact = 1;
    for (int n = 0; n <= N; ++n) {
        auto poly = moment_polynomial(n);
        double p = 0;
        for (auto it = poly.rbegin(); it != poly.rend(); ++it) p = p * y + to_double(*it);
        lhs += p * std::pow(z, n) / fact;
        fact *= n + 1;
    }
    double sum = 0, term = 1;
    for (int k = 0; k <= N; ++k) {
        sum += term;
        term *= (1 - y / 2 + k) * ((3 - y) / 2 + k) / ((2 - y + k) * (k + 1.0) * (k + 1.0)) *
                (4 * z);
    }
    double rhs = std::pow(2.0, 1 - y) * std::exp(4 * z) * sum;
    return {lhs, rhs};
}

MomentTable moment_table(int family, double lambda, int n_max, const std::string& method) {
    if (n_max < 0) throw DomainError("moment_table: requires n_max >= 0");
    measures::family(family, lambda); // validates family id and lambda range
    MomentTable table;
    table.family_id = family;
    table.lambda = lambda;
    table.method = method;

    auto symmetric_entry = [&](int order) {
        MomentEntry e;
        e.order = order;
        if (order % 2 == 1) {
            e.value = 0.0;
            e.exact = Rational(0);
        }
        return e;
    };

    if (method == "hyp3f2") {
        if (family != 2) throw UnsupportedError("moment_table: hyp3f2 applies to family 2");
        for (int j = 0; j <= n_max; ++j) {
            MomentEntry e = symmetric_entry(j);
            e.exact.reset(); // numeric route: no exact values, even for the zero odds
            if (j % 2 == 0) e.value = symmetric_moment(lambda, j / 2);
            table.entries.push_back(e);
        }
    } else if (method == "rational") {
        if (family == 1) {
            for (int j = 0; j <= n_max; ++j) {
                MomentEntry e = symmetric_entry(j);
                if (j % 2 == 0) {
                    e.exact = Rational(catalan_number(j / 2));
                    e.value = to_double(*e.exact);
                }
                table.entries.push_back(e);
            }
        } else if (family == 2) {
            if (lambda != std::floor(lambda))
                throw UnsupportedError("moment_table: rational method needs integer lambda");
            if (!(lambda >= 1))
                throw NotAProbabilityMeasure("moment_table: requires lambda >= 1");
            Rational y(1, static_cast<long long>(lambda));
            for (int j = 0; j <= n_max; ++j) {
                MomentEntry e = symmetric_entry(j);
                if (j % 2 == 0) {
                    e.exact = moment_polynomial_at(j / 2, y);
                    e.value = to_double(*e.exact);
                }
                table.entries.push_back(e);
            }
        } else {
            throw UnsupportedError("moment_table: no rational closed form for families 3, 4");
        }
    } else if (method == "series") {
        if (family != 3 && family != 4)
            throw UnsupportedError("moment_table: series applies to families 3, 4");
        for (int j = 0; j <= n_max; ++j) {
            MomentEntry e;
            e.order = j;
            e.value = nonsymmetric_moment(family, lambda, j);
            table.entries.push_back(e);
        }
    } else if (method == "quadrature") {
        for (int j = 0; j <= n_max; ++j) {
            MomentEntry e;
            e.order = j;
            e.value = moment_quadrature(family, lambda, j);
            table.entries.push_back(e);
        }
    } else {
        throw DomainError("moment_table: unknown method '" + method + "'");
    }
    return table;
}

} // namespace gcst::moments
