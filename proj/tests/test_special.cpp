#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "gcst/errors.hpp"
#include "gcst/quadrature.hpp"
#include "gcst/special.hpp"
#include "test_util.hpp"

using namespace gcst;
using special::cplx;
using testutil::rel_dev;

TEST_SUITE("special") {

TEST_CASE("gamma and beta basics") {
    CHECK(std::abs(special::gamma_fn(1.0) - 1.0) < 1e-15);
    CHECK(std::abs(special::gamma_fn(5.0) - 24.0) < 1e-12);
    CHECK(std::abs(special::gamma_fn(0.5) - std::sqrt(std::numbers::pi)) < 1e-14);
    CHECK(std::abs(special::beta_fn(1, 1) - 1.0) < 1e-15);
    CHECK(std::abs(special::beta_fn(2, 3) - 1.0 / 12.0) < 1e-15);
    CHECK(std::abs(special::beta_fn(0.5, 0.5) - std::numbers::pi) < 1e-14);
    CHECK_THROWS_AS(special::log_gamma(0.0), DomainError);
    CHECK_THROWS_AS(special::log_gamma(-1.5), DomainError);
    CHECK_THROWS_AS(special::beta_fn(0.0, 1.0), DomainError);
}

TEST_CASE("pochhammer double and rational agree") {
    CHECK(special::pochhammer(3.0, 4) == doctest::Approx(360.0).epsilon(1e-15));
    CHECK(special::pochhammer(Rational(1, 2), 3) == Rational(15, 8));
    CHECK(special::pochhammer(Rational(1, 2), 0) == Rational(1));
    std::mt19937 rng(71);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7), nn(0, 6);
    for (int t = 0; t < 30; ++t) {
        Rational a(num(rng), den(rng));
        int n = nn(rng);
        double d = special::pochhammer(to_double(a), n);
        CHECK(std::abs(d - to_double(special::pochhammer(a, n))) <= 1e-12 * std::max(1.0, std::abs(d)));
    }
}

TEST_CASE("2F1 series against elementary closed forms") {
    // 2F1(1, 1; 2; z) = -log(1 - z) / z
    for (cplx z : {cplx(0.5, 0.3), cplx(-0.7, 0.1), cplx(0.2, -0.6)}) {
        cplx lhs = special::gauss_2f1(1, 1, 2, z);
        cplx rhs = -std::log(1.0 - z) / z;
        CHECK(rel_dev(lhs, rhs) < 1e-14);
    }
    // 2F1(a, b; b; z) = (1 - z)^(-a)
    cplx z(0.4, -0.2);
    CHECK(rel_dev(special::gauss_2f1(1.7, 2.5, 2.5, z), std::pow(1.0 - z, -1.7)) < 1e-14);
    CHECK(std::abs(special::gauss_2f1(0.3, 0.9, 1.4, cplx(0, 0)) - 1.0) < 1e-15);
    CHECK_THROWS_AS(special::gauss_2f1(1, 1, 2, cplx(1.05, 0)), DomainError);
}

TEST_CASE("2F1 series path matches Euler integral path") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> par(0.1, 3.0), rad(0.0, 0.8), ang(0, 2 * std::numbers::pi);
    for (int t = 0; t < 50; ++t) {
        double a = par(rng), b = par(rng), c = b + par(rng); // c > b > 0
        cplx z = std::polar(rad(rng), ang(rng));
        cplx s = special::gauss_2f1(a, b, c, z);
        cplx e = special::gauss_2f1_euler(a, b, c, z);
        CHECK(rel_dev(s, e) < 1e-10);
    }
}

TEST_CASE("first square-root reduction: 2F1(L, L+1/2; 2L+1; z) * (sqrt(1-z)+1)^(2L) = 4^L") {
    std::mt19937 rng(2026);
    std::uniform_real_distribution<double> rad(0.05, 0.8), ang(0, 2 * std::numbers::pi);
    for (double lam : {1.2, 2.0, 3.5}) {
        double target = std::pow(4.0, lam);
        for (int t = 0; t < 25; ++t) {
            cplx z = std::polar(rad(rng), ang(rng));
            cplx f = special::gauss_2f1(lam, lam + 0.5, 2 * lam + 1, z);
            cplx lhs = f * std::pow(std::sqrt(1.0 - z) + 1.0, 2 * lam);
            CHECK(std::abs(lhs - target) <= 1e-9 * target);
        }
    }
}

TEST_CASE("second square-root reduction: 2F1(L-1/2, L; 2L-1; z) * sqrt(1-z) (sqrt(1-z)+1)^(2L-2) = 4^(L-1)") {
    std::mt19937 rng(2027);
    std::uniform_real_distribution<double> rad(0.05, 0.8), ang(0, 2 * std::numbers::pi);
    for (double lam : {1.2, 2.0, 3.5}) {
        double target = std::pow(4.0, lam - 1);
        for (int t = 0; t < 25; ++t) {
            cplx z = std::polar(rad(rng), ang(rng));
            cplx f = special::gauss_2f1(lam - 0.5, lam, 2 * lam - 1, z);
            cplx lhs = f * std::sqrt(1.0 - z) * std::pow(std::sqrt(1.0 - z) + 1.0, 2 * lam - 2);
            CHECK(std::abs(lhs - target) <= 1e-9 * target);
        }
    }
}

TEST_CASE("terminating 3F2 exact value and overload agreement") {
    // n = 2, y = 1/2: parameters (-2, 3/4, 5/4; 3/2, 1).
    CHECK(special::terminating_3f2(2, Rational(1, 2)) == Rational(31, 128));
    CHECK(std::abs(special::terminating_3f2(2, 0.5) - 31.0 / 128.0) < 1e-16);
    for (int n : {0, 1, 3, 5, 8}) {
        for (int j : {0, 3, 7, 10}) {
            Rational y(j, 10);
            double exact = to_double(special::terminating_3f2(n, y));
            double dbl = special::terminating_3f2(n, to_double(y));
            CHECK(std::abs(dbl - exact) <= 1e-13 * std::max(1.0, std::abs(exact)));
        }
    }
    CHECK_THROWS_AS(special::terminating_3f2(3, 1.5), DomainError);
    CHECK_THROWS_AS(special::terminating_3f2(3, Rational(3, 2)), DomainError);
}

TEST_CASE("cosine power integral closed form values") {
    CHECK(std::abs(special::cosine_power_integral(1.3, 2.2) - 0.74659840238322731606) < 1e-15);
    CHECK(std::abs(special::cosine_power_integral(0.5, 0.7) - 5.4571795082811073014) < 1e-13);
    // p = q = 1: int_0^{pi/2} dx = pi/2.
    CHECK(std::abs(special::cosine_power_integral(1, 1) - std::numbers::pi / 2) < 1e-15);
    CHECK_THROWS_AS(special::cosine_power_integral(0.5, 0.5), DomainError);
}

TEST_CASE("cosine power integral against direct quadrature") {
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> pq(0.15, 3.0);
    int tested = 0;
    while (tested < 20) {
        double p = pq(rng), q = pq(rng);
        if (p + q <= 1.2) continue;
        ++tested;
        double closed = special::cosine_power_integral(p, q);
        // cos(x)^(p+q-2) = sin(pi/2 - x)^(p+q-2): Jacobi weight (pi/2 - x)^(p+q-2)
        // times the smooth factor (sin(u)/u)^(p+q-2), u = pi/2 - x.
        double e = p + q - 2;
        auto rule = quad::jacobi_rule(e, 0.0, 200);
        cplx val = quad::integrate(rule, [&](double x) {
            double u = std::numbers::pi / 2 - x;
            double sinc = u == 0 ? 1.0 : std::sin(u) / u;
            return cplx(std::cos((p - q) * x) * std::pow(sinc, e), 0.0);
        }, 0.0, std::numbers::pi / 2);
        CHECK(std::abs(val.real() - closed) <= 1e-10 * std::max(1.0, std::abs(closed)));
    }
}

TEST_CASE("gamma duplication combination") {
    for (int k = 0; k <= 10; ++k)
        for (int j = 0; j <= 10; ++j) {
            auto [lhs, rhs] = special::duplication_check(k, j / 10.0);
            CHECK(std::abs(lhs - rhs) <= 1e-13 * std::abs(lhs));
        }
}

} // TEST_SUITE
