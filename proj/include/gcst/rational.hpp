#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "gcst/errors.hpp"

namespace gcst {

using BigInt = boost::multiprecision::cpp_int;
// Exact rational arithmetic. cpp_rational keeps the canonical form invariant
// (gcd(num, den) = 1, den > 0) after every operation.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational rational_pow(const Rational& r, int e) {
    if (e < 0 && r == 0) throw DomainError("rational_pow: 0 to a negative power");
    Rational acc = 1;
    Rational base = e < 0 ? Rational(1) / r : r;
    for (int i = 0; i < (e < 0 ? -e : e); ++i) acc *= base;
    return acc;
}

inline BigInt factorial_int(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt binomial_int(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt c = 1;
    for (unsigned i = 0; i < k; ++i) {
        c *= n - i;
        c /= i + 1; // exact: product of j consecutive integers is divisible by j!
    }
    return c;
}

// Generalized binomial coefficient C(q, k) = q(q-1)...(q-k+1)/k! for rational q.
inline Rational binomial_rational(const Rational& q, unsigned k) {
    Rational c = 1;
    for (unsigned i = 0; i < k; ++i) c *= (q - int(i)) / Rational(int(i) + 1);
    return c;
}

inline BigInt catalan_number(unsigned n) {
    return binomial_int(2 * n, n) / BigInt(n + 1);
}

} // namespace gcst
