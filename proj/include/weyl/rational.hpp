#pragma once

#include <gmpxx.h>

#include <string>

namespace weyl {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical (reduced, positive denominator) rational from a num/den pair.
inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// C(n, k), zero outside 0 <= k <= n.
inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

inline Integer factorial(long n) {
    if (n < 0) return 0;
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// 2^e as an exact rational; e may be negative.
inline Rational pow2(long e) {
    Rational r = 1;
    if (e >= 0)
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
    else
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
    return r;
}

// Falling factorial n (n-1) ... (n-j+1); empty product for j == 0.
inline Integer falling_factorial(long n, long j) {
    Integer r = 1;
    for (long i = 0; i < j; ++i) r *= Integer(n - i);
    return r;
}

// "num" or "num/den", fully reduced.
inline std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

}  // namespace weyl
