#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace gueindex {

// Arbitrary-precision integers and rationals, GMP-backed. mpq_rational keeps
// the canonical form we rely on everywhere: gcd(|num|, den) = 1, den > 0.
using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.backend().data(), n);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.backend().data(), n, k);
    return r;
}

inline BigInt pow2(long e) {
    if (e < 0) throw std::domain_error("pow2: negative exponent");
    BigInt r = 1;
    return r << e;
}

// 2^e as a rational, e may be negative.
inline Rational pow2_rational(long e) {
    return e >= 0 ? Rational(pow2(e)) : Rational(1, pow2(-e));
}

// Barnes G at positive integers: G(n+1) = prod_{j=0}^{n-1} j!.
inline BigInt barnes_g(unsigned long n_plus_1) {
    if (n_plus_1 == 0) throw std::domain_error("barnes_g: argument must be >= 1");
    BigInt r = 1;
    for (unsigned long j = 1; j + 1 < n_plus_1; ++j) r *= factorial(j);
    return r;
}

inline std::string to_string(const Rational& q) { return q.str(); }

} // namespace gueindex
