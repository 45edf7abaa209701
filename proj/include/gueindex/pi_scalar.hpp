#pragma once

#include "gueindex/rat_func.hpp"
#include "gueindex/rational.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace gueindex {

using SigmaPoly = Poly<Rational>;

// Exact element of Q(sigma) where sigma stands for sqrt(pi). Since pi is
// transcendental, Q(sigma) is the rational-function field in one
// indeterminate and equality is exact polynomial identity. Canonical form:
// gcd(num, den) = 1, den monic.
class PiScalar {
public:
    PiScalar() = default;
    PiScalar(long v) : v_(Rational(v)) {}
    PiScalar(const Rational& v) : v_(v) {}
    PiScalar(int v) : v_(Rational(v)) {}
    explicit PiScalar(RatFunc<Rational> v) : v_(std::move(v)) {}
    PiScalar(SigmaPoly num, SigmaPoly den) : v_(std::move(num), std::move(den)) {}

    static PiScalar sigma() { return PiScalar(RatFunc<Rational>(SigmaPoly::monomial(1))); }

    // sigma^k for any integer k; pi = sigma_pow(2).
    static PiScalar sigma_pow(long k) {
        if (k >= 0) return PiScalar(RatFunc<Rational>(SigmaPoly::monomial(static_cast<int>(k))));
        return PiScalar(RatFunc<Rational>(SigmaPoly(Rational(1)),
                                          SigmaPoly::monomial(static_cast<int>(-k))));
    }

    static PiScalar pi() { return sigma_pow(2); }

    const SigmaPoly& num() const { return v_.num(); }
    const SigmaPoly& den() const { return v_.den(); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_rational() const { return v_.num().degree() <= 0 && v_.den().degree() == 0; }

    Rational as_rational() const {
        if (!is_rational()) throw std::domain_error("PiScalar: not a pure rational");
        return v_.num().coeff(0) / v_.den().coeff(0);
    }

    friend bool operator==(const PiScalar& a, const PiScalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const PiScalar& a, const PiScalar& b) { return !(a == b); }

    PiScalar operator-() const { return PiScalar(-v_); }
    friend PiScalar operator+(const PiScalar& a, const PiScalar& b) { return PiScalar(a.v_ + b.v_); }
    friend PiScalar operator-(const PiScalar& a, const PiScalar& b) { return PiScalar(a.v_ - b.v_); }
    friend PiScalar operator*(const PiScalar& a, const PiScalar& b) { return PiScalar(a.v_ * b.v_); }
    friend PiScalar operator/(const PiScalar& a, const PiScalar& b) { return PiScalar(a.v_ / b.v_); }

    PiScalar& operator+=(const PiScalar& b) { v_ += b.v_; return *this; }
    PiScalar& operator-=(const PiScalar& b) { v_ -= b.v_; return *this; }
    PiScalar& operator*=(const PiScalar& b) { v_ *= b.v_; return *this; }
    PiScalar& operator/=(const PiScalar& b) { v_ /= b.v_; return *this; }

    // Serialized string form "P(σ)/Q(σ)", e.g. "(1/2)*σ" for Gamma(3/2).
    std::string str() const { return v_.str("σ"); }

    friend std::ostream& operator<<(std::ostream& os, const PiScalar& x) { return os << x.str(); }

private:
    RatFunc<Rational> v_;
};

inline PiScalar pow(const PiScalar& base, long e) {
    PiScalar r(1);
    if (e < 0) return PiScalar(1) / pow(base, -e);
    PiScalar b = base;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k) b *= b;
    }
    return r;
}

// Exact Gamma(k/2) for positive integer twice_k = 2k. Integer arguments give
// factorials, half-integer arguments a rational multiple of sigma via the
// functional equation from Gamma(1/2) = sigma.
inline PiScalar gamma_half(long twice_k) {
    if (twice_k <= 0) throw std::domain_error("gamma_half: argument must be positive");
    if (twice_k % 2 == 0) {
        return PiScalar(Rational(factorial(static_cast<unsigned long>(twice_k / 2 - 1))));
    }
    // Gamma(m + 1/2) = (2m)! / (4^m m!) * sigma
    unsigned long m = static_cast<unsigned long>((twice_k - 1) / 2);
    Rational c(factorial(2 * m), pow2(2 * static_cast<long>(m)) * factorial(m));
    return PiScalar(c) * PiScalar::sigma();
}

inline std::string to_string(const PiScalar& x) { return x.str(); }

} // namespace gueindex
