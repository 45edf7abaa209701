#pragma once

#include "gueindex/polynomial.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace gueindex {

// Normalized rational function over an exact field F: num/den with
// gcd(num, den) = 1 and den monic. Zero is 0/1. Equality on the pair is then
// a decidable canonical identity test.
template <class F>
class RatFunc {
public:
    RatFunc() : num_(), den_(F(1)) {}
    explicit RatFunc(F c) : num_(std::move(c)), den_(F(1)) {}
    explicit RatFunc(Poly<F> num) : num_(std::move(num)), den_(F(1)) {}
    RatFunc(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    // For callers that can prove num and den share no factor (e.g. images of
    // already-reduced fractions under a variable substitution); skips the gcd
    // and only normalizes the denominator monic.
    static RatFunc from_coprime(Poly<F> num, Poly<F> den) {
        if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        RatFunc r;
        if (num.is_zero()) return r;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        const F lead = r.den_.leading();
        if (!(lead == F(1))) {
            r.num_ = r.num_ / lead;
            r.den_ = r.den_ / lead;
        }
        return r;
    }

    const Poly<F>& num() const { return num_; }
    const Poly<F>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
    RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }

    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    // Evaluate at a field point; the point must not be a pole.
    F evaluate(const F& x) const {
        F d = den_.evaluate(x);
        if (d == F(0)) throw std::domain_error("RatFunc: evaluation at a pole");
        return num_.evaluate(x) / d;
    }

    std::string str(const std::string& symbol) const {
        if (is_polynomial()) return num_.str(symbol);
        return "(" + num_.str(symbol) + ")/(" + den_.str(symbol) + ")";
    }

private:
    void reduce() {
        if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<F>(F(1));
            return;
        }
        Poly<F> g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
        const F& lead = den_.leading();
        if (!(lead == F(1))) {
            num_ = num_ / lead;
            den_ = den_ / lead;
        }
    }

    Poly<F> num_;
    Poly<F> den_;
};

template <class F>
RatFunc<F> pow(const RatFunc<F>& base, long e) {
    if (e < 0) {
        if (base.is_zero()) throw std::domain_error("RatFunc: negative power of zero");
        return RatFunc<F>(Poly<F>(F(1))) / pow(base, -e);
    }
    RatFunc<F> r{F(1)};
    RatFunc<F> b = base;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k) b *= b;
    }
    return r;
}

} // namespace gueindex
