#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gueindex {

// Dense univariate polynomial over an exact field F. Coefficients are stored
// ascending; the vector never carries trailing zeros, so the zero polynomial
// is the empty vector and degree() == -1 for it.
template <class F>
class Poly {
public:
    Poly() = default;
    explicit Poly(F c) { coeffs_.push_back(std::move(c)); trim(); }
    explicit Poly(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly monomial(int degree, F c = F(1)) {
        if (degree < 0) throw std::domain_error("Poly::monomial: negative degree");
        std::vector<F> v(static_cast<std::size_t>(degree) + 1, F(0));
        v.back() = std::move(c);
        return Poly(std::move(v));
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    const F& leading() const {
        if (is_zero()) throw std::domain_error("Poly::leading: zero polynomial");
        return coeffs_.back();
    }

    F coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return F(0);
        return coeffs_[static_cast<std::size_t>(i)];
    }

    const std::vector<F>& coeffs() const { return coeffs_; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<F> v(std::max(a.coeffs_.size(), b.coeffs_.size()), F(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
        return Poly(std::move(v));
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<F> v(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == F(0)) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(v));
    }

    friend Poly operator*(const Poly& a, const F& s) {
        Poly r = a;
        for (auto& c : r.coeffs_) c = c * s;
        r.trim();
        return r;
    }
    friend Poly operator*(const F& s, const Poly& a) { return a * s; }

    friend Poly operator/(const Poly& a, const F& s) {
        if (s == F(0)) throw std::domain_error("Poly: division by zero scalar");
        Poly r = a;
        for (auto& c : r.coeffs_) c = c / s;
        return r;
    }

    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    // Euclidean division over the coefficient field.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
        Poly rem = a;
        if (a.degree() < b.degree()) return {Poly(), rem};
        std::vector<F> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, F(0));
        const F& lead = b.leading();
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            int shift = rem.degree() - b.degree();
            F factor = rem.leading() / lead;
            q[static_cast<std::size_t>(shift)] = factor;
            // rem -= factor * x^shift * b, done in place
            for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
                rem.coeffs_[i + static_cast<std::size_t>(shift)] -= factor * b.coeffs_[i];
            rem.trim();
        }
        return {Poly(std::vector<F>(std::move(q))), rem};
    }

    F evaluate(const F& x) const {
        F r(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
        return r;
    }

    // Horner evaluation in another ring via a coefficient lift.
    template <class X, class Lift>
    X evaluate_as(const X& x, Lift lift) const {
        X r = x - x; // zero of X
        for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + lift(coeffs_[i]);
        return r;
    }

    Poly derivative() const {
        if (coeffs_.size() <= 1) return Poly();
        std::vector<F> v(coeffs_.size() - 1, F(0));
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            v[i - 1] = coeffs_[i] * F(static_cast<long>(i));
        return Poly(std::move(v));
    }

    std::string str(const std::string& symbol) const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            if (coeffs_[i] == F(0)) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << coeffs_[i] << ")";
            if (i == 1) os << "*" << symbol;
            else if (i > 1) os << "*" << symbol << "^" << i;
        }
        return os.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == F(0)) coeffs_.pop_back();
    }

    std::vector<F> coeffs_;
};

template <class F>
Poly<F> pow(const Poly<F>& base, unsigned long e) {
    Poly<F> r{F(1)};
    Poly<F> b = base;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

// p(q(x)) by Horner; O(deg p * deg q^2) coefficient work.
template <class F>
Poly<F> compose(const Poly<F>& p, const Poly<F>& q) {
    Poly<F> r;
    for (int i = p.degree(); i >= 0; --i) {
        r = r * q;
        r += Poly<F>(p.coeff(i));
    }
    return r;
}

// Monic gcd by the Euclidean algorithm; remainders are re-scaled monic at
// every step to keep coefficients in canonical form.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
    auto make_monic = [](Poly<F>& p) {
        if (!p.is_zero() && !(p.leading() == F(1))) p = p / p.leading();
    };
    make_monic(a);
    make_monic(b);
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
        make_monic(b);
    }
    return a;
}

} // namespace gueindex
