#pragma once

#include "gueindex/rational.hpp"

#include <vector>

namespace gueindex::detail {

// Dense bivariate polynomial in Z[xi, sigma], used only by the fraction-free
// Hankel determinant elimination. Coefficient c(i, j) multiplies xi^i sigma^j.
class BiPoly {
public:
    BiPoly() = default;
    BiPoly(int nx, int ns) : nx_(nx), ns_(ns), c_(static_cast<std::size_t>(nx) * ns) {}

    static BiPoly constant(BigInt v) {
        BiPoly p(1, 1);
        p.at(0, 0) = std::move(v);
        p.trim();
        return p;
    }

    int xi_size() const { return nx_; }     // deg_xi + 1 (0 for the zero poly)
    int sigma_size() const { return ns_; }

    bool is_zero() const { return nx_ == 0; }

    BigInt& at(int i, int j) { return c_[static_cast<std::size_t>(i) * ns_ + j]; }
    const BigInt& at(int i, int j) const { return c_[static_cast<std::size_t>(i) * ns_ + j]; }

    BigInt coeff(int i, int j) const {
        if (i < 0 || i >= nx_ || j < 0 || j >= ns_) return BigInt(0);
        return at(i, j);
    }

    // Shrink dimensions to the actual support.
    void trim();

    friend bool operator==(const BiPoly& a, const BiPoly& b) {
        return a.nx_ == b.nx_ && a.ns_ == b.ns_ && a.c_ == b.c_;
    }

private:
    int nx_ = 0;
    int ns_ = 0;
    std::vector<BigInt> c_;
};

BiPoly mul(const BiPoly& a, const BiPoly& b);
BiPoly sub(const BiPoly& a, const BiPoly& b);

// Exact division in Z[xi, sigma]; throws std::domain_error when b does not
// divide a (which would mean the fraction-free invariant was violated).
BiPoly exact_div(const BiPoly& a, const BiPoly& b);

// Fraction-free (Bareiss) elimination of a symmetric matrix; returns the
// leading principal minors of sizes 1..n. Pivots are the minors themselves
// and are never identically zero for the matrices in scope.
std::vector<BiPoly> bareiss_principal_minors(std::vector<std::vector<BiPoly>> m);

} // namespace gueindex::detail
