#pragma once

#include "gueindex/pi_scalar.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace gueindex {

// Polynomials and normalized rational functions in xi (the generating
// variable e^{-s}) with PiScalar coefficients. XiFunction denominators are
// monic in xi with PiScalar leading coefficient 1.
using XiPoly = Poly<PiScalar>;
using XiFunction = RatFunc<PiScalar>;

// Finite Laurent expansion about xi = 1: coefficients of (xi-1)^j for
// j = min_order .. max_order. All functions in scope have pole order <= 1.
struct LaurentSeries {
    int min_order = 0;
    std::vector<PiScalar> coeffs; // coeffs[i] multiplies (xi-1)^(min_order+i)

    PiScalar coeff(int order) const {
        int idx = order - min_order;
        if (idx < 0 || idx >= static_cast<int>(coeffs.size())) return PiScalar(0);
        return coeffs[static_cast<std::size_t>(idx)];
    }

    int max_order() const { return min_order + static_cast<int>(coeffs.size()) - 1; }

    // Drop leading zero coefficients so the first stored one is nonzero
    // (unless the series is identically zero over the computed window).
    void normalize() {
        std::size_t lead = 0;
        while (lead < coeffs.size() && coeffs[lead].is_zero()) ++lead;
        if (lead == coeffs.size()) {
            min_order = 0;
            coeffs.clear();
            return;
        }
        coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(lead));
        min_order += static_cast<int>(lead);
    }
};

// Taylor shift p(1 + w) as a polynomial in w.
XiPoly shift_to_one(const XiPoly& p);

// Laurent expansion of f about xi = 1 through order `order`.
// Throws std::domain_error if f has a pole of order > 1 there (that would
// signal a bug in an upstream recurrence, never a legal input).
LaurentSeries expand_at_one(const XiFunction& f, int order);

// Cauchy product of two finite expansions, truncated at `order`.
LaurentSeries cauchy_product(const LaurentSeries& a, const LaurentSeries& b, int order);

inline std::string to_string(const XiPoly& p) { return p.str("ξ"); }
inline std::string to_string(const XiFunction& f) { return f.str("ξ"); }

} // namespace gueindex
