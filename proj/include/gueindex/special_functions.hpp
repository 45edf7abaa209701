#pragma once

#include "gueindex/real.hpp"

#include <stdexcept>

namespace gueindex {

// Thrown when a series hits the term cap before its tail bound meets the
// tolerance; carries the partial sum for diagnostics.
struct SeriesCapReached : std::runtime_error {
    SeriesCapReached(const std::string& what, Real partial)
        : std::runtime_error(what), partial_sum(std::move(partial)) {}
    Real partial_sum;
};

// psi(x) for x > 0: upward recurrence to a large argument, then the standard
// asymptotic series with exact Bernoulli coefficients.
Real digamma(const Real& x, const PrecisionContext& ctx);
Real trigamma(const Real& x, const PrecisionContext& ctx);

// Complete elliptic integral K(z) = (pi/2) 2F1(1/2,1/2;1;z^2) for z in [0,1),
// by arithmetic-geometric mean iteration.
Real elliptic_k(const Real& z, const PrecisionContext& ctx);

// K(sqrt(1-t)) evaluated cancellation-free as pi / (2 AGM(1, sqrt(t))).
Real elliptic_k_comp(const Real& t, const PrecisionContext& ctx);

// 4F3(1,1,3/2,3/2; 2,2,3/2+m; 1) and its termwise d/dm. Terms decay like
// k^(-3/2-m); summation stops once the adjusted geometric-ratio tail bound
// drops below ctx.quadrature_tolerance (see implementation note).
Real hyp4f3_unit(long m, const PrecisionContext& ctx);
Real hyp4f3_unit_dm(long m, const PrecisionContext& ctx);

// 2F1(1/2, m; m+1; z) for z in [0,1], m >= 1.
Real hyp2f1_half(long m, const Real& z, const PrecisionContext& ctx);

} // namespace gueindex
