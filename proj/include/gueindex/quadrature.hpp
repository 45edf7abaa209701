#pragma once

#include "gueindex/real.hpp"

#include <functional>
#include <stdexcept>

namespace gueindex {

// Declared endpoint behaviour of an integrand. The quadrature picks a
// variable substitution that absorbs the declared singularities; the
// double-exponential transforms used here handle any integrable algebraic or
// logarithmic endpoint behaviour.
struct SingularitySpec {
    bool singular_left = false;   // e.g. t^{-1/2} or log t at the left endpoint
    bool singular_right = false;
    bool exponential_decay_at_infinity = false; // required for half-line integrals
};

struct QuadratureResult {
    Real value;
    Real error_estimate;
    int levels = 0;
    long evaluations = 0;
};

struct QuadratureError : std::runtime_error {
    QuadratureError(const std::string& what, QuadratureResult best)
        : std::runtime_error(what), best_estimate(std::move(best)) {}
    QuadratureResult best_estimate;
};

using Integrand = std::function<Real(const Real&)>;

// Tanh-sinh rule on the finite interval (a, b); never evaluates at the
// endpoints. Absolute error target ctx.quadrature_tolerance.
QuadratureResult integrate(const Integrand& f, const Real& a, const Real& b,
                           const SingularitySpec& spec, const PrecisionContext& ctx);

// Exp-sinh rule on (0, inf) for integrands with exponential decay.
QuadratureResult integrate_half_line(const Integrand& f, const SingularitySpec& spec,
                                     const PrecisionContext& ctx);

} // namespace gueindex
