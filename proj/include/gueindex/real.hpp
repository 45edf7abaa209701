#pragma once

#include "gueindex/pi_scalar.hpp"

#include <boost/multiprecision/mpfr.hpp>

namespace gueindex {

// Variable-precision real; precision is set per scope via PrecisionScope.
using Real = boost::multiprecision::mpfr_float;

// Shared numeric configuration. All numeric routines are pure functions of
// (inputs, ctx); the context itself is immutable after construction.
struct PrecisionContext {
    unsigned working_digits = 64;       // decimal digits
    long series_term_cap = 20'000'000;  // hard cap on series summation length
    double quadrature_tolerance = 1e-10; // absolute error target

    PrecisionContext() = default;
    explicit PrecisionContext(unsigned digits, long cap = 20'000'000, double tol = 1e-10)
        : working_digits(digits), series_term_cap(cap), quadrature_tolerance(tol) {
        if (working_digits < 16) throw std::domain_error("PrecisionContext: working_digits < 16");
        if (series_term_cap < 1000) throw std::domain_error("PrecisionContext: series_term_cap < 1000");
    }
};

// RAII guard setting the thread's default mpfr precision (with guard digits)
// and restoring the previous value on exit.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned decimal_digits) : old_(Real::default_precision()) {
        Real::default_precision(decimal_digits + 8);
    }
    ~PrecisionScope() { Real::default_precision(old_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned old_;
};

Real real_pi();
Real real_sqrt_pi();
Real real_euler_gamma();
Real real_log2();

Real to_real(const Rational& q);

// Substitutes sigma = sqrt(pi) at the requested precision.
// Relative error <= 10^(1-digits).
Real eval_numeric(const PiScalar& x, unsigned digits);
Real eval_numeric(const PiScalar& x, const PrecisionContext& ctx);

std::string decimal_string(const Real& x, unsigned digits);

} // namespace gueindex
