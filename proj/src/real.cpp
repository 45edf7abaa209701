#include "gueindex/real.hpp"

#include <sstream>

namespace gueindex {

namespace {

Real from_mpfr_const(int (*fn)(mpfr_t, mpfr_rnd_t)) {
    Real r;
    fn(r.backend().data(), MPFR_RNDN);
    return r;
}

} // namespace

Real real_pi() { return from_mpfr_const(&mpfr_const_pi); }

Real real_sqrt_pi() { return sqrt(real_pi()); }

Real real_euler_gamma() { return from_mpfr_const(&mpfr_const_euler); }

Real real_log2() { return from_mpfr_const(&mpfr_const_log2); }

Real to_real(const Rational& q) {
    return Real(numerator(q)) / Real(denominator(q));
}

Real eval_numeric(const PiScalar& x, unsigned digits) {
    PrecisionScope scope(digits);
    if (x.is_zero()) return Real(0);
    Real s = real_sqrt_pi();
    auto lift = [](const Rational& c) { return to_real(c); };
    Real n = x.num().evaluate_as<Real>(s, lift);
    Real d = x.den().evaluate_as<Real>(s, lift);
    return n / d;
}

Real eval_numeric(const PiScalar& x, const PrecisionContext& ctx) {
    return eval_numeric(x, ctx.working_digits);
}

std::string decimal_string(const Real& x, unsigned digits) {
    std::ostringstream os;
    os << std::setprecision(static_cast<int>(digits)) << x;
    return os.str();
}

} // namespace gueindex
