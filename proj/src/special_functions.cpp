#include "gueindex/special_functions.hpp"

#include <mutex>
#include <vector>

namespace gueindex {

namespace {

// Exact Bernoulli numbers via the defining recurrence, cached.
Rational bernoulli(std::size_t k) {
    static std::vector<Rational> cache{Rational(1), Rational(-1, 2)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= k) {
        std::size_t m = cache.size();
        Rational acc(0);
        for (std::size_t j = 0; j < m; ++j)
            acc += Rational(binomial(m + 1, j)) * cache[j];
        cache.push_back(-acc / Rational(binomial(m + 1, m)));
    }
    return cache[k];
}

Real eps_for(const PrecisionContext& ctx) {
    return pow(Real(10), -static_cast<long>(ctx.working_digits) - 2);
}

} // namespace

Real digamma(const Real& x, const PrecisionContext& ctx) {
    if (x <= 0) throw std::domain_error("digamma: argument must be positive");
    PrecisionScope scope(ctx.working_digits);
    long shift_to = 20 + static_cast<long>(ctx.working_digits * 2 / 5);
    Real y = x;
    Real acc(0);
    while (y < shift_to) {
        acc -= 1 / y;
        y += 1;
    }
    // psi(y) ~ log y - 1/(2y) - sum_{k>=1} B_{2k} / (2k y^{2k})
    Real res = log(y) - 1 / (2 * y);
    Real y2 = y * y;
    Real ypow = y2;
    Real eps = eps_for(ctx);
    for (std::size_t k = 1; k < 400; ++k) {
        Real term = to_real(bernoulli(2 * k)) / (Real(2 * k) * ypow);
        res -= term;
        if (abs(term) < eps) break;
        ypow *= y2;
    }
    return acc + res;
}

Real trigamma(const Real& x, const PrecisionContext& ctx) {
    if (x <= 0) throw std::domain_error("trigamma: argument must be positive");
    PrecisionScope scope(ctx.working_digits);
    long shift_to = 20 + static_cast<long>(ctx.working_digits * 2 / 5);
    Real y = x;
    Real acc(0);
    while (y < shift_to) {
        acc += 1 / (y * y);
        y += 1;
    }
    // psi'(y) ~ 1/y + 1/(2y^2) + sum_{k>=1} B_{2k} / y^{2k+1}
    Real res = 1 / y + 1 / (2 * y * y);
    Real y2 = y * y;
    Real ypow = y2 * y;
    Real eps = eps_for(ctx);
    for (std::size_t k = 1; k < 400; ++k) {
        Real term = to_real(bernoulli(2 * k)) / ypow;
        res += term;
        if (abs(term) < eps) break;
        ypow *= y2;
    }
    return acc + res;
}

Real elliptic_k(const Real& z, const PrecisionContext& ctx) {
    if (z < 0 || z >= 1) throw std::domain_error("elliptic_k: need 0 <= z < 1");
    return elliptic_k_comp((1 - z) * (1 + z), ctx);
}

Real elliptic_k_comp(const Real& t, const PrecisionContext& ctx) {
    if (t <= 0) throw std::domain_error("elliptic_k_comp: need t > 0");
    PrecisionScope scope(ctx.working_digits);
    Real a(1), b = sqrt(Real(t));
    Real eps = eps_for(ctx);
    for (int i = 0; i < 200; ++i) {
        Real an = (a + b) / 2;
        b = sqrt(a * b);
        a = an;
        if (abs(a - b) < eps * a) break;
    }
    return real_pi() / (2 * a);
}

// Tail control for the unit-argument series: all terms are positive and the
// ratio r_k = t_{k+1}/t_k increases monotonically toward 1, so the raw
// geometric sum t r/(1-r) underestimates the true tail, but by no more than
// the factor (m+3/2)/(m+1/2) <= 3. A safety factor of 4 turns the estimate
// into a bound; the tests exercise its conservativeness against exact values.
Real hyp4f3_unit(long m, const PrecisionContext& ctx) {
    if (m < 0) throw std::domain_error("hyp4f3_unit: m must be >= 0");
    PrecisionScope scope(ctx.working_digits);
    Real tol(ctx.quadrature_tolerance);
    Real a(1.5); // k + 3/2
    Real t(1), s(1);
    for (long k = 0; k < ctx.series_term_cap; ++k) {
        unsigned long den2 = static_cast<unsigned long>(k + 2) * static_cast<unsigned long>(k + 2);
        t *= a * a * (k + 1);
        t /= (a + m) * den2;
        s += t;
        a += 1;
        if ((k & 255) == 0 || k < 64) {
            Real ratio = (a * a * (k + 2)) / ((a + m) * (static_cast<unsigned long>(k + 3) *
                                                         static_cast<unsigned long>(k + 3)));
            if (ratio < 1) {
                Real bound = 4 * t * ratio / (1 - ratio);
                if (bound < tol) return s;
            }
        }
    }
    throw SeriesCapReached("hyp4f3_unit: term cap reached before tail bound met", s);
}

Real hyp4f3_unit_dm(long m, const PrecisionContext& ctx) {
    if (m < 0) throw std::domain_error("hyp4f3_unit_dm: m must be >= 0");
    PrecisionScope scope(ctx.working_digits);
    Real tol(ctx.quadrature_tolerance);
    // d/dm (3/2+m)_k = (3/2+m)_k [psi(3/2+m+k) - psi(3/2+m)], so the
    // termwise derivative is -t_k psi_acc_k with psi_acc updated by 1/(3/2+m+k).
    Real a(1.5); // k + 3/2
    Real t(1), psi_acc(0), s(0);
    for (long k = 0; k < ctx.series_term_cap; ++k) {
        psi_acc += 1 / (a + m);
        unsigned long den2 = static_cast<unsigned long>(k + 2) * static_cast<unsigned long>(k + 2);
        t *= a * a * (k + 1);
        t /= (a + m) * den2;
        s += t * psi_acc;
        a += 1;
        if ((k & 255) == 0 || k < 64) {
            Real ratio = (a * a * (k + 2)) / ((a + m) * (static_cast<unsigned long>(k + 3) *
                                                         static_cast<unsigned long>(k + 3)));
            if (ratio < 1) {
                Real bound = 4 * t * (psi_acc + 1) * ratio / (1 - ratio);
                if (bound < tol) return -s;
            }
        }
    }
    throw SeriesCapReached("hyp4f3_unit_dm: term cap reached before tail bound met", -s);
}

Real hyp2f1_half(long m, const Real& z, const PrecisionContext& ctx) {
    if (m < 1) throw std::domain_error("hyp2f1_half: m must be >= 1");
    if (z < 0 || z > 1) throw std::domain_error("hyp2f1_half: need 0 <= z <= 1");
    PrecisionScope scope(ctx.working_digits);
    Real eps = eps_for(ctx);

    // Gamma(m+1) Gamma(1/2) / Gamma(m+1/2) = prod_{j=1}^m (2j)/(2j-1)
    Real gamma_ratio(1);
    for (long j = 1; j <= m; ++j) gamma_ratio *= Real(2 * j) / Real(2 * j - 1);

    if (z == 1) return gamma_ratio;

    if (z <= Real(0.5)) {
        // sum_k (1/2)_k/k! * m/(m+k) * z^k
        Real term(1), s(1);
        for (long k = 0; k < ctx.series_term_cap; ++k) {
            term *= (Real(k) + Real(0.5)) / (k + 1) * z;
            Real contrib = term * m / (m + k + 1);
            s += contrib;
            if (abs(contrib) < eps * abs(s) && k > 2) return s;
        }
        throw SeriesCapReached("hyp2f1_half: direct series did not converge", Real(0));
    }

    // Near z = 1 use the 1-z connection: with w = 1-z < 1/2,
    // 2F1(1/2,m;m+1;z) = gamma_ratio z^{-m} - 2m sqrt(w) 2F1(m+1/2,1;3/2;w)
    Real w = 1 - z;
    Real term(1), s(1);
    for (long k = 0; k < ctx.series_term_cap; ++k) {
        term *= (Real(m) + Real(0.5) + k) / (Real(1.5) + k) * w;
        s += term;
        if (abs(term) < eps * abs(s) && k > 2)
            return gamma_ratio * pow(z, -static_cast<long>(m)) - 2 * m * sqrt(w) * s;
    }
    throw SeriesCapReached("hyp2f1_half: connection series did not converge", Real(0));
}

} // namespace gueindex
