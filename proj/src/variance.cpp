#include "gueindex/variance.hpp"

#include "gueindex/special_functions.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace gueindex {

namespace {

// (C(2m,m)/4^m)^2 via the running ratio c_m = c_{m-1} ((2m-1)/(2m))^2.
Rational central_binomial_sq(long m) {
    Rational c(binomial(static_cast<unsigned long>(2 * m), static_cast<unsigned long>(m)),
               pow2(2 * m));
    return c * c;
}

} // namespace

ETerm e_term(long m) {
    if (m < 0) throw std::domain_error("e_term: m must be >= 0");
    return {m, -central_binomial_sq(m)};
}

VarianceValue delta_sum(long n) {
    if (n < 0) throw std::domain_error("delta_sum: n must be >= 0");
    // Delta_n = n/4 + n sum_{odd j < n} 1/(j(j+1)) (sum_{l=1}^{(j-1)/2} e_{2l+1} - 1/pi)
    // with every e carried as its exact 1/pi coefficient.
    Rational b(0);
    Rational e_cum(0);
    Rational c(1); // (C(2l,l)/4^l)^2, updated incrementally
    for (long j = 1; j < n; j += 2) {
        long l = (j - 1) / 2;
        if (l >= 1) {
            c *= Rational((2 * l - 1) * (2 * l - 1), (2 * l) * (2 * l));
            e_cum -= c;
        }
        b += Rational(1, j * (j + 1)) * (e_cum - 1);
    }
    return {n, Rational(n, 4), Rational(n) * b};
}

std::vector<VarianceValue> delta_sum_range(long n_lo, long n_hi) {
    if (n_lo < 0 || n_hi < n_lo) throw std::domain_error("delta_sum_range: bad range");
    std::vector<VarianceValue> out;
    out.reserve(static_cast<std::size_t>(n_hi - n_lo) + 1);
    Rational b(0);
    Rational e_cum(0);
    Rational c(1);
    auto emit = [&](long n) {
        if (n >= n_lo) out.push_back({n, Rational(n, 4), Rational(n) * b});
    };
    emit(0);
    for (long n = 1; n <= n_hi; ++n) {
        long j = n - 1; // delta_n consumes odd j up to n-1
        if (j % 2 == 1) {
            long l = (j - 1) / 2;
            if (l >= 1) {
                c *= Rational((2 * l - 1) * (2 * l - 1), (2 * l) * (2 * l));
                e_cum -= c;
            }
            b += Rational(1, j * (j + 1)) * (e_cum - 1);
        }
        emit(n);
    }
    return out;
}

VarianceValue delta_voisum(long n) {
    if (n < 0) throw std::domain_error("delta_voisum: n must be >= 0");
    long m = n / 2;
    // bracket B_l = 2 sum_{k=l+1}^m 1/(2k-1) - sum_{k=l+1}^m 1/k, accumulated
    // downward so the whole route is O(n).
    std::vector<Rational> bracket(static_cast<std::size_t>(m) + 1, Rational(0));
    for (long l = m - 1; l >= 0; --l)
        bracket[static_cast<std::size_t>(l)] =
            bracket[static_cast<std::size_t>(l + 1)] + Rational(2, 2 * l + 1) - Rational(1, l + 1);
    Rational tot(0);
    Rational c(1);
    for (long l = 0; l <= m; ++l) {
        tot += c * bracket[static_cast<std::size_t>(l)];
        c *= Rational((2 * l + 1) * (2 * l + 1), (2 * l + 2) * (2 * l + 2));
    }
    return {n, Rational(n, 4), -Rational(n, 2) * tot};
}

VarianceValue variance_from_pi_scalar(const PiScalar& x, long n) {
    // x must be (a sigma^d + b sigma^{d-2}) / sigma^d with den a sigma power.
    const SigmaPoly& den = x.den();
    int d = den.degree();
    for (int i = 0; i < d; ++i)
        if (den.coeff(i) != Rational(0))
            throw std::domain_error("variance value outside span{1, 1/pi}: denominator");
    const SigmaPoly& num = x.num();
    Rational a(0), b(0);
    for (int i = 0; i <= num.degree(); ++i) {
        Rational ci = num.coeff(i);
        if (ci == Rational(0)) continue;
        if (i == d) a = ci;
        else if (i == d - 2) b = ci;
        else throw std::domain_error("variance value outside span{1, 1/pi}: numerator");
    }
    return {n, a, b};
}

VarianceValue delta_from_distribution(const TauSequence& seq, int n) {
    if (n < 0 || n > seq.n_max())
        throw std::out_of_range("delta_from_distribution: n out of range");
    // Distribution form: P''(1) + P'(1) - P'(1)^2 for P = tau_n / tau_n(1).
    PiScalar norm = seq.value_at_one(n);
    PiScalar p1 = seq.d1_at_one(n) / norm;
    PiScalar p2 = seq.d2_at_one(n) / norm;
    PiScalar var_dist = p2 + p1 - p1 * p1;
    // tau form: tau''(1)/tau(1) - n^2/4 + n/2.
    PiScalar var_tau = p2 - PiScalar(Rational(static_cast<long>(n) * n, 4)) +
                       PiScalar(Rational(n, 2));
    if (!(var_dist == var_tau))
        throw std::logic_error("delta_from_distribution: distribution and tau forms disagree");
    return variance_from_pi_scalar(var_tau, n);
}

std::vector<VarianceValue> delta_recurrence_table(long n_max) {
    if (n_max < 4) throw std::domain_error("delta_recurrence_table: n_max must be >= 4");
    std::vector<VarianceValue> d(static_cast<std::size_t>(n_max) + 1);
    d[0] = {0, Rational(0), Rational(0)};
    for (long n = 1; n <= std::min<long>(4, n_max); ++n) d[static_cast<std::size_t>(n)] = delta_sum(n);

    // Even chain from m = 2 (the m = 1 instance of the recurrence divides by
    // 2m-2 = 0, so the chain is seeded with Delta_2 and Delta_4):
    //   (2m+1)/(2m-1) D_{2m+2} - [1 + (2m+2)(2m+1)/((2m)(2m-1))] D_{2m}
    //     + (2m)/(2m-2) D_{2m-2} = -(1/(2pi)) (2m)!(2m-2)! 4 / (4^{2m} m!(m-1)! (m!)^2)
    for (long m = 2; 2 * m + 2 <= n_max; ++m) {
        const VarianceValue& d2m = d[static_cast<std::size_t>(2 * m)];
        const VarianceValue& d2m2 = d[static_cast<std::size_t>(2 * m - 2)];
        Rational ca(2 * m + 1, 2 * m - 1);
        Rational cb = Rational(1) + Rational((2 * m + 2) * (2 * m + 1), (2 * m) * (2 * m - 1));
        Rational cc(2 * m, 2 * m - 2);
        Rational rhs = -Rational(factorial(static_cast<unsigned long>(2 * m)) *
                                     factorial(static_cast<unsigned long>(2 * m - 2)),
                                 pow2(4 * m - 2) * factorial(static_cast<unsigned long>(m)) *
                                     factorial(static_cast<unsigned long>(m - 1))) /
                       (Rational(2) * Rational(factorial(static_cast<unsigned long>(m))) *
                        Rational(factorial(static_cast<unsigned long>(m))));
        VarianceValue next;
        next.n = 2 * m + 2;
        next.rat = (cb * d2m.rat - cc * d2m2.rat) / ca;
        next.inv_pi = (cb * d2m.inv_pi - cc * d2m2.inv_pi + rhs) / ca;
        d[static_cast<std::size_t>(2 * m + 2)] = next;
    }

    // Odd chain from m = 1, seeded with Delta_1 and Delta_3:
    //   (2m+1)/(2m+3) D_{2m+3} - [1 + (2m)(2m-1)/((2m+2)(2m+1))] D_{2m+1}
    //     + (2m)/(2m+2) D_{2m-1} = -(1/(2pi)) ((2m)!)^2 / (4^{2m} (m!)^2 (m+1)! m!)
    for (long m = 1; 2 * m + 3 <= n_max; ++m) {
        const VarianceValue& d1 = d[static_cast<std::size_t>(2 * m + 1)];
        const VarianceValue& d0 = d[static_cast<std::size_t>(2 * m - 1)];
        Rational ca(2 * m + 1, 2 * m + 3);
        Rational cb = Rational(1) + Rational((2 * m) * (2 * m - 1), (2 * m + 2) * (2 * m + 1));
        Rational cc(2 * m, 2 * m + 2);
        Rational rhs = -central_binomial_sq(m) / (Rational(2) * Rational(m + 1));
        VarianceValue next;
        next.n = 2 * m + 3;
        next.rat = (cb * d1.rat - cc * d0.rat) / ca;
        next.inv_pi = (cb * d1.inv_pi - cc * d0.inv_pi + rhs) / ca;
        d[static_cast<std::size_t>(2 * m + 3)] = next;
    }
    return d;
}

namespace {

PrecisionContext with_tolerance(const PrecisionContext& ctx, double tol) {
    PrecisionContext sub = ctx;
    sub.quadrature_tolerance = tol;
    return sub;
}

} // namespace

Real j_m_closed(long m, const PrecisionContext& ctx) {
    if (m < 1) throw std::domain_error("j_m_closed: m must be >= 1");
    static std::map<std::tuple<long, unsigned, double>, Real> memo;
    static std::mutex mu;
    auto key = std::make_tuple(m, ctx.working_digits, ctx.quadrature_tolerance);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    PrecisionScope scope(ctx.working_digits);
    Real pi = real_pi();
    Real half(0.5);
    // The series enters J with weight pi/(4(2m+1)); map the error budget
    // through it so the slow-converging low-m series is not over-summed.
    PrecisionContext sub =
        with_tolerance(ctx, ctx.quadrature_tolerance * 4 * (2 * m + 1) / 3.1416);
    Real j = pi / 2 * (digamma(Real(m) + half, ctx) - digamma(half, ctx)) +
             pi / 2 * log(Real(4)) - pi / (4 * (2 * m + 1)) * hyp4f3_unit(m, sub);
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(key, j);
    return j;
}

Real j_m_closed_dm(long m, const PrecisionContext& ctx) {
    if (m < 1) throw std::domain_error("j_m_closed_dm: m must be >= 1");
    static std::map<std::tuple<long, unsigned, double>, Real> memo;
    static std::mutex mu;
    auto key = std::make_tuple(m, ctx.working_digits, ctx.quadrature_tolerance);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    PrecisionScope scope(ctx.working_digits);
    Real pi = real_pi();
    PrecisionContext sub_f =
        with_tolerance(ctx, ctx.quadrature_tolerance * (2 * m + 1) * (2 * m + 1) / 3.1416);
    PrecisionContext sub_fdm =
        with_tolerance(ctx, ctx.quadrature_tolerance * 2 * (2 * m + 1) / 3.1416);
    Real dj = pi / 2 * trigamma(Real(m) + Real(0.5), ctx) +
              pi / (2 * (2 * m + 1) * (2 * m + 1)) * hyp4f3_unit(m, sub_f) -
              pi / (4 * (2 * m + 1)) * hyp4f3_unit_dm(m, sub_fdm);
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(key, dj);
    return dj;
}

Real delta_closed_form(long n, const PrecisionContext& ctx) {
    if (n < 2) throw std::domain_error("delta_closed_form: n must be >= 2");
    PrecisionScope scope(ctx.working_digits);
    long m = n / 2;
    Real pi = real_pi();
    Real psi_diff = digamma(Real(m + 1), ctx) - digamma(Real(m) + Real(0.5), ctx);
    Real pi3 = pi * pi * pi;
    // Split the absolute error budget between the two J factors, accounting
    // for the weights they carry into Delta.
    double budget = ctx.quadrature_tolerance;
    // Budget with the even-n weights so n = 2m and n = 2m+1 share the memo.
    double wj = static_cast<double>(Real(2 * m) / pi3 * psi_diff);
    double wdj = static_cast<double>(Real(2 * m) / (2 * pi3));
    PrecisionContext ctx_j = with_tolerance(ctx, budget / (4 * wj));
    PrecisionContext ctx_dj = with_tolerance(ctx, budget / (4 * wdj));
    return Real(n) / pi3 * psi_diff * j_m_closed(m, ctx_j) +
           Real(n) / (2 * pi3) * j_m_closed_dm(m, ctx_dj);
}

Real delta_asymptotic(long n, const PrecisionContext& ctx) {
    if (n < 6) throw std::domain_error("delta_asymptotic: n must be >= 6");
    PrecisionScope scope(ctx.working_digits);
    long k = n / 2; // n = 2k or n = 2k+1
    Real kk(k);
    Real el = log(Real(16) * kk) + real_euler_gamma();
    Real pi2 = real_pi() * real_pi();
    Real s;
    if (n % 2 == 0) {
        s = (el + 1) / 2 - el / (8 * kk) + Real(7) / (384 * kk * kk) +
            (24 * el - 41) / (1536 * kk * kk * kk) -
            Real(219) / (81920 * pow(kk, 4)) -
            (2560 * el - 6247) / (327680 * pow(kk, 5)) +
            Real(19129) / (16515072 * pow(kk, 6));
    } else {
        s = (el + 1) / 2 + (el + 2) / (8 * kk) - (24 * el - 7) / (384 * kk * kk) +
            (8 * el - 9) / (512 * kk * kk * kk) +
            (1920 * el - 3937) / (245760 * pow(kk, 4)) -
            (2560 * el - 5809) / (327680 * pow(kk, 5)) -
            (322560 * el - 882767) / (82575360 * pow(kk, 6));
    }
    return s / pi2;
}

Real j_m_quadrature(long m, JmRoute route, const PrecisionContext& ctx) {
    if (m < 1) throw std::domain_error("j_m_quadrature: m must be >= 1");
    PrecisionScope scope(ctx.working_digits);
    if (route == JmRoute::beta) {
        // int_0^1 t^{-1/2} (1-t^m)/(1-t) K(sqrt(1-t)) dt with the geometric
        // form of the middle factor; t^{-1/2} log singularity sits at t = 0.
        Integrand f = [m, &ctx](const Real& t) {
            Real geo(0), tp(1);
            for (long i = 0; i < m; ++i) {
                geo += tp;
                tp *= t;
            }
            return geo * elliptic_k_comp(t, ctx) / sqrt(t);
        };
        SingularitySpec spec;
        spec.singular_left = true;
        return integrate(f, Real(0), Real(1), spec, ctx).value;
    }
    // Proper-time form on (0, inf): pi int dx/sinh(x) {1 - (1/2)_m/m!
    // cosh^{-2m} x 2F1(1/2, m; m+1; cosh^{-2} x)}.
    Rational poch(binomial(static_cast<unsigned long>(2 * m), static_cast<unsigned long>(m)),
                  pow2(2 * m));
    Real pr = to_real(poch);
    Integrand f = [m, pr, &ctx](const Real& x) {
        if (x > 100000) return Real(0); // decay ~ e^{-(2m+1)x}; long past dead
        Real sh = sinh(x);
        Real ch = cosh(x);
        Real z = 1 / (ch * ch);
        Real bracket = 1 - pr * pow(z, m) * hyp2f1_half(m, z, ctx);
        return Real(bracket / sh);
    };
    SingularitySpec spec;
    spec.exponential_decay_at_infinity = true;
    return real_pi() * integrate_half_line(f, spec, ctx).value;
}

Real delta_beta_integral(long n, const PrecisionContext& ctx) {
    if (n < 2) throw std::domain_error("delta_beta_integral: n must be >= 2");
    PrecisionScope scope(ctx.working_digits);
    long m = n / 2;
    Real psi_diff = digamma(Real(m + 1), ctx) - digamma(Real(m) + Real(0.5), ctx);
    Integrand f = [m, psi_diff, &ctx](const Real& t) {
        Real geo(0), tp(1);
        for (long i = 0; i < m; ++i) {
            geo += tp;
            tp *= t;
        }
        // {2 psi_diff (1-t^m) - t^m log t} / (1-t) with (1-t^m)/(1-t) summed
        // geometrically; the remaining log term stays mild at t = 1.
        Real val = 2 * psi_diff * geo - tp * log(t) / (1 - t);
        return val * elliptic_k_comp(t, ctx) / sqrt(t);
    };
    SingularitySpec spec;
    spec.singular_left = true;
    spec.singular_right = true;
    Real pi = real_pi();
    return Real(n) / 2 / (pi * pi * pi) * integrate(f, Real(0), Real(1), spec, ctx).value;
}

CheckReport homogeneous_check(int m_max, const PrecisionContext& ctx) {
    if (m_max < 3) throw std::domain_error("homogeneous_check: m_max must be >= 3");
    PrecisionScope scope(ctx.working_digits);
    CheckReport rep;
    Real tol(1e-12);
    Real log4 = log(Real(4));

    auto x_log = [&](long m) {
        return (log4 + digamma(Real(m) + Real(0.5), ctx) - digamma(Real(m + 1), ctx));
    };

    // Even recurrence: (2m+1)/(2m-1) X_{m+1} - [1 + (2m+2)(2m+1)/((2m)(2m-1))] X_m
    //                  + (2m)/(2m-2) X_{m-1}; valid from m = 2.
    {
        bool exact_ok = true;
        for (long m = 2; m <= m_max; ++m) {
            Rational r = Rational(2 * m + 1, 2 * m - 1) * Rational(m + 1) -
                         (Rational(1) + Rational((2 * m + 2) * (2 * m + 1), (2 * m) * (2 * m - 1))) *
                             Rational(m) +
                         Rational(2 * m, 2 * m - 2) * Rational(m - 1);
            if (r != Rational(0)) exact_ok = false;
        }
        rep.add("homogeneous-even-linear", exact_ok,
                exact_ok ? "" : "X_m = m fails the even recurrence");

        bool ok = true;
        for (long m = 2; m <= m_max; ++m) {
            Real xm1 = Real(m + 1) * x_log(m + 1);
            Real xm = Real(m) * x_log(m);
            Real xm0 = Real(m - 1) * x_log(m - 1);
            Real r = to_real(Rational(2 * m + 1, 2 * m - 1)) * xm1 -
                     to_real(Rational(1) +
                             Rational((2 * m + 2) * (2 * m + 1), (2 * m) * (2 * m - 1))) * xm +
                     to_real(Rational(2 * m, 2 * m - 2)) * xm0;
            if (abs(r) > tol) ok = false;
        }
        rep.add("homogeneous-even-log", ok, ok ? "" : "m[log4+psi diff] fails the even recurrence");
    }

    // Odd recurrence: (2m+1)/(2m+3) X_{m+1} - [1 + (2m)(2m-1)/((2m+2)(2m+1))] X_m
    //                 + (2m)/(2m+2) X_{m-1}; valid from m = 1.
    {
        bool exact_ok = true;
        for (long m = 1; m <= m_max; ++m) {
            Rational r = Rational(2 * m + 1, 2 * m + 3) * (Rational(m + 1) + Rational(1, 2)) -
                         (Rational(1) + Rational((2 * m) * (2 * m - 1), (2 * m + 2) * (2 * m + 1))) *
                             (Rational(m) + Rational(1, 2)) +
                         Rational(2 * m, 2 * m + 2) * (Rational(m - 1) + Rational(1, 2));
            if (r != Rational(0)) exact_ok = false;
        }
        rep.add("homogeneous-odd-linear", exact_ok,
                exact_ok ? "" : "X_m = m + 1/2 fails the odd recurrence");

        bool ok = true;
        for (long m = 1; m <= m_max; ++m) {
            auto xv = [&](long mm) { return (Real(mm) + Real(0.5)) * x_log(mm); };
            Real r = to_real(Rational(2 * m + 1, 2 * m + 3)) * xv(m + 1) -
                     to_real(Rational(1) +
                             Rational((2 * m) * (2 * m - 1), (2 * m + 2) * (2 * m + 1))) * xv(m) +
                     to_real(Rational(2 * m, 2 * m + 2)) * xv(m - 1);
            if (abs(r) > tol) ok = false;
        }
        rep.add("homogeneous-odd-log", ok,
                ok ? "" : "(m+1/2)[log4+psi diff] fails the odd recurrence");
    }

    // Linearity: an arbitrary combination is annihilated too.
    {
        bool ok = true;
        for (long m = 2; m <= m_max; ++m) {
            auto comb = [&](long mm) { return 3 * Real(mm) - 2 * Real(mm) * x_log(mm); };
            Real r = to_real(Rational(2 * m + 1, 2 * m - 1)) * comb(m + 1) -
                     to_real(Rational(1) +
                             Rational((2 * m + 2) * (2 * m + 1), (2 * m) * (2 * m - 1))) * comb(m) +
                     to_real(Rational(2 * m, 2 * m - 2)) * comb(m - 1);
            if (abs(r) > tol) ok = false;
        }
        rep.add("homogeneous-linearity", ok, ok ? "" : "linear combination not annihilated");
    }
    return rep;
}

Real to_real(const VarianceValue& v, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx.working_digits);
    return to_real(v.rat) + to_real(v.inv_pi) / real_pi();
}

} // namespace gueindex
