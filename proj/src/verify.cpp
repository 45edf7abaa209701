#include "gueindex/verify.hpp"

#include "gueindex/identity_checks.hpp"
#include "gueindex/quadrature.hpp"
#include "gueindex/sampler.hpp"
#include "gueindex/special_functions.hpp"
#include "gueindex/variance.hpp"

#include <algorithm>
#include <random>

namespace gueindex {

namespace {

// Small deterministic generators for the algebra property checks.
struct AlgebraRng {
    std::mt19937_64 rng{0x5eedULL};

    Rational rational() {
        std::uniform_int_distribution<long> num(-9, 9);
        std::uniform_int_distribution<long> den(1, 9);
        return Rational(num(rng), den(rng));
    }

    PiScalar pi_scalar(int max_deg) {
        std::uniform_int_distribution<int> deg(0, max_deg);
        auto poly = [&](bool nonzero) {
            std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
            for (auto& v : c) v = rational();
            SigmaPoly p{std::move(c)};
            if (nonzero && p.is_zero()) p = SigmaPoly(Rational(1));
            return p;
        };
        SigmaPoly den_poly = poly(true);
        return PiScalar(poly(false), den_poly);
    }

    XiFunction xi_function(int max_deg) {
        std::uniform_int_distribution<int> deg(0, max_deg);
        auto poly = [&](bool nonzero) {
            std::vector<PiScalar> c(static_cast<std::size_t>(deg(rng)) + 1);
            for (auto& v : c) v = pi_scalar(1);
            XiPoly p{std::move(c)};
            if (nonzero && p.is_zero()) p = XiPoly(PiScalar(1));
            return p;
        };
        XiPoly den_poly = poly(true);
        return XiFunction(poly(false), den_poly);
    }
};

void check_exact_algebra(CheckReport& rep, const PrecisionContext& ctx) {
    AlgebraRng gen;
    bool cancel_ok = true, canonical_ok = true;
    for (int i = 0; i < 40 && (cancel_ok && canonical_ok); ++i) {
        PiScalar a = gen.pi_scalar(3);
        PiScalar b = gen.pi_scalar(3);
        if (b.is_zero()) continue;
        if (!((a * b) / b == a)) cancel_ok = false;
        // canonical form is insensitive to common factors
        PiScalar scaled(a.num() * Rational(6), a.den() * Rational(6));
        if (!(scaled == a)) canonical_ok = false;
    }
    for (int i = 0; i < 15 && (cancel_ok && canonical_ok); ++i) {
        XiFunction a = gen.xi_function(2);
        XiFunction b = gen.xi_function(2);
        if (b.is_zero()) continue;
        if (!((a * b) / b == a)) cancel_ok = false;
    }
    rep.add("algebra-cancellation", cancel_ok, cancel_ok ? "" : "a*b/b != a");
    rep.add("algebra-canonical-form", canonical_ok, canonical_ok ? "" : "normalization not canonical");

    // eval_numeric is a ring homomorphism up to rounding
    bool hom_ok = true;
    Real bound = pow(Real(10), -static_cast<long>(ctx.working_digits) + 6);
    for (int i = 0; i < 20; ++i) {
        PiScalar a = gen.pi_scalar(2);
        PiScalar b = gen.pi_scalar(2);
        Real lhs = eval_numeric(a * b, ctx);
        Real rhs = eval_numeric(a, ctx) * eval_numeric(b, ctx);
        Real ar = abs(rhs);
        Real scale = std::max(Real(1), ar);
        if (abs(lhs - rhs) > bound * scale) hom_ok = false;
    }
    rep.add("algebra-eval-homomorphism", hom_ok, hom_ok ? "" : "eval(ab) != eval(a)eval(b)");
}

void check_laurent_products(CheckReport& rep, const SymmetricSystem& sys) {
    // expand(product) == Cauchy product of expansions, on the low-level f's.
    bool ok = true;
    const int order = 6;
    for (int n = 1; n <= 2 && ok; ++n) {
        XiFunction a = sys.triple(n).f1;
        XiFunction b = sys.triple(n).f2;
        LaurentSeries pa = expand_at_one(a, order);
        LaurentSeries pb = expand_at_one(b, order);
        LaurentSeries prod = expand_at_one(a * b, order);
        LaurentSeries cp = cauchy_product(pa, pb, order);
        for (int j = std::min(prod.min_order, cp.min_order); j <= order - 1; ++j)
            if (!(prod.coeff(j) == cp.coeff(j))) ok = false;
    }
    rep.add("laurent-cauchy-product", ok, ok ? "" : "expansion of product mismatch");
}

void check_special_numeric(CheckReport& rep, const PrecisionContext& ctx) {
    // AGM K(z) vs the truncated hypergeometric series
    {
        bool ok = true;
        Real tol(1e-12);
        for (int i = 1; i <= 9; ++i) {
            Real z = Real(i) / 10;
            Real series(0), term(real_pi() / 2);
            Real z2 = z * z;
            for (long k = 0; k < 4000; ++k) {
                series += term;
                Real r = (Real(k) + Real(0.5)) / (k + 1);
                term *= r * r * z2;
                if (term < Real(1e-24)) break;
            }
            if (abs(elliptic_k(z, ctx) - series) > tol) ok = false;
        }
        rep.add("elliptic-agm-vs-series", ok, ok ? "" : "AGM disagrees with series");
    }

    // digamma functional equation on a grid; trigamma at 1
    {
        bool ok = true;
        Real tol = pow(Real(10), -static_cast<long>(ctx.working_digits) + 6);
        for (double x : {0.3, 1.0, 1.7, 5.5, 12.25, 40.0}) {
            Real xv(x);
            if (abs(digamma(xv + 1, ctx) - digamma(xv, ctx) - 1 / xv) > tol) ok = false;
        }
        if (abs(trigamma(Real(1), ctx) - real_pi() * real_pi() / 6) > tol) ok = false;
        if (abs(digamma(Real(1.5), ctx) - digamma(Real(0.5), ctx) - 2) > tol) ok = false;
        rep.add("digamma-functional-equation", ok, ok ? "" : "psi recurrence violated");
    }

    // quadrature: exact value and conservative error estimate
    {
        SingularitySpec spec;
        spec.singular_left = true;
        Integrand f = [](const Real& t) { return 1 / sqrt(t); };
        QuadratureResult r1 = integrate(f, Real(0), Real(1), spec, ctx);
        bool exact_ok = abs(r1.value - 2) < Real(ctx.quadrature_tolerance);

        PrecisionContext tighter(ctx.working_digits, ctx.series_term_cap,
                                 ctx.quadrature_tolerance / 2);
        QuadratureResult r2 = integrate(f, Real(0), Real(1), spec, tighter);
        bool conservative = abs(r1.value - r2.value) <= r1.error_estimate + Real(1e-40);
        rep.add("quadrature-inverse-sqrt", exact_ok, exact_ok ? "" : "int t^-1/2 != 2");
        rep.add("quadrature-conservative-estimate", conservative,
                conservative ? "" : "halving tolerance moved the value beyond the estimate");
    }

    // sum_{l>=0} G^2(l+1/2)/G^2(l+1) [psi(l+1) - psi(l+1/2)] = pi^2/2,
    // partial sums Richardson-extrapolated in 1/L.
    {
        const int levels = 7;
        std::vector<Real> s(levels), hs(levels);
        Real rho = real_pi();            // Gamma^2(l+1/2)/Gamma^2(l+1) at l = 0
        Real dpsi = 2 * real_log2();     // psi(1) - psi(1/2)
        Real acc(0);
        long l = 0;
        long base = 500;
        for (int j = 0; j < levels; ++j) {
            long target = base << j;
            for (; l < target; ++l) {
                acc += rho * dpsi;
                Real lp = Real(l) + 1;
                Real lh = Real(l) + Real(0.5);
                rho *= (lh / lp) * (lh / lp);
                dpsi += 1 / lp - 1 / lh;
            }
            s[static_cast<std::size_t>(j)] = acc;
            hs[static_cast<std::size_t>(j)] = Real(1) / target;
        }
        // Neville extrapolation to h = 0
        for (int stage = 1; stage < levels; ++stage)
            for (int j = levels - 1; j >= stage; --j)
                s[static_cast<std::size_t>(j)] =
                    s[static_cast<std::size_t>(j)] +
                    (s[static_cast<std::size_t>(j)] - s[static_cast<std::size_t>(j - 1)]) *
                        hs[static_cast<std::size_t>(j)] /
                        (hs[static_cast<std::size_t>(j - stage)] - hs[static_cast<std::size_t>(j)]);
        Real err = abs(s[levels - 1] - real_pi() * real_pi() / 2);
        bool ok = err < Real(1e-10);
        rep.add("digamma-gamma-sum-identity", ok,
                ok ? "" : "extrapolated sum misses pi^2/2");
    }
}

void check_distribution(CheckReport& rep, const TauSequence& seq, int max_n) {
    bool sum_ok = true, sym_ok = true, mean_ok = true;
    for (int n = 0; n <= max_n; ++n) {
        IndexDistribution d = index_distribution(seq, n);
        PiScalar total(0), mean(0);
        for (int k = 0; k <= n; ++k) {
            total += d.probs[static_cast<std::size_t>(k)];
            mean += d.probs[static_cast<std::size_t>(k)] * PiScalar(k);
            if (!(d.probs[static_cast<std::size_t>(k)] ==
                  d.probs[static_cast<std::size_t>(n - k)]))
                sym_ok = false;
        }
        if (!(total == PiScalar(1))) sum_ok = false;
        if (!(mean == PiScalar(Rational(n, 2)))) mean_ok = false;
    }
    rep.add("distribution-sums-to-one", sum_ok, sum_ok ? "" : "probabilities do not sum to 1");
    rep.add("distribution-symmetry", sym_ok, sym_ok ? "" : "p(k,n) != p(n-k,n)");
    rep.add("distribution-mean", mean_ok, mean_ok ? "" : "mean != n/2");
}

void check_variance_routes(CheckReport& rep, const TauSequence& seq, int max_n,
                           const PrecisionContext& ctx) {
    // exact route agreement
    {
        bool ok = true;
        std::string detail;
        auto table = delta_recurrence_table(std::max<long>(max_n, 5));
        for (int n = 0; n <= max_n && ok; ++n) {
            VarianceValue a = delta_sum(n);
            if (!(delta_voisum(n) == a)) {
                ok = false;
                detail = "voisum differs at n = " + std::to_string(n);
            }
            if (n >= 1 && !(table[static_cast<std::size_t>(n)] == a)) {
                ok = false;
                detail = "recurrence table differs at n = " + std::to_string(n);
            }
            if (n <= seq.n_max() && !(delta_from_distribution(seq, n) == a)) {
                ok = false;
                detail = "distribution route differs at n = " + std::to_string(n);
            }
        }
        rep.add("variance-exact-routes", ok, detail);
    }

    // closed form within 1e-8
    {
        bool ok = true;
        std::string detail;
        for (int n = 2; n <= max_n; ++n) {
            Real exact = to_real(delta_sum(n), ctx);
            Real approx = delta_closed_form(n, ctx);
            if (abs(exact - approx) > Real(1e-8)) {
                ok = false;
                detail = "closed form off at n = " + std::to_string(n);
                break;
            }
        }
        rep.add("variance-closed-form", ok, detail);
    }

    // even-odd relation and the third-order recurrence, exact
    {
        bool ok = true;
        std::string detail;
        std::vector<VarianceValue> d(104);
        for (long n = 0; n < 104; ++n) d[static_cast<std::size_t>(n)] = delta_sum(n);
        for (long m = 1; m <= 50 && ok; ++m) {
            VarianceValue odd = d[static_cast<std::size_t>(2 * m + 1)];
            VarianceValue even = d[static_cast<std::size_t>(2 * m)];
            if (!(odd.rat * Rational(2 * m) == even.rat * Rational(2 * m + 1)) ||
                !(odd.inv_pi * Rational(2 * m) == even.inv_pi * Rational(2 * m + 1))) {
                ok = false;
                detail = "even-odd relation fails at m = " + std::to_string(m);
            }
        }
        rep.add("variance-even-odd", ok, detail);

        ok = true;
        detail.clear();
        for (long n = 2; n <= 100 && ok; ++n) {
            Rational ra = Rational(n) * d[static_cast<std::size_t>(n + 1)].rat -
                          Rational(n + 1) * d[static_cast<std::size_t>(n)].rat -
                          Rational(n - 2) * d[static_cast<std::size_t>(n - 1)].rat +
                          Rational(n - 1) * d[static_cast<std::size_t>(n - 2)].rat;
            Rational rb = Rational(n) * d[static_cast<std::size_t>(n + 1)].inv_pi -
                          Rational(n + 1) * d[static_cast<std::size_t>(n)].inv_pi -
                          Rational(n - 2) * d[static_cast<std::size_t>(n - 1)].inv_pi +
                          Rational(n - 1) * d[static_cast<std::size_t>(n - 2)].inv_pi;
            Rational expect = (n % 2 == 1) ? e_term((n - 1) / 2).value : Rational(0);
            if (ra != Rational(0) || rb != expect) {
                ok = false;
                detail = "third-order recurrence fails at n = " + std::to_string(n);
            }
        }
        rep.add("variance-third-order-recurrence", ok, detail);

        ok = true;
        for (long n = 0; n + 2 <= 102 && ok; ++n) {
            Real lo = to_real(d[static_cast<std::size_t>(n)], ctx);
            Real hi = to_real(d[static_cast<std::size_t>(n + 2)], ctx);
            if (!(hi > lo)) ok = false;
        }
        rep.add("variance-monotone-growth", ok, ok ? "" : "Delta_{n+2} <= Delta_n");
    }

    // asymptotic route: decreasing error, small at k = 10
    {
        bool ok = true;
        Real prev_err(-1);
        for (long k : {5L, 10L}) {
            for (long n : {2 * k, 2 * k + 1}) {
                Real err = abs(delta_asymptotic(n, ctx) - to_real(delta_sum(n), ctx));
                if (prev_err >= 0 && err > prev_err) ok = false;
            }
            Real err_even = abs(delta_asymptotic(2 * k, ctx) - to_real(delta_sum(2 * k), ctx));
            prev_err = err_even;
        }
        Real err10 = abs(delta_asymptotic(20, ctx) - to_real(delta_sum(20), ctx));
        if (!(err10 < Real(1e-6))) ok = false;
        rep.add("variance-asymptotic-decay", ok, ok ? "" : "asymptotic error not decaying");
    }
}

void check_g_second_derivative(CheckReport& rep, const SymmetricSystem& sys, int max_n) {
    bool ok = true;
    std::string detail;
    int top = std::min(max_n, sys.n_max() - 1);
    for (int n = 1; n <= top; ++n) {
        PiScalar g2 = g_second_derivative_at_one(sys, n);
        VarianceValue dp = delta_sum(n + 1), d0 = delta_sum(n), dm = delta_sum(n - 1);
        Rational b = Rational(2 * n) * (dp.inv_pi + dm.inv_pi - Rational(2) * d0.inv_pi);
        Rational a = Rational(2 * n) * (dp.rat + dm.rat - Rational(2) * d0.rat);
        PiScalar expect = PiScalar(a) + PiScalar(b) * PiScalar::sigma_pow(-2);
        if (!(g2 == expect)) {
            ok = false;
            detail = "g'' vs second difference of Delta fails at n = " + std::to_string(n);
            break;
        }
    }
    rep.add("g-second-derivative-vs-variance", ok, detail);

    bool pair_ok = true;
    for (int m = 0; 2 * m + 2 <= std::min(max_n, sys.n_max()); ++m) {
        PiScalar s = g_second_derivative_at_one(sys, 2 * m + 1) +
                     g_second_derivative_at_one(sys, 2 * m + 2);
        if (!s.is_zero()) pair_ok = false;
    }
    rep.add("g-second-derivative-odd-even-pairs", pair_ok,
            pair_ok ? "" : "g''_{2m+1}(1) + g''_{2m+2}(1) != 0");
}

void check_sampler(CheckReport& rep, const TauSequence& seq, const PrecisionContext& ctx) {
    // inertia vs the root-bracketing oracle
    {
        bool ok = true;
        Rng rng(20240517ULL);
        for (int trial = 0; trial < 200 && ok; ++trial) {
            int n = 1 + static_cast<int>(rng() % 8);
            TridiagonalMatrix t = sample_tridiagonal(n, rng);
            if (positive_count(t) != positive_count_bracketing(t)) ok = false;
        }
        rep.add("sampler-inertia-vs-bracketing", ok, ok ? "" : "pivot count != bracketing count");
    }

    // scale invariance
    {
        bool ok = true;
        Rng rng(99ULL);
        for (int trial = 0; trial < 50 && ok; ++trial) {
            TridiagonalMatrix t = sample_tridiagonal(6, rng);
            int base = positive_count(t);
            for (double c : {0.25, 3.75}) {
                TridiagonalMatrix s = t;
                for (auto& v : s.diag) v *= c;
                for (auto& v : s.offdiag) v *= c;
                if (positive_count(s) != base) ok = false;
            }
        }
        rep.add("sampler-scale-invariance", ok, ok ? "" : "positive_count not scale invariant");
    }

    // seeded determinism, including independence from the thread count
    {
        McEstimate a = estimate(4, 20000, 7, 1);
        McEstimate b = estimate(4, 20000, 7, 2);
        McEstimate c = estimate(4, 20000, 7);
        bool ok = a.counts == b.counts && a.counts == c.counts && a.variance == b.variance &&
                  a.flagged == b.flagged;
        rep.add("sampler-determinism", ok, ok ? "" : "same seed gave different histograms");
    }

    // convergence: estimate within 5 stderr, stderr shrinking like 1/sqrt(S)
    {
        McEstimate small = estimate(4, 20000, 11);
        McEstimate big = estimate(4, 320000, 11);
        double exact = static_cast<double>(to_real(delta_sum(4), ctx));
        bool ok = std::abs(small.variance - exact) < 5 * small.stderr_variance &&
                  std::abs(big.variance - exact) < 5 * big.stderr_variance &&
                  big.stderr_variance < small.stderr_variance / 2;
        rep.add("sampler-convergence", ok, ok ? "" : "variance estimate not converging");
    }

    // chi-square behaviour: calibrated run and a negative control
    {
        McEstimate est = estimate(3, 100000, 5);
        IndexDistribution exact = index_distribution(seq, 3);
        ChiSquareResult good = chi_square(est, exact, ctx);
        IndexDistribution wrong = exact;
        std::swap(wrong.probs[0], wrong.probs[1]);
        ChiSquareResult bad = chi_square(est, wrong, ctx);
        bool ok = good.p_value > 1e-3 && bad.p_value < 1e-6;
        rep.add("sampler-chi-square-calibration", ok,
                ok ? "" : "chi-square calibration or negative control failed");
    }
}

} // namespace

CheckReport verify_all(int max_n, const PrecisionContext& ctx) {
    if (max_n < 3) throw std::domain_error("verify_all: max_n must be >= 3");
    CheckReport rep;

    TauSequence seq = build_tau(max_n + 2);
    SymmetricSystem sys = build_fg(std::max(max_n + 1, 2 * std::min((max_n - 2) / 2, 5) + 2));

    check_exact_algebra(rep, ctx);
    check_laurent_products(rep, sys);
    check_special_numeric(rep, ctx);

    rep.merge(verify_identities(seq, sys, max_n));
    int m_max = std::min((max_n - 2) / 2, 5);
    if (m_max >= 0) rep.merge(laurent_closed_form_checks(sys, m_max));

    check_distribution(rep, seq, max_n);
    check_variance_routes(rep, seq, max_n, ctx);
    check_g_second_derivative(rep, sys, max_n);
    rep.merge(homogeneous_check(std::max(3, max_n / 2), ctx));

    // integral representations at small m
    {
        bool ok = true;
        std::string detail;
        for (long m = 1; m <= 2 && ok; ++m) {
            Real closed = j_m_closed(m, ctx);
            if (abs(j_m_quadrature(m, JmRoute::beta, ctx) - closed) > Real(1e-8)) {
                ok = false;
                detail = "beta route off at m = " + std::to_string(m);
            }
            if (abs(j_m_quadrature(m, JmRoute::sinh, ctx) - closed) > Real(1e-8)) {
                ok = false;
                detail = "sinh route off at m = " + std::to_string(m);
            }
        }
        rep.add("integral-routes", ok, detail);
    }

    check_sampler(rep, seq, ctx);
    return rep;
}

} // namespace gueindex
