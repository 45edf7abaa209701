#include "gueindex/identity_checks.hpp"

#include <stdexcept>

namespace gueindex {

namespace {

using QP = Poly<Rational>;

QP qp_const(long v) { return QP(Rational(v)); }

// Shared pieces of the g-recurrence residuals at level n:
//   P  = N_n + 2n D_n                      (numerator of g_n + 2n)
//   Qp = P N_{n+1} + 2n N_n D_{n+1}        (numerator of (g_n+2n) g_{n+1} + 2n g_n, over D_n D_{n+1})
//   Qm = P N_{n-1} + 2n N_n D_{n-1}
struct GParts {
    QP p, qp, qm;
};

GParts g_parts(const SymmetricSystem& sys, int n) {
    const QP& nn = sys.g_z(n).num();
    const QP& dn = sys.g_z(n).den();
    GParts parts;
    parts.p = nn + qp_const(2 * n) * dn;
    parts.qp = parts.p * sys.g_z(n + 1).num() + qp_const(2 * n) * nn * sys.g_z(n + 1).den();
    parts.qm = parts.p * sys.g_z(n - 1).num() + qp_const(2 * n) * nn * sys.g_z(n - 1).den();
    return parts;
}

} // namespace

std::vector<Rational> z_taylor(const ZFunc& f, int order) {
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
    if (f.is_zero()) return c;
    Rational d0 = f.den().coeff(0);
    if (d0 == Rational(0)) throw std::domain_error("z_taylor: pole at z = 0");
    for (int i = 0; i <= order; ++i) {
        Rational acc = f.num().coeff(i);
        for (int j = 0; j < i; ++j) acc -= c[static_cast<std::size_t>(j)] * f.den().coeff(i - j);
        c[static_cast<std::size_t>(i)] = acc / d0;
    }
    return c;
}

PiScalar g_second_derivative_at_one(const SymmetricSystem& sys, int n) {
    LaurentSeries s = expand_at_one(sys.g_xi(n), 2);
    return s.coeff(2) * PiScalar(2);
}

CheckReport verify_identities(const TauSequence& seq, const SymmetricSystem& sys, int n_max) {
    if (seq.n_max() < n_max + 2)
        throw std::domain_error("verify_identities: tau sequence too short");
    if (sys.n_max() < n_max + 1)
        throw std::domain_error("verify_identities: symmetric system too short");
    CheckReport rep;

    // (i) five-term tau recurrence; the (sigma v)^{5n} prefactors cancel, so
    // it reduces to an identity on t_n = kappa_n T_n in Q[z].
    {
        bool ok = true;
        std::string detail;
        std::vector<QP> t(static_cast<std::size_t>(seq.n_max()) + 1);
        for (int k = 0; k <= seq.n_max(); ++k) t[static_cast<std::size_t>(k)] = seq.t_poly(k) * seq.kappa(k);
        for (int n = 2; n <= n_max; ++n) {
            auto& tm2 = t[static_cast<std::size_t>(n - 2)];
            auto& tm1 = t[static_cast<std::size_t>(n - 1)];
            auto& t0 = t[static_cast<std::size_t>(n)];
            auto& tp1 = t[static_cast<std::size_t>(n + 1)];
            auto& tp2 = t[static_cast<std::size_t>(n + 2)];
            QP res = tp2 * t0 * t0 * t0 * tm2
                   + tp2 * tm1 * tm1 * (tp1 * tm1 - qp_const(4 * n - 2) * t0 * t0)
                   + tm2 * tp1 * tp1 * (tp1 * tm1 - qp_const(4 * n + 2) * t0 * t0)
                   - qp_const(4 * (2L * n * n + 1)) * tp1 * tp1 * t0 * tm1 * tm1
                   + qp_const(32L * n * n * n) * tp1 * t0 * t0 * t0 * tm1
                   - qp_const(16L * n * n * n * n) * t0 * t0 * t0 * t0 * t0;
            if (!res.is_zero()) {
                ok = false;
                detail = "tau recurrence residual nonzero at n = " + std::to_string(n);
                break;
            }
        }
        rep.add("tau-recurrence", ok, detail);
    }

    // (ii) g_n^4 = (2n+g_n)^2 (g_n+g_{n-1})(g_n+g_{n+1}), cross-multiplied.
    {
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= n_max; ++n) {
            GParts parts = g_parts(sys, n);
            const QP& nn = sys.g_z(n).num();
            const QP& dm1 = sys.g_z(n - 1).den();
            const QP& dp1 = sys.g_z(n + 1).den();
            QP lhs = nn * nn * nn * nn * dm1 * dp1;
            QP rhs = parts.p * parts.p *
                     (nn * dm1 + sys.g_z(n - 1).num() * sys.g_z(n).den()) *
                     (nn * dp1 + sys.g_z(n + 1).num() * sys.g_z(n).den());
            if (!(lhs == rhs)) {
                ok = false;
                detail = "g recurrence fails at n = " + std::to_string(n);
                break;
            }
        }
        rep.add("g-recurrence", ok, detail);
    }

    // (iii) recovery of f1^2 and f2^2 from the g sequence, cross-multiplied.
    {
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= n_max; ++n) {
            GParts parts = g_parts(sys, n);
            const QP& nn = sys.g_z(n).num();
            const QP& dn = sys.g_z(n).den();
            const QP& dm1 = sys.g_z(n - 1).den();
            const QP& dp1 = sys.g_z(n + 1).den();
            ZFunc f1sq = sys.f1_z(n) * sys.f1_z(n);
            ZFunc f2sq = sys.f2_z(n) * sys.f2_z(n);
            // f1^2 = nn^2 Qp dm1 / (dn P dp1 Qm)
            QP lhs1 = f1sq.num() * (dn * parts.p * dp1 * parts.qm);
            QP rhs1 = f1sq.den() * (nn * nn * parts.qp * dm1);
            // f2^2 = (g+2n) Qm dp1 / (dn dm1 Qp):
            QP lhs2 = f2sq.num() * (dn * dm1 * parts.qp);
            QP rhs2 = f2sq.den() * (parts.p * parts.qm * dp1);
            if (!(lhs1 == rhs1) || !(lhs2 == rhs2)) {
                ok = false;
                detail = "f recovery fails at n = " + std::to_string(n);
                break;
            }
        }
        rep.add("f-recovery-squares", ok, detail);
    }

    // (iv) g from the f product vs g from the tau ratio.
    {
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= n_max; ++n) {
            const QP& tn = seq.t_poly(n);
            Rational kr = seq.kappa(n + 1) * seq.kappa(n - 1) / (seq.kappa(n) * seq.kappa(n));
            QP lhs = sys.g_z(n).num() * tn * tn;
            QP rhs = sys.g_z(n).den() *
                     (seq.t_poly(n + 1) * seq.t_poly(n - 1) * kr - qp_const(2 * n) * tn * tn);
            if (!(lhs == rhs)) {
                ok = false;
                detail = "f1 f2 vs tau ratio mismatch at n = " + std::to_string(n);
                break;
            }
        }
        rep.add("g-vs-tau-ratio", ok, detail);
    }

    // (v) X_n = tau_n'(1)/tau_n(1) = n/2.
    {
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= n_max; ++n) {
            PiScalar x = seq.d1_at_one(n) / seq.value_at_one(n);
            if (!(x == PiScalar(Rational(n, 2)))) {
                ok = false;
                detail = "X_n != n/2 at n = " + std::to_string(n);
                break;
            }
        }
        rep.add("mean-ratio", ok, detail);
    }

    // (vi) constraint and normalization.
    {
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= n_max + 1; ++n) {
            if (!(sys.f0_z(n) + sys.f1_z(n) + sys.f2_z(n)).is_zero()) {
                ok = false;
                detail = "f0+f1+f2 != 0 at n = " + std::to_string(n);
                break;
            }
        }
        rep.add("f-constraint", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= n_max + 2; ++n) {
            if (!(seq.value_at_one(n) == TauSequence::value_at_one_closed(n))) {
                ok = false;
                detail = "tau_n(1) closed form fails at n = " + std::to_string(n);
                break;
            }
        }
        rep.add("tau-at-one", ok, detail);
    }

    // g_n(1) = 0 and g_n'(1) = 0: first two z-Taylor coefficients vanish.
    {
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= n_max; ++n) {
            auto c = z_taylor(sys.g_z(n), 1);
            if (c[0] != Rational(0) || c[1] != Rational(0)) {
                ok = false;
                detail = "g or g' nonzero at xi=1 for n = " + std::to_string(n);
                break;
            }
        }
        rep.add("g-flat-at-one", ok, detail);
    }

    return rep;
}

std::vector<LaurentCoefficientTable> laurent_table(const SymmetricSystem& sys, int m_max) {
    if (sys.n_max() < 2 * m_max + 2)
        throw std::domain_error("laurent_table: symmetric system too short");
    std::vector<LaurentCoefficientTable> out;
    out.reserve(static_cast<std::size_t>(m_max) + 1);
    for (int m = 0; m <= m_max; ++m) {
        LaurentCoefficientTable t;
        t.m = m;
        SymmetricTriple even = sys.triple(2 * m);
        SymmetricTriple odd = sys.triple(2 * m + 1);
        LaurentSeries f2e = expand_at_one(even.f2, 2);
        LaurentSeries f2o = expand_at_one(odd.f2, 0);
        LaurentSeries f0e = expand_at_one(even.f0, 1);
        LaurentSeries f0o = expand_at_one(odd.f0, -1);
        LaurentSeries f1e = expand_at_one(even.f1, 1);
        LaurentSeries f1o = expand_at_one(odd.f1, 3);
        if (!f2e.coeffs.empty() && f2e.min_order < 1)
            throw std::domain_error("laurent_table: f2 even series starts below order 1");
        if (!f1o.coeffs.empty() && f1o.min_order < 3)
            throw std::domain_error("laurent_table: f1 odd series starts below order 3");
        t.a1 = f2e.coeff(1);
        t.a2 = f2e.coeff(2);
        t.b_m1 = f2o.coeff(-1);
        t.b0 = f2o.coeff(0);
        t.c1 = f0e.coeff(1);
        t.d_m1 = f0o.coeff(-1);
        t.e1 = f1e.coeff(1);
        t.f3 = f1o.coeff(3);
        out.push_back(std::move(t));
    }
    return out;
}

namespace {

// (C(2m, m) / 4^m)^2, the square of the normalized central binomial.
Rational central_binomial_sq(long m) {
    Rational c(binomial(static_cast<unsigned long>(2 * m), static_cast<unsigned long>(m)),
               pow2(2 * m));
    return c * c;
}

PiScalar a1_closed(long m) {
    // A_{1,m} = Gamma(m+1)/(pi Gamma(m+1/2)) * sum_{r<m} Gamma^2(r+1/2)/Gamma^2(r+1)
    //         = [4^m (m!)^2/(2m)!] * sum_{r<m} (C(2r,r)/4^r)^2 * sigma^{-1}
    Rational s(0);
    Rational c(1);
    for (long r = 0; r < m; ++r) {
        s += c;
        c *= Rational((2 * r + 1) * (2 * r + 1), (2 * r + 2) * (2 * r + 2));
    }
    Rational pre(pow2(2 * m) * factorial(static_cast<unsigned long>(m)) *
                     factorial(static_cast<unsigned long>(m)),
                 factorial(static_cast<unsigned long>(2 * m)));
    return PiScalar(pre * s) * PiScalar::sigma_pow(-1);
}

PiScalar e1_closed(long m) {
    // E_{1,m} = Gamma(m+1/2)/(pi Gamma(m+1)) = (C(2m,m)/4^m) sigma^{-1}
    Rational c(binomial(static_cast<unsigned long>(2 * m), static_cast<unsigned long>(m)),
               pow2(2 * m));
    return PiScalar(c) * PiScalar::sigma_pow(-1);
}

} // namespace

CheckReport laurent_closed_form_checks(const SymmetricSystem& sys, int m_max) {
    CheckReport rep;
    std::vector<LaurentCoefficientTable> tab = laurent_table(sys, m_max);
    // A_{1,m+1} for the relations that look one step ahead.
    std::vector<PiScalar> a1_next(static_cast<std::size_t>(m_max) + 1);
    for (int m = 0; m <= m_max; ++m) a1_next[static_cast<std::size_t>(m)] = a1_closed(m + 1);

    for (int m = 0; m <= m_max; ++m) {
        const auto& t = tab[static_cast<std::size_t>(m)];
        const PiScalar& a1n = a1_next[static_cast<std::size_t>(m)];
        std::string at = " at m = " + std::to_string(m);

        rep.add("laurent-a1-closed-form", t.a1 == a1_closed(m),
                t.a1 == a1_closed(m) ? "" : "A1 mismatch" + at);
        rep.add("laurent-e1-closed-form", t.e1 == e1_closed(m),
                t.e1 == e1_closed(m) ? "" : "E1 mismatch" + at);

        PiScalar bm1_expect = PiScalar(Rational(-4 * (m + 1))) / a1n;
        rep.add("laurent-b-closed-form", t.b_m1 == bm1_expect,
                t.b_m1 == bm1_expect ? "" : "B_{-1} mismatch" + at);
        rep.add("laurent-b-equals-minus-d", t.b_m1 == -t.d_m1,
                t.b_m1 == -t.d_m1 ? "" : "B_{-1} != -D_{-1}" + at);

        PiScalar c1_expect = PiScalar(Rational(-(2 * m + 1), 2 * m + 2)) * a1n;
        rep.add("laurent-c1-relation", t.c1 == c1_expect,
                t.c1 == c1_expect ? "" : "C1 mismatch" + at);

        // F_{3,m} = (1/(4 pi)) Gamma(m+3/2) / ((m+1) Gamma(m+2)) * A_{1,m+1}^2
        PiScalar f3_expect = gamma_half(2 * m + 3) /
                             (PiScalar(Rational((m + 1)) *
                                       Rational(factorial(static_cast<unsigned long>(m + 1)))) *
                              PiScalar::pi() * PiScalar(4)) *
                             a1n * a1n;
        rep.add("laurent-f3-closed-form", t.f3 == f3_expect,
                t.f3 == f3_expect ? "" : "F3 mismatch" + at);

        // e_{2m+1} = E1 A1 + F3 B_{-1} = -(1/pi) (C(2m,m)/4^m)^2, and the two
        // halves are (1/2) g''_{2m}(1), (1/2) g''_{2m+1}(1).
        PiScalar half_g2_even = g_second_derivative_at_one(sys, 2 * m) / PiScalar(2);
        PiScalar half_g2_odd = g_second_derivative_at_one(sys, 2 * m + 1) / PiScalar(2);
        bool ge = half_g2_even == t.e1 * t.a1;
        bool go = half_g2_odd == t.f3 * t.b_m1;
        rep.add("laurent-g2-even-product", ge, ge ? "" : "g''_{2m} mismatch" + at);
        rep.add("laurent-g2-odd-product", go, go ? "" : "g''_{2m+1} mismatch" + at);

        PiScalar e_expect = PiScalar(-central_binomial_sq(m)) * PiScalar::sigma_pow(-2);
        bool eg = (t.e1 * t.a1 + t.f3 * t.b_m1) == e_expect;
        rep.add("laurent-e-term", eg, eg ? "" : "e_{2m+1} mismatch" + at);
    }
    return rep;
}

} // namespace gueindex
