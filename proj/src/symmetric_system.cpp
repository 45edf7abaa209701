#include "gueindex/symmetric_system.hpp"

#include <stdexcept>

namespace gueindex {

namespace {

ZFunc z_monomial(int deg, Rational c) {
    return ZFunc(Poly<Rational>::monomial(deg, std::move(c)));
}

} // namespace

SymmetricSystem build_fg(int n_max) {
    if (n_max < 0) throw std::domain_error("build_fg: n_max must be >= 0");
    SymmetricSystem sys;
    auto sz = static_cast<std::size_t>(n_max) + 1;
    sys.f0_.resize(sz);
    sys.f1_.resize(sz);
    sys.f2_.resize(sz);
    sys.g_.resize(sz);

    sys.f0_[0] = z_monomial(1, Rational(-2));
    sys.f1_[0] = z_monomial(1, Rational(2));
    sys.f2_[0] = ZFunc();

    for (int n = 0; n < n_max; ++n) {
        auto i = static_cast<std::size_t>(n);
        const ZFunc& f0n = sys.f0_[i];
        const ZFunc& f2n = sys.f2_[i];
        if (f0n.is_zero())
            throw std::domain_error("build_fg: f0 vanished identically at level " + std::to_string(n));
        ZFunc two_np1{Rational(2 * (n + 1))};
        ZFunc f2next = -f2n - f0n + two_np1 / f0n;
        if (f2next.is_zero())
            throw std::domain_error("build_fg: f2 vanished identically at level " + std::to_string(n + 1));
        ZFunc f0next = -f0n - f2next + two_np1 / f2next;
        sys.f2_[i + 1] = f2next;
        sys.f0_[i + 1] = std::move(f0next);
        sys.f1_[i + 1] = -sys.f0_[i + 1] - sys.f2_[i + 1];
    }
    for (int n = 0; n <= n_max; ++n) {
        auto i = static_cast<std::size_t>(n);
        sys.g_[i] = sys.f1_[i] * sys.f2_[i];
    }
    return sys;
}

SymmetricTriple SymmetricSystem::triple(int n) const {
    return {z_to_xi(f0_z(n)), z_to_xi(f1_z(n)), z_to_xi(f2_z(n))};
}

XiFunction SymmetricSystem::g_xi(int n) const { return z_to_xi(g_z(n)); }

XiFunction z_to_xi(const ZFunc& r) {
    if (r.is_zero()) return XiFunction();

    // z^i (sigma v)^{d-i} with u = xi-1, v = xi+1: sum_i c_i u^i sigma^{d-i} v^{d-i}
    auto lift = [](const Poly<Rational>& p) {
        int d = p.degree();
        XiPoly u{std::vector<PiScalar>{PiScalar(-1), PiScalar(1)}};
        XiPoly v{std::vector<PiScalar>{PiScalar(1), PiScalar(1)}};
        XiPoly acc;
        for (int i = 0; i <= d; ++i) {
            Rational ci = p.coeff(i);
            if (ci == Rational(0)) continue;
            XiPoly term = pow(u, static_cast<unsigned long>(i)) *
                          pow(v, static_cast<unsigned long>(d - i));
            acc += term * (PiScalar(ci) * PiScalar::sigma_pow(d - i));
        }
        return acc;
    };

    int p = r.num().degree();
    int q = r.den().degree();
    XiPoly num = lift(r.num());
    XiPoly den = lift(r.den());
    XiPoly sv{std::vector<PiScalar>{PiScalar::sigma(), PiScalar::sigma()}}; // sigma (xi+1)
    if (q > p) num *= pow(sv, static_cast<unsigned long>(q - p));
    if (p > q) den *= pow(sv, static_cast<unsigned long>(p - q));
    return XiFunction::from_coprime(std::move(num), std::move(den));
}

ZFunc g_from_tau(const TauSequence& seq, int n) {
    if (n < 1 || n + 1 > seq.n_max())
        throw std::out_of_range("g_from_tau: need 1 <= n <= n_max - 1");
    // tau_n = kappa_n (sigma v)^n T_n(z): the (sigma v) powers cancel in the ratio.
    ZFunc tn{seq.t_poly(n)};
    ZFunc ratio = ZFunc{seq.t_poly(n + 1)} * ZFunc{seq.t_poly(n - 1)} / (tn * tn);
    Rational kr = seq.kappa(n + 1) * seq.kappa(n - 1) / (seq.kappa(n) * seq.kappa(n));
    return ZFunc{Rational(-2 * n)} + ZFunc{kr} * ratio;
}

} // namespace gueindex
