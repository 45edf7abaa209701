#include "gueindex/tau_sequence.hpp"

#include "gueindex/detail/bipoly.hpp"

#include <stdexcept>

namespace gueindex {

namespace {

using detail::BiPoly;

// Entry (i, j) of the Hankel matrix, scaled by 2^{n-1} so that every
// coefficient is an integer: (xi + (-1)^{i+j}) * 2^{n-1} Gamma((i+j+1)/2).
BiPoly scaled_entry(int i, int j, int n) {
    long scale_exp = n - 1;
    BigInt gamma_int; // the scaled Gamma value; sigma power is (i+j) mod 2 == 0 ? 1 : 0
    bool has_sigma = ((i + j) % 2 == 0);
    if (has_sigma) {
        // Gamma(r + 1/2) = (2r-1)!! / 2^r * sigma, r = (i+j)/2
        long r = (i + j) / 2;
        BigInt dfac = 1;
        for (long v = 3; v <= 2 * r - 1; v += 2) dfac *= v;
        gamma_int = dfac * pow2(scale_exp - r);
    } else {
        long k = (i + j + 1) / 2; // integer argument
        gamma_int = factorial(static_cast<unsigned long>(k - 1)) * pow2(scale_exp);
    }
    BiPoly e(2, has_sigma ? 2 : 1);
    int js = has_sigma ? 1 : 0;
    e.at(1, js) = gamma_int;                                 // xi * gamma
    e.at(0, js) = ((i + j) % 2 == 0) ? gamma_int : -gamma_int; // (+/-1) * gamma
    e.trim();
    return e;
}

} // namespace

const XiPoly& TauSequence::tau(int n) const {
    if (n < 0 || n > n_max()) throw std::out_of_range("TauSequence::tau");
    return tau_[static_cast<std::size_t>(n)];
}

const Poly<Rational>& TauSequence::t_poly(int n) const {
    if (n < 0 || n > n_max()) throw std::out_of_range("TauSequence::t_poly");
    return t_[static_cast<std::size_t>(n)];
}

const Rational& TauSequence::kappa(int n) const {
    if (n < 0 || n > n_max()) throw std::out_of_range("TauSequence::kappa");
    return kappa_[static_cast<std::size_t>(n)];
}

PiScalar TauSequence::value_at_one(int n) const { return tau(n).evaluate(PiScalar(1)); }

PiScalar TauSequence::d1_at_one(int n) const { return tau(n).derivative().evaluate(PiScalar(1)); }

PiScalar TauSequence::d2_at_one(int n) const {
    return tau(n).derivative().derivative().evaluate(PiScalar(1));
}

PiScalar TauSequence::value_at_one_closed(int n) {
    Rational c = pow2_rational(static_cast<long>(n) * (n - 1) / 2) *
                 Rational(barnes_g(static_cast<unsigned long>(n) + 1));
    return PiScalar(c) * PiScalar::sigma_pow(n);
}

TauSequence build_tau(int n_max) {
    if (n_max < 0) throw std::domain_error("build_tau: n_max must be >= 0");
    TauSequence seq;
    seq.tau_.resize(static_cast<std::size_t>(n_max) + 1);
    seq.t_.resize(static_cast<std::size_t>(n_max) + 1);
    seq.kappa_.resize(static_cast<std::size_t>(n_max) + 1);

    seq.tau_[0] = XiPoly(PiScalar(1));
    seq.t_[0] = Poly<Rational>(Rational(1));
    seq.kappa_[0] = Rational(1);
    if (n_max == 0) return seq;

    std::vector<std::vector<BiPoly>> m(static_cast<std::size_t>(n_max),
                                       std::vector<BiPoly>(static_cast<std::size_t>(n_max)));
    for (int i = 0; i < n_max; ++i)
        for (int j = 0; j < n_max; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = scaled_entry(i, j, n_max);

    std::vector<BiPoly> minors = detail::bareiss_principal_minors(std::move(m));

    for (int n = 1; n <= n_max; ++n) {
        const BiPoly& p = minors[static_cast<std::size_t>(n - 1)];
        // tau_n = 2^{n(n-2)} det = 2^{n(n-2)} * minor / 2^{n (n_max-1)}
        Rational factor = pow2_rational(static_cast<long>(n) * (n - 2) -
                                        static_cast<long>(n) * (n_max - 1));
        std::vector<PiScalar> coeffs;
        coeffs.reserve(static_cast<std::size_t>(p.xi_size()));
        for (int i = 0; i < p.xi_size(); ++i) {
            std::vector<Rational> row(static_cast<std::size_t>(p.sigma_size()));
            for (int j = 0; j < p.sigma_size(); ++j)
                row[static_cast<std::size_t>(j)] = Rational(p.coeff(i, j)) * factor;
            coeffs.push_back(PiScalar(SigmaPoly(std::move(row)), SigmaPoly(Rational(1))));
        }
        XiPoly tau_n{std::vector<PiScalar>(coeffs)};
        if (tau_n.degree() != n)
            throw std::domain_error("build_tau: determinant degree mismatch");
        seq.tau_[static_cast<std::size_t>(n)] = tau_n;

        // Substituted form: tau_n(xi(z)) (1 - sigma z)^n = 2^n sigma^n sum_d c_d z^d
        // with xi(z) = (1 + sigma z)/(1 - sigma z). Using u^a v^{n-a} expansions both
        // factors are polynomials in y = sigma z, so work with P_k(y) = (1+y)^k (1-y)^{n-k}.
        using QP = Poly<Rational>;
        QP one_plus{std::vector<Rational>{Rational(1), Rational(1)}};
        QP one_minus{std::vector<Rational>{Rational(1), Rational(-1)}};
        std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
        std::vector<QP> q_d(static_cast<std::size_t>(n) + 1); // coefficient of z^d as sigma-poly
        for (int k = 0; k <= n; ++k) {
            const PiScalar& a_k = tau_n.coeff(k);
            if (a_k.is_zero()) continue;
            if (!(a_k.den() == SigmaPoly(Rational(1))))
                throw std::domain_error("build_tau: non-polynomial tau coefficient");
            QP pk = pow(one_plus, static_cast<unsigned long>(k)) *
                    pow(one_minus, static_cast<unsigned long>(n - k));
            for (int d = 0; d <= n; ++d) {
                Rational pkd = pk.coeff(d);
                if (pkd == Rational(0)) continue;
                // a_k(sigma) * pkd contributes at z^d with an extra sigma^d
                q_d[static_cast<std::size_t>(d)] += a_k.num() * pkd;
            }
        }
        Rational two_n = pow2_rational(n);
        for (int d = 0; d <= n; ++d) {
            const QP& q = q_d[static_cast<std::size_t>(d)];
            // must be the monomial (2^n c_d) sigma^{n-d}
            for (int s = 0; s <= q.degree(); ++s) {
                if (s != n - d && q.coeff(s) != Rational(0))
                    throw std::domain_error("build_tau: unexpected sigma structure");
            }
            Rational cd = q.coeff(n - d) / two_n;
            if (d % 2 == 1 && cd != Rational(0))
                throw std::domain_error("build_tau: odd z power present");
            c[static_cast<std::size_t>(d)] = cd;
        }
        Rational kappa = c[0];
        if (kappa == Rational(0)) throw std::domain_error("build_tau: kappa vanished");
        for (auto& cd : c) cd /= kappa;
        seq.kappa_[static_cast<std::size_t>(n)] = kappa;
        seq.t_[static_cast<std::size_t>(n)] = QP(std::move(c));
    }
    return seq;
}

IndexDistribution index_distribution(const TauSequence& seq, int n) {
    if (n < 0 || n > seq.n_max()) throw std::out_of_range("index_distribution: n out of range");
    IndexDistribution dist;
    dist.n = n;
    PiScalar norm = seq.value_at_one(n);
    dist.probs.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) dist.probs.push_back(seq.tau(n).coeff(k) / norm);
    return dist;
}

} // namespace gueindex
