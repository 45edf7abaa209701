#include <doctest.h>

#include "gueindex/tau_sequence.hpp"

using namespace gueindex;

namespace {

PiScalar sg(long k) { return PiScalar::sigma_pow(k); }

XiPoly xp(std::vector<PiScalar> v) { return XiPoly(std::move(v)); }

// (xi+1)^k and (xi-1)^k helpers
XiPoly vpow(unsigned long k) { return pow(xp({PiScalar(1), PiScalar(1)}), k); }
XiPoly upow(unsigned long k) { return pow(xp({PiScalar(-1), PiScalar(1)}), k); }

} // namespace

TEST_CASE("tau polynomials match the low-n table") {
    TauSequence seq = build_tau(6);

    CHECK(seq.tau(0) == XiPoly(PiScalar(1)));
    CHECK(seq.tau(1) == xp({PiScalar(Rational(1, 2)) * sg(1), PiScalar(Rational(1, 2)) * sg(1)}));

    XiPoly tau2 = (vpow(2) * sg(2) - upow(2) * PiScalar(2)) * PiScalar(Rational(1, 2));
    CHECK(seq.tau(2) == tau2);

    XiPoly tau3 = vpow(1) * (vpow(2) * sg(2) - upow(2) * PiScalar(3)) * (PiScalar(2) * sg(1));
    CHECK(seq.tau(3) == tau3);

    XiPoly tau4 = (vpow(4) * (PiScalar(6) * sg(4)) - (upow(2) * vpow(2)) * (PiScalar(29) * sg(2)) +
                   upow(4) * PiScalar(32)) *
                  PiScalar(8);
    CHECK(seq.tau(4) == tau4);

    XiPoly tau5 = vpow(1) *
                  (vpow(4) * (PiScalar(72) * sg(4)) - (upow(2) * vpow(2)) * (PiScalar(435) * sg(2)) +
                   upow(4) * PiScalar(656)) *
                  (PiScalar(128) * sg(1));
    CHECK(seq.tau(5) == tau5);

    XiPoly tau6 = (vpow(6) * (PiScalar(4320) * sg(6)) -
                   (upow(2) * vpow(4)) * (PiScalar(33723) * sg(4)) +
                   (upow(4) * vpow(2)) * (PiScalar(84168) * sg(2)) - upow(6) * PiScalar(65536)) *
                  PiScalar(4096);
    CHECK(seq.tau(6) == tau6);

    for (int n = 0; n <= 6; ++n) CHECK(seq.tau(n).degree() == n);
}

TEST_CASE("tau at one matches the Barnes G closed form") {
    TauSequence seq = build_tau(8);
    for (int n = 0; n <= 8; ++n)
        CHECK(seq.value_at_one(n) == TauSequence::value_at_one_closed(n));
    // e.g. tau_3(1) = 16 pi^{3/2}
    CHECK(seq.value_at_one(3) == PiScalar(16) * sg(3));
}

TEST_CASE("substituted form") {
    TauSequence seq = build_tau(5);
    // tau_2 = (1/2) sigma^2 v^2 (1 - 2 z^2): kappa_2 = 1/2, T_2 = 1 - 2z^2
    CHECK(seq.kappa(2) == Rational(1, 2));
    CHECK(seq.t_poly(2) ==
          Poly<Rational>(std::vector<Rational>{Rational(1), Rational(0), Rational(-2)}));
    // kappa_n = 2^{n(n-1)/2 - n} G(n+1) follows from tau_n(1)
    for (int n = 1; n <= 5; ++n) {
        Rational expect = pow2_rational(static_cast<long>(n) * (n - 1) / 2 - n) *
                          Rational(barnes_g(static_cast<unsigned long>(n) + 1));
        CHECK(seq.kappa(n) == expect);
        CHECK(seq.t_poly(n).coeff(0) == Rational(1));
    }
}

TEST_CASE("index distribution") {
    TauSequence seq = build_tau(6);

    IndexDistribution d1 = index_distribution(seq, 1);
    CHECK(d1.probs[0] == PiScalar(Rational(1, 2)));
    CHECK(d1.probs[1] == PiScalar(Rational(1, 2)));

    IndexDistribution d2 = index_distribution(seq, 2);
    PiScalar pi_s = PiScalar::pi();
    CHECK(d2.probs[0] == (pi_s - PiScalar(2)) / (PiScalar(4) * pi_s));
    CHECK(d2.probs[1] == (pi_s + PiScalar(2)) / (PiScalar(2) * pi_s));
    CHECK(d2.probs[2] == d2.probs[0]);

    IndexDistribution d3 = index_distribution(seq, 3);
    CHECK(d3.probs[0] == (pi_s - PiScalar(3)) / (PiScalar(8) * pi_s));

    for (int n = 0; n <= 6; ++n) {
        IndexDistribution d = index_distribution(seq, n);
        PiScalar sum(0);
        for (const auto& p : d.probs) sum += p;
        CHECK(sum == PiScalar(1));
    }
}
