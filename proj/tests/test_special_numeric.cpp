#include <doctest.h>

#include "gueindex/quadrature.hpp"
#include "gueindex/special_functions.hpp"

using namespace gueindex;

namespace {

const PrecisionContext ctx(48);

double dbl(const Real& x) { return static_cast<double>(x); }

} // namespace

TEST_CASE("digamma and trigamma") {
    CHECK(dbl(digamma(Real(1), ctx)) == doctest::Approx(-0.5772156649015329).epsilon(1e-14));
    CHECK(dbl(digamma(Real(1.5), ctx) - digamma(Real(0.5), ctx)) ==
          doctest::Approx(2.0).epsilon(1e-15));
    CHECK(dbl(trigamma(Real(1), ctx)) == doctest::Approx(1.6449340668482264).epsilon(1e-14));
    CHECK_THROWS_AS(digamma(Real(0), ctx), std::domain_error);
    CHECK_THROWS_AS(trigamma(Real(-2), ctx), std::domain_error);

    // functional equation at higher precision
    Real x(7.25);
    CHECK(abs(digamma(x + 1, ctx) - digamma(x, ctx) - 1 / x) < pow(Real(10), -44));
}

TEST_CASE("complete elliptic integral by AGM") {
    CHECK(dbl(elliptic_k(Real(0), ctx)) == doctest::Approx(1.5707963267948966).epsilon(1e-15));
    Real z = 1 / sqrt(Real(2));
    CHECK(dbl(elliptic_k(z, ctx)) == doctest::Approx(1.8540746773013719).epsilon(1e-14));
    CHECK(dbl(elliptic_k(Real(0.99), ctx)) > dbl(elliptic_k(Real(0.9), ctx)));
    CHECK_THROWS_AS(elliptic_k(Real(1), ctx), std::domain_error);
    // K(sqrt(1-t)) route agrees with the direct form
    Real t(0.3);
    CHECK(abs(elliptic_k_comp(t, ctx) - elliptic_k(sqrt(1 - t), ctx)) < pow(Real(10), -40));
}

TEST_CASE("unit-argument 4F3") {
    // frozen with mpmath: 4F3(1,1,3/2,3/2;2,2,5/2;1)
    PrecisionContext loose(48, 20'000'000, 1e-9);
    CHECK(dbl(hyp4f3_unit(1, loose)) == doctest::Approx(1.4682102451805843).epsilon(2e-9));
    // m -> infinity limit is 1, monotonically from above in m
    Real big = hyp4f3_unit(200, ctx);
    CHECK(dbl(big) == doctest::Approx(1.0).epsilon(0.01));
    CHECK(dbl(hyp4f3_unit(20, ctx)) > dbl(hyp4f3_unit(40, ctx)));
    CHECK(dbl(hyp4f3_unit(40, ctx)) > dbl(big));
    // m = 0 terms decay like k^{-3/2}: the cap must trip with a partial sum attached
    PrecisionContext capped(48, 1000, 1e-10);
    CHECK_THROWS_AS(hyp4f3_unit(0, capped), SeriesCapReached);
    try {
        hyp4f3_unit(0, capped);
    } catch (const SeriesCapReached& e) {
        CHECK(dbl(e.partial_sum) > 1.0);
    }
    CHECK_THROWS_AS(hyp4f3_unit(-1, ctx), std::domain_error);
}

TEST_CASE("2F1(1/2, m; m+1; z)") {
    // closed form at z = 1: Gamma(m+1)Gamma(1/2)/Gamma(m+1/2)
    CHECK(dbl(hyp2f1_half(1, Real(1), ctx)) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(dbl(hyp2f1_half(1, Real(0), ctx)) == doctest::Approx(1.0).epsilon(1e-15));
    // frozen with mpmath: 2F1(1/2,3;4;0.5)
    CHECK(dbl(hyp2f1_half(3, Real(0.5), ctx)) ==
          doctest::Approx(1.2755267271827652).epsilon(1e-13));
    // brute-force series oracle at z = 0.7, m = 2 (exercises the z > 1/2 branch)
    {
        Real z(0.7), term(1), s(1);
        for (long k = 0; k < 100000; ++k) {
            term *= (Real(k) + Real(0.5)) / (k + 1) * z;
            s += term * 2 / (2 + k + 1);
            if (term < Real(1e-40)) break;
        }
        CHECK(abs(hyp2f1_half(2, z, ctx) - s) < pow(Real(10), -38));
    }
    CHECK_THROWS_AS(hyp2f1_half(0, Real(0.5), ctx), std::domain_error);
    CHECK_THROWS_AS(hyp2f1_half(2, Real(1.5), ctx), std::domain_error);
}

TEST_CASE("tanh-sinh quadrature") {
    SingularitySpec left_sing;
    left_sing.singular_left = true;

    SUBCASE("inverse square root") {
        Integrand f = [](const Real& t) { return 1 / sqrt(t); };
        QuadratureResult r = integrate(f, Real(0), Real(1), left_sing, ctx);
        CHECK(abs(r.value - 2) < Real(1e-10));
    }

    SUBCASE("smooth integrand") {
        Integrand f = [](const Real& t) { return exp(t); };
        QuadratureResult r = integrate(f, Real(0), Real(1), {}, ctx);
        CHECK(abs(r.value - (exp(Real(1)) - 1)) < Real(1e-10));
    }

    SUBCASE("log singularity identity: the -pi^3/2 integral") {
        Integrand f = [](const Real& t) {
            return log(t) / (1 - t) * elliptic_k_comp(t, ctx) / sqrt(t);
        };
        SingularitySpec spec;
        spec.singular_left = true;
        spec.singular_right = true;
        QuadratureResult r = integrate(f, Real(0), Real(1), spec, ctx);
        Real expect = -pow(real_pi(), 3) / 2;
        CHECK(abs(r.value - expect) < Real(1e-8));
    }

    SUBCASE("error estimates are conservative under tolerance halving") {
        Integrand f = [](const Real& t) { return 1 / sqrt(t) + log(t); };
        QuadratureResult coarse = integrate(f, Real(0), Real(1), left_sing, ctx);
        PrecisionContext tight(48, 20'000'000, ctx.quadrature_tolerance / 2);
        QuadratureResult fine = integrate(f, Real(0), Real(1), left_sing, tight);
        CHECK(abs(coarse.value - fine.value) <= coarse.error_estimate + Real(1e-40));
    }
}

TEST_CASE("exp-sinh quadrature on the half line") {
    SingularitySpec spec;
    spec.exponential_decay_at_infinity = true;
    Integrand f = [](const Real& x) { return exp(-x) * x; };
    QuadratureResult r = integrate_half_line(f, spec, ctx);
    CHECK(abs(r.value - 1) < Real(1e-10));
    SingularitySpec bad;
    CHECK_THROWS_AS(integrate_half_line(f, bad, ctx), std::domain_error);
}
