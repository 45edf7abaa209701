#include <doctest.h>

#include "gueindex/real.hpp"
#include "gueindex/xi_function.hpp"

using namespace gueindex;

namespace {

PiScalar sig() { return PiScalar::sigma(); }

XiPoly xp(std::vector<PiScalar> v) { return XiPoly(std::move(v)); }

} // namespace

TEST_CASE("rational arithmetic is canonical") {
    Rational a(-6, 8);
    CHECK(numerator(a) == -3);
    CHECK(denominator(a) == 4);
    CHECK(Rational(2, 6) - Rational(5, 6) == a + Rational(1, 4));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(factorial(5) == 120);
    CHECK(binomial(6, 3) == 20);
    CHECK(barnes_g(5) == 1 * 1 * 2 * 6); // G(5) = 0! 1! 2! 3!
}

TEST_CASE("gamma at half-integers") {
    CHECK(gamma_half(1) == sig());                            // Gamma(1/2)
    CHECK(gamma_half(5) == PiScalar(Rational(3, 4)) * sig()); // Gamma(5/2)
    CHECK(gamma_half(6) == PiScalar(2));                      // Gamma(3)
    CHECK(gamma_half(3) == PiScalar(Rational(1, 2)) * sig());
    CHECK(gamma_half(3).str() == "(1/2)*σ");
    CHECK_THROWS_AS(gamma_half(0), std::domain_error);
    CHECK_THROWS_AS(gamma_half(-3), std::domain_error);
}

TEST_CASE("pi scalar field arithmetic") {
    CHECK(sig() * sig() == PiScalar::pi());
    CHECK(PiScalar::sigma_pow(-2) * PiScalar::pi() == PiScalar(1));
    PiScalar x = (PiScalar(1) + sig()) * (PiScalar(1) - sig());
    CHECK(x == PiScalar(1) - PiScalar::pi());
    CHECK_THROWS_AS(PiScalar(1) / PiScalar(0), std::domain_error);

    // canonical form: common factors cancel
    PiScalar twice(SigmaPoly{std::vector<Rational>{Rational(2), Rational(2)}},
                   SigmaPoly{std::vector<Rational>{Rational(4)}});
    PiScalar once(SigmaPoly{std::vector<Rational>{Rational(1), Rational(1)}},
                  SigmaPoly{std::vector<Rational>{Rational(2)}});
    CHECK(twice == once);
}

TEST_CASE("xi function arithmetic") {
    // (xi-1)/(xi+1) + (xi+1)/(xi-1) == (2 xi^2 + 2)/(xi^2 - 1)
    XiFunction a(xp({PiScalar(-1), PiScalar(1)}), xp({PiScalar(1), PiScalar(1)}));
    XiFunction b(xp({PiScalar(1), PiScalar(1)}), xp({PiScalar(-1), PiScalar(1)}));
    XiFunction expect(xp({PiScalar(2), PiScalar(0), PiScalar(2)}),
                      xp({PiScalar(-1), PiScalar(0), PiScalar(1)}));
    CHECK(a + b == expect);
    CHECK((a * b) == XiFunction(PiScalar(1)));
    CHECK_THROWS_AS(a / XiFunction(), std::domain_error);
}

TEST_CASE("tau_2 normalized by its value at one") {
    // tau_2 = (1/2)[sigma^2 (xi+1)^2 - 2 (xi-1)^2], tau_2(1) = 2 pi
    PiScalar p = PiScalar::pi();
    XiPoly tau2 = xp({PiScalar(Rational(1, 2)) * (p - PiScalar(2)), p + PiScalar(2),
                      PiScalar(Rational(1, 2)) * (p - PiScalar(2))});
    PiScalar at1 = tau2.evaluate(PiScalar(1));
    CHECK(at1 == PiScalar(2) * p);
    XiFunction ratio = XiFunction(tau2) / XiFunction(XiPoly(at1));
    // [sigma^2 (xi+1)^2 - 2(xi-1)^2] / (4 sigma^2)
    XiPoly num = xp({p - PiScalar(2), PiScalar(2) * p + PiScalar(4), p - PiScalar(2)});
    XiFunction expect = XiFunction(num) / XiFunction(XiPoly(PiScalar(4) * p));
    CHECK(ratio == expect);
}

TEST_CASE("laurent expansion about xi = 1") {
    PiScalar inv_sigma = PiScalar::sigma_pow(-1);

    SUBCASE("constant") {
        LaurentSeries s = expand_at_one(XiFunction(PiScalar(1)), 4);
        CHECK(s.min_order == 0);
        CHECK(s.coeff(0) == PiScalar(1));
        CHECK(s.coeff(1) == PiScalar(0));
    }

    SUBCASE("f_{1,0} = 2(xi-1)/(sigma(xi+1))") {
        XiFunction f(xp({PiScalar(-2), PiScalar(2)}), xp({sig(), sig()}));
        LaurentSeries s = expand_at_one(f, 3);
        CHECK(s.min_order == 1);
        CHECK(s.coeff(1) == inv_sigma);
        CHECK(s.coeff(2) == PiScalar(Rational(-1, 2)) * inv_sigma);
        CHECK(s.coeff(3) == PiScalar(Rational(1, 4)) * inv_sigma);
    }

    SUBCASE("f_{2,1} = -[sigma^2(xi+1)^2 - 2(xi-1)^2]/(sigma(xi^2-1))") {
        PiScalar p = PiScalar::pi();
        XiPoly num =
            xp({-(p - PiScalar(2)), -(PiScalar(2) * p + PiScalar(4)), -(p - PiScalar(2))});
        XiPoly den = xp({-sig(), PiScalar(0), sig()});
        XiFunction f(num, den);
        LaurentSeries s = expand_at_one(f, 1);
        CHECK(s.min_order == -1);
        CHECK(s.coeff(-1) == PiScalar(-2) * sig());
        CHECK(s.coeff(0) == -sig());
        CHECK(s.coeff(1) == inv_sigma);
    }

    SUBCASE("double pole is rejected") {
        XiFunction f(XiPoly(PiScalar(1)),
                     xp({PiScalar(1), PiScalar(-2), PiScalar(1)})); // (xi-1)^2
        CHECK_THROWS_AS(expand_at_one(f, 2), std::domain_error);
    }
}

TEST_CASE("numeric evaluation") {
    PrecisionContext ctx(32);
    CHECK(static_cast<double>(eval_numeric(sig(), ctx)) ==
          doctest::Approx(1.7724538509055160).epsilon(1e-14));
    PiScalar delta2 = PiScalar(Rational(1, 2)) - PiScalar(1) / PiScalar::pi();
    CHECK(static_cast<double>(eval_numeric(delta2, ctx)) ==
          doctest::Approx(0.18169011381620933).epsilon(1e-14));
    CHECK(eval_numeric(PiScalar(0), ctx) == 0);

    // requested digits are honored
    Real v = eval_numeric(sig(), 48);
    Real ref = eval_numeric(sig(), 64);
    CHECK(abs(v - ref) < pow(Real(10), -46));
}
