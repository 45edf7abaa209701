#include <doctest.h>

#include "gueindex/variance.hpp"

using namespace gueindex;

namespace {

const PrecisionContext ctx(48);

VarianceValue vv(long n, Rational rat, Rational inv_pi) { return {n, rat, inv_pi}; }

double dbl(const Real& x) { return static_cast<double>(x); }

} // namespace

TEST_CASE("e terms") {
    CHECK(e_term(0).value == Rational(-1));
    CHECK(e_term(1).value == Rational(-1, 4));
    CHECK(e_term(2).value == Rational(-9, 64));
    CHECK_THROWS_AS(e_term(-1), std::domain_error);
}

TEST_CASE("summation route reproduces the exact table") {
    CHECK(delta_sum(0) == vv(0, Rational(0), Rational(0)));
    CHECK(delta_sum(1) == vv(1, Rational(1, 4), Rational(0)));
    CHECK(delta_sum(2) == vv(2, Rational(1, 2), Rational(-1)));
    CHECK(delta_sum(3) == vv(3, Rational(3, 4), Rational(-3, 2)));
    CHECK(delta_sum(4) == vv(4, Rational(1), Rational(-29, 12)));
    CHECK(delta_sum(5) == vv(5, Rational(5, 4), Rational(-145, 48)));
    CHECK(delta_sum(6) == vv(6, Rational(3, 2), Rational(-1249, 320)));
    CHECK(delta_sum(18) ==
          vv(18, Rational(9, 2), Rational(BigInt("-1198597830455957"), BigInt("91359323095040"))));
    CHECK(delta_sum(19) == vv(19, Rational(19, 4),
                              Rational(BigInt("-22773358778663183"), BigInt("1644467815710720"))));
    CHECK(delta_sum(20) == vv(20, Rational(5),
                              Rational(BigInt("-183365193212828149"), BigInt("12497955399401472"))));
}

TEST_CASE("digamma summation route equals the summation route") {
    for (long n = 0; n <= 40; ++n) CHECK(delta_voisum(n) == delta_sum(n));
}

TEST_CASE("distribution route") {
    TauSequence seq = build_tau(8);
    for (int n = 0; n <= 8; ++n) CHECK(delta_from_distribution(seq, n) == delta_sum(n));
}

TEST_CASE("recurrence table route") {
    auto table = delta_recurrence_table(30);
    for (long n = 1; n <= 30; ++n) CHECK(table[static_cast<std::size_t>(n)] == delta_sum(n));
    CHECK(table[6] == vv(6, Rational(3, 2), Rational(-1249, 320)));
    CHECK(table[5] == vv(5, Rational(5, 4), Rational(-145, 48)));
    CHECK(table[19] == delta_sum(19));
}

TEST_CASE("canonical form extraction rejects stray sigma powers") {
    CHECK_THROWS_AS(variance_from_pi_scalar(PiScalar::sigma(), 1), std::domain_error);
    CHECK_THROWS_AS(variance_from_pi_scalar(PiScalar::sigma_pow(-1), 1), std::domain_error);
    VarianceValue v = variance_from_pi_scalar(
        PiScalar(Rational(1, 2)) - PiScalar(1) / PiScalar::pi(), 2);
    CHECK(v == vv(2, Rational(1, 2), Rational(-1)));
}

TEST_CASE("closed form route at moderate m") {
    // n = 4 and 5 share J_2; keeps the unit suite clear of the slow m = 1 series
    Real exact4 = to_real(delta_sum(4), ctx);
    CHECK(abs(delta_closed_form(4, ctx) - exact4) < Real(1e-9));
    Real exact5 = to_real(delta_sum(5), ctx);
    CHECK(abs(delta_closed_form(5, ctx) - exact5) < Real(1e-9));
    Real exact24 = to_real(delta_sum(24), ctx);
    CHECK(abs(delta_closed_form(24, ctx) - exact24) < Real(1e-9));
    CHECK_THROWS_AS(delta_closed_form(1, ctx), std::domain_error);
}

TEST_CASE("J_m closed form against frozen values") {
    // mpmath: J_2 = 6.168502750680849136771557, J_3 = 6.862459310132444664723109
    CHECK(dbl(j_m_closed(2, ctx)) == doctest::Approx(6.1685027506808491).epsilon(1e-11));
    CHECK(dbl(j_m_closed(3, ctx)) == doctest::Approx(6.8624593101324447).epsilon(1e-11));
}

TEST_CASE("quadrature routes for J_m") {
    for (long m : {2L, 3L}) {
        Real closed = j_m_closed(m, ctx);
        CHECK(abs(j_m_quadrature(m, JmRoute::beta, ctx) - closed) < Real(1e-8));
        CHECK(abs(j_m_quadrature(m, JmRoute::sinh, ctx) - closed) < Real(1e-8));
    }
    CHECK_THROWS_AS(j_m_quadrature(0, JmRoute::beta, ctx), std::domain_error);
}

TEST_CASE("full quasi-beta integral for Delta") {
    for (long n : {4L, 7L}) {
        Real exact = to_real(delta_sum(n), ctx);
        CHECK(abs(delta_beta_integral(n, ctx) - exact) < Real(1e-8));
    }
}

TEST_CASE("asymptotic expansion") {
    // error decreasing along k = 5, 10 and small already at k = 10
    Real e5 = abs(delta_asymptotic(10, ctx) - to_real(delta_sum(10), ctx));
    Real e10 = abs(delta_asymptotic(20, ctx) - to_real(delta_sum(20), ctx));
    CHECK(e10 < e5);
    CHECK(e10 < Real(1e-6));
    Real o5 = abs(delta_asymptotic(11, ctx) - to_real(delta_sum(11), ctx));
    Real o10 = abs(delta_asymptotic(21, ctx) - to_real(delta_sum(21), ctx));
    CHECK(o10 < o5);
    CHECK_THROWS_AS(delta_asymptotic(5, ctx), std::domain_error);
}

TEST_CASE("even-odd relation and third-order recurrence") {
    std::vector<VarianceValue> d;
    for (long n = 0; n <= 41; ++n) d.push_back(delta_sum(n));
    for (long m = 1; 2 * m + 1 <= 41; ++m) {
        CHECK(d[static_cast<std::size_t>(2 * m + 1)].rat * Rational(2 * m) ==
              d[static_cast<std::size_t>(2 * m)].rat * Rational(2 * m + 1));
        CHECK(d[static_cast<std::size_t>(2 * m + 1)].inv_pi * Rational(2 * m) ==
              d[static_cast<std::size_t>(2 * m)].inv_pi * Rational(2 * m + 1));
    }
    for (long n = 2; n + 1 <= 41; ++n) {
        Rational ra = Rational(n) * d[static_cast<std::size_t>(n + 1)].rat -
                      Rational(n + 1) * d[static_cast<std::size_t>(n)].rat -
                      Rational(n - 2) * d[static_cast<std::size_t>(n - 1)].rat +
                      Rational(n - 1) * d[static_cast<std::size_t>(n - 2)].rat;
        Rational rb = Rational(n) * d[static_cast<std::size_t>(n + 1)].inv_pi -
                      Rational(n + 1) * d[static_cast<std::size_t>(n)].inv_pi -
                      Rational(n - 2) * d[static_cast<std::size_t>(n - 1)].inv_pi +
                      Rational(n - 1) * d[static_cast<std::size_t>(n - 2)].inv_pi;
        CHECK(ra == Rational(0));
        CHECK(rb == (n % 2 == 1 ? e_term((n - 1) / 2).value : Rational(0)));
    }
}

TEST_CASE("homogeneous solutions annihilate the recurrences") {
    CheckReport rep = homogeneous_check(8, ctx);
    for (const auto& c : rep.checks) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.pass);
    }
}
