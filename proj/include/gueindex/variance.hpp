#pragma once

#include "gueindex/quadrature.hpp"
#include "gueindex/report.hpp"
#include "gueindex/tau_sequence.hpp"

#include <vector>

namespace gueindex {

// Exact variance of the index in canonical form rat + inv_pi / pi.
// For n >= 1, rat = n/4 exactly and inv_pi <= 0.
struct VarianceValue {
    long n = 0;
    Rational rat;
    Rational inv_pi;

    friend bool operator==(const VarianceValue& a, const VarianceValue& b) {
        return a.n == b.n && a.rat == b.rat && a.inv_pi == b.inv_pi;
    }
};

// Inhomogeneous term of the third-order recurrence: e_{2m+1} = value / pi
// with value = -(C(2m,m)/4^m)^2.
struct ETerm {
    long m = 0;
    Rational value;
};

ETerm e_term(long m);

// Route 1: discrete-quadrature solution of the third-order recurrence,
// O(n) exact rational work.
VarianceValue delta_sum(long n);

// Same prefix sums, materialized for every n in [n_lo, n_hi]; O(n_hi) total.
std::vector<VarianceValue> delta_sum_range(long n_lo, long n_hi);

// Route 2: the finite digamma-difference summation; the psi differences
// reduce to exact rationals.
VarianceValue delta_voisum(long n);

// Route 3: from the generating polynomial, both as the distribution variance
// and via tau''(1)/tau(1) - n^2/4 + n/2; throws if the two disagree.
VarianceValue delta_from_distribution(const TauSequence& seq, int n);

// Route 4: stepping the second-order even/odd recurrences. Entries 1..n_max;
// even chain seeded with Delta_2, Delta_4, odd chain with Delta_1, Delta_3.
std::vector<VarianceValue> delta_recurrence_table(long n_max);

// Route 5a: hypergeometric closed form, numeric. Requires n >= 2.
Real delta_closed_form(long n, const PrecisionContext& ctx);

// Route 5b: asymptotic expansion through the k^-6 term. Requires n >= 6.
Real delta_asymptotic(long n, const PrecisionContext& ctx);

// J_m by its closed form (digamma + 4F3 at unit argument); memoized.
Real j_m_closed(long m, const PrecisionContext& ctx);
Real j_m_closed_dm(long m, const PrecisionContext& ctx);

enum class JmRoute { beta, sinh };

// J_m by quadrature: the (0,1) quasi-Beta integral or the (0,inf)
// proper-time form.
Real j_m_quadrature(long m, JmRoute route, const PrecisionContext& ctx);

// Full quasi-Beta integral for Delta_n itself (numeric cross-check).
Real delta_beta_integral(long n, const PrecisionContext& ctx);

// Numeric checks that m and m [log4 + psi(m+1/2) - psi(m+1)] (and their
// m+1/2 variants) annihilate the homogeneous even/odd recurrences.
CheckReport homogeneous_check(int m_max, const PrecisionContext& ctx);

// Decimal value rat + inv_pi/pi at ctx precision.
Real to_real(const VarianceValue& v, const PrecisionContext& ctx);

// Reduce a PiScalar known to lie in span{1, sigma^-2} to (rat, inv_pi);
// throws std::domain_error on anything outside that span.
VarianceValue variance_from_pi_scalar(const PiScalar& x, long n);

} // namespace gueindex
