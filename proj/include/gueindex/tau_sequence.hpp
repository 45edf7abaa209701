#pragma once

#include "gueindex/xi_function.hpp"

#include <vector>

namespace gueindex {

// Exact index distribution of the n x n ensemble: probs[k] = p(k, n).
struct IndexDistribution {
    int n = 0;
    std::vector<PiScalar> probs;
};

// The tau-function sequence at t = 0, alpha_1 = 0. tau[n] is a polynomial in
// xi of degree n; tau_{-1} = 0 and tau_0 = 1 by convention. Alongside the xi
// form we keep the substituted form
//     tau_n = kappa_n sigma^n (xi+1)^n T_n(z),   z = (xi-1)/(sigma (xi+1)),
// where T_n is an even polynomial in z over Q with T_n(0) = 1. The
// substituted form is what the recurrence identities are checked in.
class TauSequence {
public:
    int n_max() const { return static_cast<int>(tau_.size()) - 1; }

    const XiPoly& tau(int n) const;          // n in 0..n_max
    const Poly<Rational>& t_poly(int n) const;
    const Rational& kappa(int n) const;

    PiScalar value_at_one(int n) const;      // tau_n(1)
    PiScalar d1_at_one(int n) const;         // tau_n'(1)
    PiScalar d2_at_one(int n) const;         // tau_n''(1)

    // Closed form 2^{n(n-1)/2} sigma^n G(n+1).
    static PiScalar value_at_one_closed(int n);

    friend TauSequence build_tau(int n_max);

private:
    std::vector<XiPoly> tau_;
    std::vector<Poly<Rational>> t_;
    std::vector<Rational> kappa_;
};

// Builds tau_0..tau_n_max by fraction-free (Bareiss) elimination of the
// scaled Hankel matrix (xi + (-1)^{i+j}) Gamma((i+j+1)/2); one elimination
// pass yields every leading principal minor, i.e. the whole sequence.
TauSequence build_tau(int n_max);

// probs[k] = [xi^k] tau_n(xi) / tau_n(1), exact.
IndexDistribution index_distribution(const TauSequence& seq, int n);

} // namespace gueindex
