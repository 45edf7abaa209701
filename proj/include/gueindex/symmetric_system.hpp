#pragma once

#include "gueindex/tau_sequence.hpp"
#include "gueindex/xi_function.hpp"

#include <vector>

namespace gueindex {

// Rational function of z = (xi-1)/(sigma (xi+1)) over Q. The symmetric-variable
// recurrences close over this field (seeds are +-2z and 0), which keeps every
// reduction a univariate gcd over Q.
using ZFunc = RatFunc<Rational>;

struct SymmetricTriple {
    XiFunction f0, f1, f2;
};

// The coupled first-order system at t = 0, alpha_0 = 1:
//   f2[n+1] = -f2[n] - f0[n] + 2(n+1)/f0[n]
//   f0[n+1] = -f0[n] - f2[n+1] + 2(n+1)/f2[n+1]
//   f1      = -f0 - f2
// with g_n = f1[n] f2[n].
class SymmetricSystem {
public:
    int n_max() const { return static_cast<int>(g_.size()) - 1; }

    const ZFunc& f0_z(int n) const { return f0_.at(static_cast<std::size_t>(n)); }
    const ZFunc& f1_z(int n) const { return f1_.at(static_cast<std::size_t>(n)); }
    const ZFunc& f2_z(int n) const { return f2_.at(static_cast<std::size_t>(n)); }
    const ZFunc& g_z(int n) const { return g_.at(static_cast<std::size_t>(n)); }

    SymmetricTriple triple(int n) const;
    XiFunction g_xi(int n) const;

    friend SymmetricSystem build_fg(int n_max);

private:
    std::vector<ZFunc> f0_, f1_, f2_, g_;
};

SymmetricSystem build_fg(int n_max);

// Substitute z = (xi-1)/(sigma (xi+1)) into a reduced rational function of z
// and return the canonical XiFunction. The substitution preserves
// coprimality, so no gcd is needed.
XiFunction z_to_xi(const ZFunc& r);

// g_n obtained from the tau route, -2n + tau_{n+1} tau_{n-1} / tau_n^2,
// reduced in Q(z). Requires n >= 1 and tau built to n+1.
ZFunc g_from_tau(const TauSequence& seq, int n);

} // namespace gueindex
