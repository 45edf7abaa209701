#pragma once

#include "gueindex/report.hpp"
#include "gueindex/symmetric_system.hpp"
#include "gueindex/tau_sequence.hpp"

#include <vector>

namespace gueindex {

// Leading Laurent coefficients about xi = 1 of the symmetric variables at
// levels 2m and 2m+1 (A,B from f2; C,D from f0; E,F from f1; the subscript is
// the (xi-1) order).
struct LaurentCoefficientTable {
    int m = 0;
    PiScalar a1, a2;   // f2[2m]:   orders 1, 2
    PiScalar b_m1, b0; // f2[2m+1]: orders -1, 0
    PiScalar c1;       // f0[2m]:   order 1
    PiScalar d_m1;     // f0[2m+1]: order -1
    PiScalar e1;       // f1[2m]:   order 1
    PiScalar f3;       // f1[2m+1]: order 3
};

// Exact residual checks of the recurrence identities:
//   (i)  the five-term tau recurrence, 2 <= n <= n_max
//   (ii) g_n^4 = (2n+g_n)^2 (g_n+g_{n-1})(g_n+g_{n+1}), 1 <= n <= n_max
//   (iii) the two f^2 recovery formulas
//   (iv) g_n = f1 f2 = -2n + tau_{n+1}tau_{n-1}/tau_n^2 (both routes)
//   (v)  X_n = tau_n'(1)/tau_n(1) = n/2
//   (vi) f0 + f1 + f2 = 0 and tau_n(1) closed form
// Requires seq built to n_max + 2 and sys to n_max + 1.
CheckReport verify_identities(const TauSequence& seq, const SymmetricSystem& sys, int n_max);

// Extracts the coefficient tables for m = 0..m_max. Requires sys built to
// 2*m_max + 2.
std::vector<LaurentCoefficientTable> laurent_table(const SymmetricSystem& sys, int m_max);

// Checks the closed forms of the extracted coefficients and the relation
// between them, g'' at xi = 1 and the inhomogeneous term e_{2m+1}.
CheckReport laurent_closed_form_checks(const SymmetricSystem& sys, int m_max);

// Taylor coefficients of a ZFunc about z = 0 (requires no pole there).
std::vector<Rational> z_taylor(const ZFunc& f, int order);

// g_n''(1) as a PiScalar, via the Laurent expansion of the converted g.
PiScalar g_second_derivative_at_one(const SymmetricSystem& sys, int n);

} // namespace gueindex
