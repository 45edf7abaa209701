#pragma once

#include "gueindex/real.hpp"
#include "gueindex/tau_sequence.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace gueindex {

// Tridiagonal realization of the beta = 2 Gaussian ensemble: diagonal
// standard normals, off-diagonal chi_{2(n-k)} / sqrt(2). Eigenvalue signs
// (all the index needs) are invariant under positive rescaling, so this
// matches the e^{-lambda^2} convention of the exact routes.
struct TridiagonalMatrix {
    std::vector<double> diag;
    std::vector<double> offdiag; // size n-1, entries >= 0
};

struct McEstimate {
    int n = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> counts; // histogram over n_+ = 0..n
    double mean = 0;
    double variance = 0;        // unbiased sample variance of n_+
    double stderr_variance = 0; // via the fourth central moment
    std::uint64_t flagged = 0;  // samples that hit an exactly-zero pivot
};

struct ChiSquareResult {
    double statistic = 0;
    double p_value = 0;
    int dof = 0;
    int pooled_cells = 0;
};

using Rng = std::mt19937_64;

// One draw of the tridiagonal model. The chi entries are square roots of
// gamma variates (Marsaglia-Tsang), one O(1) draw per entry.
TridiagonalMatrix sample_tridiagonal(int n, Rng& rng);

// Number of positive eigenvalues via the pivot signs of the LDL^T
// factorization at shift 0: d'_1 = d_1, d'_k = d_k - e_{k-1}^2 / d'_{k-1}.
// An exactly-zero pivot (a measure-zero event) is replaced by the smallest
// positive double and the sample flagged via the optional counter.
int positive_count(const TridiagonalMatrix& t, std::uint64_t* flagged = nullptr);

// Independent oracle for tests: brackets all eigenvalues of the
// characteristic polynomial by sign changes on a refined grid and counts the
// positive ones. Only intended for small n.
int positive_count_bracketing(const TridiagonalMatrix& t);

// Histogram of n_+ over `samples` draws. Sampling is split into a fixed
// number of deterministic chunks (seeds derived from the master seed), so
// the result is bit-for-bit reproducible for any thread count.
McEstimate estimate(int n, std::uint64_t samples, std::uint64_t seed, int threads = 0);

// Pearson chi-square of the histogram against the exact distribution.
// Cells with expected count < 5 are pooled from both ends inward.
ChiSquareResult chi_square(const McEstimate& est, const IndexDistribution& exact,
                           const PrecisionContext& ctx);

} // namespace gueindex
