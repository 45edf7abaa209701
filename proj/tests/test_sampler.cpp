#include <doctest.h>

#include "gueindex/sampler.hpp"
#include "gueindex/variance.hpp"

#include <cmath>

using namespace gueindex;

namespace {

const PrecisionContext ctx(32);

} // namespace

TEST_CASE("positive count on hand-built matrices") {
    TridiagonalMatrix diag_pos{{1, 1, 1}, {0, 0}};
    CHECK(positive_count(diag_pos) == 3);
    TridiagonalMatrix mixed{{1, -1}, {0}};
    CHECK(positive_count(mixed) == 1);
    TridiagonalMatrix bad{{1, std::nan("")}, {0}};
    CHECK_THROWS_AS(positive_count(bad), std::invalid_argument);

    // exactly-zero pivot is perturbed and flagged
    TridiagonalMatrix zero{{0, 1}, {0}};
    std::uint64_t flagged = 0;
    positive_count(zero, &flagged);
    CHECK(flagged == 1);
}

TEST_CASE("pivot inertia matches the bracketing oracle") {
    Rng rng(12345);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        TridiagonalMatrix t = sample_tridiagonal(n, rng);
        CHECK(positive_count(t) == positive_count_bracketing(t));
    }
}

TEST_CASE("positive count is scale invariant") {
    Rng rng(777);
    for (int trial = 0; trial < 100; ++trial) {
        TridiagonalMatrix t = sample_tridiagonal(7, rng);
        int base = positive_count(t);
        for (double c : {0.5, 3.7, 1e-3}) {
            TridiagonalMatrix s = t;
            for (auto& v : s.diag) v *= c;
            for (auto& v : s.offdiag) v *= c;
            CHECK(positive_count(s) == base);
        }
    }
}

TEST_CASE("sampled entries have the declared distribution") {
    Rng rng(2024);
    int n = 6;
    double sum = 0, sum2 = 0;
    int draws = 100000;
    for (int i = 0; i < draws; ++i) {
        TridiagonalMatrix t = sample_tridiagonal(n, rng);
        sum += t.diag[0];
        sum2 += t.diag[0] * t.diag[0];
        for (double v : t.offdiag) CHECK(v >= 0);
    }
    double mean = sum / draws;
    double var = sum2 / draws - mean * mean;
    CHECK(std::abs(mean) < 4.0 / std::sqrt(static_cast<double>(draws)));
    CHECK(std::abs(var - 1.0) < 5.0 * std::sqrt(2.0 / draws));
}

TEST_CASE("estimates are deterministic and thread-count independent") {
    McEstimate a = estimate(4, 50000, 42, 1);
    McEstimate b = estimate(4, 50000, 42, 2);
    McEstimate c = estimate(4, 50000, 42);
    CHECK(a.counts == b.counts);
    CHECK(a.counts == c.counts);
    CHECK(a.variance == b.variance);
    CHECK(a.mean == c.mean);
    std::uint64_t total = 0;
    for (auto v : a.counts) total += v;
    CHECK(total == 50000);
    CHECK_THROWS_AS(estimate(4, 100, 1), std::domain_error);
}

TEST_CASE("estimate converges to the exact variance") {
    double exact = static_cast<double>(to_real(delta_sum(4), ctx));
    McEstimate small = estimate(4, 20000, 3);
    McEstimate big = estimate(4, 320000, 3);
    CHECK(std::abs(small.variance - exact) < 5 * small.stderr_variance);
    CHECK(std::abs(big.variance - exact) < 5 * big.stderr_variance);
    CHECK(big.stderr_variance < small.stderr_variance / 2.5);

    // n = 1 sanity: P(n+ = 1) = 1/2
    McEstimate coin = estimate(1, 100000, 9);
    CHECK(std::abs(coin.mean - 0.5) < 0.01);
}

TEST_CASE("chi-square against the exact distribution") {
    TauSequence seq = build_tau(4);

    SUBCASE("proportional counts give statistic zero") {
        McEstimate est;
        est.n = 1;
        est.samples = 1000;
        est.counts = {500, 500};
        TauSequence seq1 = build_tau(1);
        ChiSquareResult r = chi_square(est, index_distribution(seq1, 1), ctx);
        CHECK(r.statistic == doctest::Approx(0.0));
        CHECK(r.p_value == doctest::Approx(1.0));
    }

    SUBCASE("calibrated run has a sane p-value") {
        McEstimate est = estimate(3, 100000, 5);
        TauSequence seq3 = build_tau(3);
        ChiSquareResult r = chi_square(est, index_distribution(seq3, 3), ctx);
        CHECK(r.p_value > 1e-3);
    }

    SUBCASE("wrong expected vector is rejected hard") {
        McEstimate est = estimate(4, 200000, 5);
        IndexDistribution wrong = index_distribution(seq, 4);
        std::swap(wrong.probs[0], wrong.probs[2]);
        std::swap(wrong.probs[1], wrong.probs[3]);
        ChiSquareResult r = chi_square(est, wrong, ctx);
        CHECK(r.p_value < 1e-6);
    }

    SUBCASE("degenerate pooling throws") {
        McEstimate est;
        est.n = 1;
        est.samples = 4; // every expected count below the pooling threshold
        est.counts = {2, 2};
        TauSequence seq1 = build_tau(1);
        CHECK_THROWS_AS(chi_square(est, index_distribution(seq1, 1), ctx), std::domain_error);
    }
}
