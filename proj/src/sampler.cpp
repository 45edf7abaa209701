#include "gueindex/sampler.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <cmath>
#include <future>
#include <limits>
#include <stdexcept>
#include <thread>

namespace gueindex {

namespace {

constexpr int kChunks = 64; // fixed so results do not depend on thread count

double uniform01(Rng& rng) {
    // 53-bit uniform in (0, 1); the offset keeps log() finite.
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1p-53;
}

// Box-Muller with an explicit cache; keeps the draw sequence pinned to the
// generator rather than to a library's unspecified algorithm.
class NormalDraw {
public:
    double operator()(Rng& rng) {
        if (have_) {
            have_ = false;
            return cached_;
        }
        double u1 = uniform01(rng);
        double u2 = uniform01(rng);
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(a);
        have_ = true;
        return r * std::cos(a);
    }

private:
    bool have_ = false;
    double cached_ = 0;
};

// Marsaglia-Tsang gamma(shape, 1) for shape >= 1.
double gamma_draw(double shape, Rng& rng, NormalDraw& normal) {
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = normal(rng);
        double v = 1.0 + c * x;
        if (v <= 0) continue;
        v = v * v * v;
        double u = uniform01(rng);
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t chunk) {
    // splitmix64 step on seed + chunk
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (chunk + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

struct ChunkResult {
    std::vector<std::uint64_t> counts;
    std::uint64_t flagged = 0;
};

ChunkResult run_chunk(int n, std::uint64_t samples, std::uint64_t chunk_seed) {
    ChunkResult res;
    res.counts.assign(static_cast<std::size_t>(n) + 1, 0);
    Rng rng(chunk_seed);
    NormalDraw normal;
    std::vector<double> diag(static_cast<std::size_t>(n));
    std::vector<double> off(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
    for (std::uint64_t s = 0; s < samples; ++s) {
        for (int i = 0; i < n; ++i) diag[static_cast<std::size_t>(i)] = normal(rng);
        for (int k = 1; k < n; ++k)
            off[static_cast<std::size_t>(k - 1)] =
                std::sqrt(gamma_draw(static_cast<double>(n - k), rng, normal));
        // LDL^T pivot signs, inline for speed
        int negatives = 0;
        double prev = 0;
        for (int i = 0; i < n; ++i) {
            double d = diag[static_cast<std::size_t>(i)];
            if (i > 0) {
                double e = off[static_cast<std::size_t>(i - 1)];
                d -= e * e / prev;
            }
            if (d == 0.0) {
                d = std::numeric_limits<double>::min();
                ++res.flagged;
            }
            if (d < 0) ++negatives;
            prev = d;
        }
        ++res.counts[static_cast<std::size_t>(n - negatives)];
    }
    return res;
}

} // namespace

TridiagonalMatrix sample_tridiagonal(int n, Rng& rng) {
    if (n < 1) throw std::domain_error("sample_tridiagonal: n must be >= 1");
    TridiagonalMatrix t;
    t.diag.resize(static_cast<std::size_t>(n));
    t.offdiag.resize(static_cast<std::size_t>(n - 1));
    NormalDraw normal;
    for (int i = 0; i < n; ++i) t.diag[static_cast<std::size_t>(i)] = normal(rng);
    for (int k = 1; k < n; ++k)
        t.offdiag[static_cast<std::size_t>(k - 1)] =
            std::sqrt(gamma_draw(static_cast<double>(n - k), rng, normal));
    return t;
}

int positive_count(const TridiagonalMatrix& t, std::uint64_t* flagged) {
    int n = static_cast<int>(t.diag.size());
    if (n == 0 || t.offdiag.size() + 1 != t.diag.size())
        throw std::invalid_argument("positive_count: inconsistent dimensions");
    for (double v : t.diag)
        if (!std::isfinite(v)) throw std::invalid_argument("positive_count: non-finite entry");
    for (double v : t.offdiag)
        if (!std::isfinite(v)) throw std::invalid_argument("positive_count: non-finite entry");

    int negatives = 0;
    double prev = 0;
    for (int i = 0; i < n; ++i) {
        double d = t.diag[static_cast<std::size_t>(i)];
        if (i > 0) {
            double e = t.offdiag[static_cast<std::size_t>(i - 1)];
            d -= e * e / prev;
        }
        if (d == 0.0) {
            d = std::numeric_limits<double>::min();
            if (flagged) ++(*flagged);
        }
        if (d < 0) ++negatives;
        prev = d;
    }
    return n - negatives;
}

int positive_count_bracketing(const TridiagonalMatrix& t) {
    int n = static_cast<int>(t.diag.size());
    // Characteristic polynomial by the three-term recurrence, rescaled to
    // dodge overflow; only signs matter.
    auto charpoly_sign_value = [&](double x) {
        double pm1 = 1.0, p = t.diag[0] - x;
        for (int i = 1; i < n; ++i) {
            double e = t.offdiag[static_cast<std::size_t>(i - 1)];
            double next = (t.diag[static_cast<std::size_t>(i)] - x) * p - e * e * pm1;
            pm1 = p;
            p = next;
            double m = std::max(std::fabs(p), std::fabs(pm1));
            if (m > 1e100) {
                p /= m;
                pm1 /= m;
            }
        }
        return p;
    };
    // Gershgorin bounds
    double lo = t.diag[0], hi = t.diag[0];
    for (int i = 0; i < n; ++i) {
        double r = 0;
        if (i > 0) r += t.offdiag[static_cast<std::size_t>(i - 1)];
        if (i + 1 < n) r += t.offdiag[static_cast<std::size_t>(i)];
        lo = std::min(lo, t.diag[static_cast<std::size_t>(i)] - r);
        hi = std::max(hi, t.diag[static_cast<std::size_t>(i)] + r);
    }
    lo -= 1e-8;
    hi += 1e-8;
    // Refine the grid until all n (simple) roots are bracketed.
    for (int grid = 1 << 10; grid <= (1 << 20); grid <<= 1) {
        int found = 0, positive = 0;
        double prev_x = lo, prev_v = charpoly_sign_value(lo);
        bool clean = true;
        for (int i = 1; i <= grid; ++i) {
            double x = lo + (hi - lo) * i / grid;
            double v = charpoly_sign_value(x);
            if (v == 0.0) {
                clean = false;
                break;
            }
            if ((prev_v < 0) != (v < 0)) {
                ++found;
                if (prev_x > 0) ++positive;
                else if (x > 0) {
                    // bracket straddles zero: bisect it against 0
                    if ((charpoly_sign_value(0.0) < 0) != (v < 0)) ++positive;
                }
            }
            prev_x = x;
            prev_v = v;
        }
        if (clean && found == n) return positive;
    }
    throw std::runtime_error("positive_count_bracketing: failed to isolate all eigenvalues");
}

McEstimate estimate(int n, std::uint64_t samples, std::uint64_t seed, int threads) {
    if (n < 1) throw std::domain_error("estimate: n must be >= 1");
    if (samples < 1000) throw std::domain_error("estimate: need at least 1000 samples");
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;

    McEstimate est;
    est.n = n;
    est.samples = samples;
    est.seed = seed;
    est.counts.assign(static_cast<std::size_t>(n) + 1, 0);

    std::uint64_t base = samples / kChunks;
    std::uint64_t extra = samples % kChunks;

    std::vector<std::future<ChunkResult>> futures;
    std::vector<ChunkResult> results(kChunks);
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            int c = next.fetch_add(1);
            if (c >= kChunks) return;
            std::uint64_t cnt = base + (static_cast<std::uint64_t>(c) < extra ? 1 : 0);
            results[static_cast<std::size_t>(c)] = run_chunk(n, cnt, mix_seed(seed, static_cast<std::uint64_t>(c)));
        }
    };
    std::vector<std::thread> pool;
    for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    for (const auto& r : results) {
        est.flagged += r.flagged;
        for (std::size_t k = 0; k < est.counts.size(); ++k) est.counts[k] += r.counts[k];
    }

    // Moments from the merged histogram (order-independent by construction).
    double s = static_cast<double>(samples);
    double mean = 0;
    for (std::size_t k = 0; k < est.counts.size(); ++k)
        mean += static_cast<double>(k) * static_cast<double>(est.counts[k]);
    mean /= s;
    double m2 = 0, m4 = 0;
    for (std::size_t k = 0; k < est.counts.size(); ++k) {
        double d = static_cast<double>(k) - mean;
        double w = static_cast<double>(est.counts[k]);
        m2 += w * d * d;
        m4 += w * d * d * d * d;
    }
    m2 /= s;
    m4 /= s;
    est.mean = mean;
    est.variance = m2 * s / (s - 1);
    // Var(s^2) ~ (m4 - m2^2 (S-3)/(S-1)) / S
    double v = (m4 - m2 * m2 * (s - 3) / (s - 1)) / s;
    est.stderr_variance = v > 0 ? std::sqrt(v) : 0;
    return est;
}

ChiSquareResult chi_square(const McEstimate& est, const IndexDistribution& exact,
                           const PrecisionContext& ctx) {
    if (est.n != exact.n) throw std::invalid_argument("chi_square: dimension mismatch");
    std::vector<double> expected(exact.probs.size());
    for (std::size_t k = 0; k < exact.probs.size(); ++k)
        expected[k] = static_cast<double>(eval_numeric(exact.probs[k], ctx)) *
                      static_cast<double>(est.samples);

    // Pool cells with expected < 5, scanning from both ends inward.
    std::vector<std::pair<double, double>> cells; // (observed, expected)
    std::size_t lo = 0, hi = expected.size() - 1;
    double o_acc = 0, e_acc = 0;
    while (lo <= hi && expected[lo] < 5.0) {
        o_acc += static_cast<double>(est.counts[lo]);
        e_acc += expected[lo];
        ++lo;
    }
    double o_hi = 0, e_hi = 0;
    while (hi > lo && expected[hi] < 5.0) {
        o_hi += static_cast<double>(est.counts[hi]);
        e_hi += expected[hi];
        --hi;
    }
    for (std::size_t k = lo; k <= hi; ++k) {
        double o = static_cast<double>(est.counts[k]);
        double e = expected[k];
        if (k == lo) {
            o += o_acc;
            e += e_acc;
        }
        if (k == hi) {
            o += o_hi;
            e += e_hi;
        }
        cells.emplace_back(o, e);
    }
    if (cells.size() < 2)
        throw std::domain_error("chi_square: degenerate pooling (single cell)");

    double stat = 0;
    for (const auto& [o, e] : cells) stat += (o - e) * (o - e) / e;
    int dof = static_cast<int>(cells.size()) - 1;
    boost::math::chi_squared dist(dof);
    ChiSquareResult res;
    res.statistic = stat;
    res.dof = dof;
    res.pooled_cells = static_cast<int>(exact.probs.size() - cells.size());
    res.p_value = boost::math::cdf(boost::math::complement(dist, stat));
    return res;
}

} // namespace gueindex
