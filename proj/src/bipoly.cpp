#include "gueindex/detail/bipoly.hpp"

#include <stdexcept>

namespace gueindex::detail {

namespace {

// Univariate exact division over Z (polynomials as coefficient vectors).
// Returns false if the division is not exact.
bool exact_div_z(const std::vector<BigInt>& a, const std::vector<BigInt>& b,
                 std::vector<BigInt>& q) {
    auto deg = [](const std::vector<BigInt>& p) {
        int d = static_cast<int>(p.size()) - 1;
        while (d >= 0 && p[static_cast<std::size_t>(d)] == 0) --d;
        return d;
    };
    int da = deg(a), db = deg(b);
    if (db < 0) throw std::domain_error("exact_div_z: division by zero");
    q.assign(da >= db ? static_cast<std::size_t>(da - db) + 1 : 0, BigInt(0));
    if (da < db) return da < 0; // zero dividend is fine
    std::vector<BigInt> r = a;
    const BigInt& lead = b[static_cast<std::size_t>(db)];
    for (int i = da; i >= db; --i) {
        BigInt& ri = r[static_cast<std::size_t>(i)];
        if (ri == 0) continue;
        if (!mpz_divisible_p(ri.backend().data(), lead.backend().data())) return false;
        BigInt f = ri / lead;
        for (int j = 0; j <= db; ++j)
            r[static_cast<std::size_t>(i - db + j)] -= f * b[static_cast<std::size_t>(j)];
        q[static_cast<std::size_t>(i - db)] = std::move(f);
    }
    for (const auto& ri : r)
        if (ri != 0) return false;
    return true;
}

} // namespace

void BiPoly::trim() {
    int max_i = -1, max_j = -1;
    for (int i = 0; i < nx_; ++i)
        for (int j = 0; j < ns_; ++j)
            if (at(i, j) != 0) {
                if (i > max_i) max_i = i;
                if (j > max_j) max_j = j;
            }
    if (max_i < 0) {
        nx_ = ns_ = 0;
        c_.clear();
        return;
    }
    if (max_i + 1 == nx_ && max_j + 1 == ns_) return;
    BiPoly t(max_i + 1, max_j + 1);
    for (int i = 0; i <= max_i; ++i)
        for (int j = 0; j <= max_j; ++j)
            t.at(i, j) = std::move(at(i, j));
    *this = std::move(t);
}

BiPoly mul(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return BiPoly();
    BiPoly r(a.xi_size() + b.xi_size() - 1, a.sigma_size() + b.sigma_size() - 1);
    for (int i = 0; i < a.xi_size(); ++i)
        for (int j = 0; j < a.sigma_size(); ++j) {
            const BigInt& av = a.at(i, j);
            if (av == 0) continue;
            for (int k = 0; k < b.xi_size(); ++k)
                for (int l = 0; l < b.sigma_size(); ++l) {
                    const BigInt& bv = b.at(k, l);
                    if (bv == 0) continue;
                    mpz_addmul(r.at(i + k, j + l).backend().data(), av.backend().data(),
                               bv.backend().data());
                }
        }
    r.trim();
    return r;
}

BiPoly sub(const BiPoly& a, const BiPoly& b) {
    BiPoly r(std::max(a.xi_size(), b.xi_size()), std::max(a.sigma_size(), b.sigma_size()));
    if (r.xi_size() == 0) return r;
    for (int i = 0; i < r.xi_size(); ++i)
        for (int j = 0; j < r.sigma_size(); ++j)
            r.at(i, j) = a.coeff(i, j) - b.coeff(i, j);
    r.trim();
    return r;
}

BiPoly exact_div(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) throw std::domain_error("BiPoly: division by zero");
    if (a.is_zero()) return BiPoly();

    // Long division in xi with coefficients in Z[sigma].
    int da = a.xi_size() - 1, db = b.xi_size() - 1;
    if (da < db) throw std::domain_error("BiPoly: division not exact (degree)");
    int ns = a.sigma_size();
    auto row = [ns](const BiPoly& p, int i) {
        std::vector<BigInt> v(static_cast<std::size_t>(std::max(p.sigma_size(), 1)));
        for (int j = 0; j < p.sigma_size(); ++j) v[static_cast<std::size_t>(j)] = p.coeff(i, j);
        return v;
    };

    std::vector<std::vector<BigInt>> rem(static_cast<std::size_t>(da + 1));
    for (int i = 0; i <= da; ++i) rem[static_cast<std::size_t>(i)] = row(a, i);
    std::vector<BigInt> blead = row(b, db);

    BiPoly q(da - db + 1, ns + 1);
    for (int i = da; i >= db; --i) {
        bool zero_row = true;
        for (const auto& v : rem[static_cast<std::size_t>(i)])
            if (v != 0) { zero_row = false; break; }
        if (zero_row) continue;
        std::vector<BigInt> qi;
        if (!exact_div_z(rem[static_cast<std::size_t>(i)], blead, qi))
            throw std::domain_error("BiPoly: division not exact (leading sigma row)");
        // rem -= qi * b * xi^{i-db}
        for (int k = 0; k <= db; ++k) {
            for (std::size_t s1 = 0; s1 < qi.size(); ++s1) {
                if (qi[s1] == 0) continue;
                for (int s2 = 0; s2 < b.sigma_size(); ++s2) {
                    const BigInt& bv = b.coeff(k, s2);
                    if (bv == 0) continue;
                    std::size_t pos = s1 + static_cast<std::size_t>(s2);
                    auto& target = rem[static_cast<std::size_t>(i - db + k)];
                    if (target.size() <= pos) target.resize(pos + 1);
                    mpz_submul(target[pos].backend().data(), qi[s1].backend().data(),
                               bv.backend().data());
                }
            }
        }
        for (std::size_t s = 0; s < qi.size(); ++s) {
            if (static_cast<int>(s) >= q.sigma_size())
                throw std::domain_error("BiPoly: quotient sigma degree overflow");
            q.at(i - db, static_cast<int>(s)) = std::move(qi[s]);
        }
    }
    for (int i = 0; i < db; ++i)
        for (const auto& v : rem[static_cast<std::size_t>(i)])
            if (v != 0) throw std::domain_error("BiPoly: division not exact (remainder)");
    q.trim();
    return q;
}

std::vector<BiPoly> bareiss_principal_minors(std::vector<std::vector<BiPoly>> m) {
    int n = static_cast<int>(m.size());
    std::vector<BiPoly> minors(static_cast<std::size_t>(n));
    BiPoly prev = BiPoly::constant(BigInt(1));
    for (int k = 0; k < n; ++k) {
        minors[static_cast<std::size_t>(k)] = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
        if (minors[static_cast<std::size_t>(k)].is_zero())
            throw std::domain_error("bareiss: zero pivot");
        if (k + 1 == n) break;
        const BiPoly& pivot = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
        // Symmetric update of the trailing block: m[i][j] for j >= i only.
        for (int i = k + 1; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                BiPoly t = sub(mul(pivot, m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]),
                               mul(m[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)],
                                   m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]));
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = exact_div(t, prev);
            }
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < i; ++j)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        prev = pivot;
    }
    return minors;
}

} // namespace gueindex::detail
