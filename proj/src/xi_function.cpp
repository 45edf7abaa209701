#include "gueindex/xi_function.hpp"

namespace gueindex {

XiPoly shift_to_one(const XiPoly& p) {
    XiPoly shift(std::vector<PiScalar>{PiScalar(1), PiScalar(1)}); // 1 + w
    return compose(p, shift);
}

LaurentSeries expand_at_one(const XiFunction& f, int order) {
    LaurentSeries out;
    if (f.is_zero()) return out;

    XiPoly n = shift_to_one(f.num());
    XiPoly d = shift_to_one(f.den());

    auto low_order = [](const XiPoly& p) {
        int k = 0;
        while (p.coeff(k).is_zero()) ++k;
        return k;
    };
    int a = low_order(n);
    int b = low_order(d);
    if (b - a > 1)
        throw std::domain_error("expand_at_one: pole of order > 1 at xi = 1");

    out.min_order = a - b;
    int len = order - out.min_order + 1;
    if (len <= 0) return out;

    // Power-series division of the w-shifted parts after stripping w^a, w^b.
    std::vector<PiScalar> nn(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) nn[static_cast<std::size_t>(i)] = n.coeff(a + i);
    PiScalar d0 = d.coeff(b);
    std::vector<PiScalar> c(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) {
        PiScalar acc = nn[static_cast<std::size_t>(i)];
        for (int j = 0; j < i; ++j)
            acc -= c[static_cast<std::size_t>(j)] * d.coeff(b + i - j);
        c[static_cast<std::size_t>(i)] = acc / d0;
    }
    out.coeffs = std::move(c);
    out.normalize();
    return out;
}

LaurentSeries cauchy_product(const LaurentSeries& a, const LaurentSeries& b, int order) {
    LaurentSeries out;
    if (a.coeffs.empty() || b.coeffs.empty()) return out;
    out.min_order = a.min_order + b.min_order;
    int len = order - out.min_order + 1;
    if (len <= 0) return out;
    out.coeffs.assign(static_cast<std::size_t>(len), PiScalar(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
            std::size_t k = i + j;
            if (k >= static_cast<std::size_t>(len)) continue;
            out.coeffs[k] += a.coeffs[i] * b.coeffs[j];
        }
    }
    out.normalize();
    return out;
}

} // namespace gueindex
