#include "gapsums/fourier.hpp"

#include <cmath>
#include <numbers>

namespace gapsums {

cplx gap_fourier_coefficient(const Gap& g, const Vec& b) {
    const std::int64_t q = static_cast<std::int64_t>(g.modulus().value());
    const int s = g.dimension();
    std::int64_t base_dot = 0;
    for (int c = 0; c < s; ++c) base_dot += g.base()[c] * b[c];
    cplx acc = eq_root(g.modulus().value(), base_dot);
    for (int i = 0; i < g.rank(); ++i) {
        std::int64_t dot = 0;
        for (int c = 0; c < s; ++c) dot += g.generators()[i][c] * b[c];
        acc *= geometric_sum(g.modulus().value(), dot % q,
                             static_cast<std::uint64_t>(g.lengths()[i]));
    }
    return acc;
}

cplx gap_fourier_coefficient_direct(const Gap& g, const Vec& b) {
    const std::uint64_t q = g.modulus().value();
    const int s = g.dimension();
    cplx acc{0.0, 0.0};
    for (const auto& a : enumerate_elements(g)) {
        std::int64_t dot = 0;
        for (int c = 0; c < s; ++c) dot += a[c] * b[c];
        acc += eq_root(q, dot);
    }
    return acc;
}

namespace {

void check_frequency_guard(const Gap& g) {
    double cells = std::pow(static_cast<double>(g.modulus().value()),
                            g.dimension());
    if (cells > static_cast<double>(kEnumerationGuard))
        throw ResourceError("fourier: q^s frequency guard exceeded");
}

// |sum_{h<H} e_q(ch)| per residue class c, tabulated once per generator.
std::vector<double> magnitude_table(std::uint64_t q, std::int64_t H) {
    std::vector<double> t(q);
    t[0] = static_cast<double>(H);
    for (std::uint64_t c = 1; c < q; ++c) {
        double x = std::numbers::pi * static_cast<double>(c) /
                   static_cast<double>(q);
        t[c] = std::abs(std::sin(x * static_cast<double>(H)) / std::sin(x));
    }
    return t;
}

template <typename Fn>
void for_each_profile_term(const Gap& g, Fn&& fn) {
    const std::int64_t q = static_cast<std::int64_t>(g.modulus().value());
    const int s = g.dimension();
    const int r = g.rank();
    std::vector<std::vector<double>> mags;
    mags.reserve(r);
    for (int i = 0; i < r; ++i)
        mags.push_back(magnitude_table(g.modulus().value(), g.lengths()[i]));

    std::vector<std::int64_t> b(s, 0);
    std::vector<std::int64_t> dots(r, 0);  // g_i . b mod q, stepped incrementally
    while (true) {
        double mag = 1.0;
        for (int i = 0; i < r; ++i) mag *= mags[i][dots[i]];
        fn(mag);
        int c = s - 1;
        while (c >= 0) {
            ++b[c];
            if (b[c] < q) {
                for (int i = 0; i < r; ++i) {
                    dots[i] += g.generators()[i][c];
                    if (dots[i] >= q) dots[i] -= q;
                }
                break;
            }
            b[c] = 0;
            // Rolling b[c] from q-1 to 0 subtracts (q-1)*g, i.e. adds g mod q.
            for (int i = 0; i < r; ++i) {
                dots[i] += g.generators()[i][c];
                if (dots[i] >= q) dots[i] -= q;
            }
            --c;
        }
        if (c < 0) break;
    }
}

} // namespace

double l1_norm(const Gap& g) {
    check_frequency_guard(g);
    double acc = 0.0;
    for_each_profile_term(g, [&](double mag) { acc += mag; });
    return acc;
}

FourierProfile fourier_profile(const Gap& g) {
    check_frequency_guard(g);
    FourierProfile p;
    for_each_profile_term(g, [&](double mag) {
        p.l1 += mag;
        p.l2_squared += mag * mag;
        if (mag > p.linf) p.linf = mag;
    });
    p.parseval_expected = std::pow(static_cast<double>(g.modulus().value()),
                                   g.dimension()) *
                          static_cast<double>(g.volume());
    return p;
}

double l1_bound(const Gap& g) {
    if (!is_proper_kernel(g))
        throw PreconditionError("l1_bound: GAP is not proper");
    double bound = std::pow(static_cast<double>(g.modulus().value()),
                            g.dimension());
    for (std::int64_t h : g.lengths())
        bound *= std::log(static_cast<double>(h));
    return bound;
}

} // namespace gapsums
