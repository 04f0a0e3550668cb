#include "gapsums/modring.hpp"

#include <cmath>
#include <numbers>

namespace gapsums {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin, valid for all n < 3.3e24 with this base set.
bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Modulus Modulus::factorize(std::uint64_t n) {
    if (n == 0) throw PreconditionError("factorize: n must be positive");
    std::vector<Factor> factors;
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p) continue;
        int e = 0;
        std::uint64_t pe = 1;
        while (m % p == 0) {
            m /= p;
            ++e;
            pe *= p;
        }
        factors.push_back({p, e, pe});
        // After stripping small factors, a prime remainder ends it early.
        if (m > 1 && is_prime_u64(m)) break;
    }
    if (m > 1) {
        std::uint64_t pe = m;
        int e = 1;
        // m is prime at this point (trial division exhausted or MR certified).
        factors.push_back({m, e, pe});
    }
    std::uint64_t phi = 1;
    for (const auto& f : factors) phi *= (f.pe / f.p) * (f.p - 1);
    return Modulus(n, std::move(factors), phi);
}

namespace {

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m,
                                   std::uint64_t group_order) {
    // Order divides group_order; strip prime factors while possible.
    std::uint64_t ord = group_order;
    Modulus of = Modulus::factorize(group_order);
    for (const auto& f : of.factors()) {
        for (int i = 0; i < f.e; ++i) {
            if (powmod_u64(a, ord / f.p, m) == 1)
                ord /= f.p;
            else
                break;
        }
    }
    return ord;
}

std::uint64_t smallest_primitive_root(std::uint64_t pe, std::uint64_t phi) {
    for (std::uint64_t g = 2; g < pe; ++g) {
        if (gcd_u64(g, pe) != 1) continue;
        if (multiplicative_order(g, pe, phi) == phi) return g;
    }
    throw std::logic_error("no primitive root found");
}

} // namespace

UnitGroupStructure unit_group(const Modulus& q) {
    UnitGroupStructure s;
    s.q = q.value();
    for (const auto& f : q.factors()) {
        UnitGroupComponent c;
        c.p = f.p;
        c.e = f.e;
        c.pe = f.pe;
        if (f.p == 2) {
            if (f.e == 2) {
                c.generators = {3};  // -1 mod 4
                c.orders = {2};
            } else if (f.e >= 3) {
                c.generators = {f.pe - 1, 5};
                c.orders = {2, f.pe / 4};
            }
            // 2^1: trivial unit group, no generators.
        } else {
            std::uint64_t phi = (f.pe / f.p) * (f.p - 1);
            c.generators = {smallest_primitive_root(f.pe, phi)};
            c.orders = {phi};
        }
        s.components.push_back(std::move(c));
    }
    return s;
}

cplx eq_root(std::uint64_t q, std::int64_t x) {
    std::int64_t qi = static_cast<std::int64_t>(q);
    std::int64_t r = x % qi;
    if (r < 0) r += qi;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(r) /
                   static_cast<double>(q);
    return {std::cos(angle), std::sin(angle)};
}

cplx geometric_sum(std::uint64_t q, std::int64_t c, std::uint64_t H) {
    std::int64_t qi = static_cast<std::int64_t>(q);
    std::int64_t r = c % qi;
    if (r < 0) r += qi;
    if (r == 0) return {static_cast<double>(H), 0.0};
    // Sum = e_q(c(H-1)/2) * sin(pi c H / q) / sin(pi c / q); keep the half-
    // angle phase explicit rather than halving r, which may be odd.
    double t = std::numbers::pi * static_cast<double>(r) / static_cast<double>(q);
    double num = std::sin(t * static_cast<double>(H));
    double den = std::sin(t);
    double mag = num / den;
    double phase = t * static_cast<double>(H - 1);
    return {mag * std::cos(phase), mag * std::sin(phase)};
}

double dist_to_int(double x) {
    double r = x - std::floor(x);
    return std::min(r, 1.0 - r);
}

double geometric_sum_ceiling(std::uint64_t q, std::int64_t c, std::uint64_t H) {
    std::int64_t qi = static_cast<std::int64_t>(q);
    std::int64_t r = c % qi;
    if (r < 0) r += qi;
    if (r == 0) return static_cast<double>(H);
    double norm = dist_to_int(static_cast<double>(r) / static_cast<double>(q));
    return std::min(static_cast<double>(H),
                    (std::numbers::pi / 2.0) / norm);
}

RootTable::RootTable(std::uint64_t q) : q_(q), roots_(q) {
    for (std::uint64_t x = 0; x < q; ++x)
        roots_[x] = eq_root(q, static_cast<std::int64_t>(x));
}

} // namespace gapsums
