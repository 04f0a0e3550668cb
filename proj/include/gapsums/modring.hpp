#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "gapsums/errors.hpp"

namespace gapsums {

using cplx = std::complex<double>;

struct Factor {
    std::uint64_t p;
    int e;
    std::uint64_t pe;  // p^e
};

// A positive integer together with its prime factorization and phi.
class Modulus {
public:
    static Modulus factorize(std::uint64_t n);

    std::uint64_t value() const { return q_; }
    std::uint64_t phi() const { return phi_; }
    const std::vector<Factor>& factors() const { return factors_; }

    bool is_prime() const {
        return factors_.size() == 1 && factors_[0].e == 1;
    }

    // Residue of x in [0, q).
    std::int64_t reduce(std::int64_t x) const {
        std::int64_t q = static_cast<std::int64_t>(q_);
        std::int64_t r = x % q;
        return r < 0 ? r + q : r;
    }

private:
    Modulus(std::uint64_t q, std::vector<Factor> f, std::uint64_t phi)
        : q_(q), factors_(std::move(f)), phi_(phi) {}
    std::uint64_t q_;
    std::vector<Factor> factors_;
    std::uint64_t phi_;
};

struct UnitGroupComponent {
    std::uint64_t p;
    int e;
    std::uint64_t pe;
    // Generators of (Z/p^e)^*: one element for odd p and for 2^2 (namely -1);
    // the pair {-1, 5} for 2^e with e >= 3; empty for p^e in {1, 2}.
    std::vector<std::uint64_t> generators;
    std::vector<std::uint64_t> orders;
};

struct UnitGroupStructure {
    std::uint64_t q;
    std::vector<UnitGroupComponent> components;
};

// Smallest primitive root per odd prime-power component; {-1, 5} for 2^e, e>=3.
UnitGroupStructure unit_group(const Modulus& q);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);
bool is_prime_u64(std::uint64_t n);

// e_q(x) = exp(2*pi*i*x/q).
cplx eq_root(std::uint64_t q, std::int64_t x);

// Sum_{h=0}^{H-1} e_q(c h), in closed form (sine ratio times phase).
cplx geometric_sum(std::uint64_t q, std::int64_t c, std::uint64_t H);

// Distance from x to its nearest integer.
double dist_to_int(double x);

// min{H, (pi/2) / ||c/q||} when c != 0 mod q, else H; an always-valid ceiling
// on |geometric_sum(q, c, H)|.
double geometric_sum_ceiling(std::uint64_t q, std::int64_t c, std::uint64_t H);

// A table of the q-th roots of unity, for hot loops.
class RootTable {
public:
    explicit RootTable(std::uint64_t q);
    std::uint64_t modulus() const { return q_; }
    const cplx& operator()(std::int64_t x) const {
        std::int64_t q = static_cast<std::int64_t>(q_);
        std::int64_t r = x % q;
        return roots_[static_cast<std::size_t>(r < 0 ? r + q : r)];
    }

private:
    std::uint64_t q_;
    std::vector<cplx> roots_;
};

} // namespace gapsums
