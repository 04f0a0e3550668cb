#pragma once

#include <cstdint>
#include <vector>

#include "gapsums/gap.hpp"
#include "gapsums/modring.hpp"

namespace gapsums {

// Interval [lo, lo + len) of consecutive integers, matched mod q
// (wraparound allowed); len <= q.
struct BoxInterval {
    std::int64_t lo = 0;
    std::uint64_t len = 0;

    bool contains(std::int64_t x, std::uint64_t q) const {
        std::int64_t qi = static_cast<std::int64_t>(q);
        std::int64_t d = (x - lo) % qi;
        if (d < 0) d += qi;
        return static_cast<std::uint64_t>(d) < len;
    }
};

// Count solutions of x_i = g_i . y (mod q), x_i in I_i, y in Z_q^s.
struct CongruenceInstance {
    Modulus q;
    int s = 1;
    std::vector<Vec> generators;           // g_1..g_r, each in Z_q^s
    std::vector<BoxInterval> intervals;    // I_1..I_r
    std::vector<std::int64_t> lengths;     // H_1..H_r (bound parameters)

    int rank() const { return static_cast<int>(generators.size()); }
};

// Brute force over y in Z_q^s; each y fixes every x_i mod q. Guard q^s <= 1e7.
std::uint64_t count_solutions_exact(const CongruenceInstance& inst);

// Independent counter for r = s = 1: loops over the interval and counts
// y with g*y = x (mod q) by gcd.
std::uint64_t count_solutions_interval_loop(const CongruenceInstance& inst);

// q^{s-r} * prod(len_i + q/H_i), without the implied constant. Requires the
// kernel condition (no small nonzero null vector of the generators).
double solution_bound(const CongruenceInstance& inst);

// True iff z_1 g_1 + ... + z_r g_r = 0 mod q has no nonzero solution with
// |z_i| < H_i (the hypothesis under which solution_bound applies).
bool kernel_condition(const CongruenceInstance& inst);

} // namespace gapsums
