#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gapsums/modring.hpp"
#include "gapsums/rng.hpp"

namespace gapsums {

using Vec = std::vector<std::int64_t>;  // a point of Z_q^s

inline constexpr std::uint64_t kEnumerationGuard = 10'000'000;

// A = {base + h_1 g_1 + ... + h_r g_r mod q : 0 <= h_i < H_i} in Z_q^s.
class Gap {
public:
    Gap(Modulus q, int s, Vec base, std::vector<Vec> generators,
        std::vector<std::int64_t> lengths);

    const Modulus& modulus() const { return q_; }
    int dimension() const { return s_; }
    int rank() const { return static_cast<int>(generators_.size()); }
    const Vec& base() const { return base_; }
    const std::vector<Vec>& generators() const { return generators_; }
    const std::vector<std::int64_t>& lengths() const { return lengths_; }

    std::uint64_t volume() const;  // H_1 ... H_r

    // JSON object {q, s, base, generators, lengths}.
    std::string to_json() const;
    static Gap from_json(const std::string& text);

private:
    Modulus q_;
    int s_;
    Vec base_;
    std::vector<Vec> generators_;
    std::vector<std::int64_t> lengths_;
};

// All H_1...H_r elements, lexicographic in (h_1, ..., h_r), duplicates kept.
std::vector<Vec> enumerate_elements(const Gap& g);

// Distinct elements of A (set semantics, order unspecified but deterministic).
std::vector<Vec> distinct_elements(const Gap& g);

// True iff the enumerated multiset has no duplicates.
bool is_proper_enumeration(const Gap& g);

// True iff z_1 g_1 + ... + z_r g_r == 0 mod q has no nonzero integer solution
// with |z_i| < H_i. Guard: prod(2 H_i - 1) <= 1e7.
bool no_small_kernel(const Modulus& q, const std::vector<Vec>& generators,
                     const std::vector<std::int64_t>& lengths);

// Kernel form of properness. Agrees with is_proper_enumeration on every Gap.
bool is_proper_kernel(const Gap& g);

// Rejection-samples generators and lengths until the kernel check passes.
Gap random_proper_gap(const Modulus& q, int s, int r, std::int64_t hmin,
                      std::int64_t hmax, std::uint64_t seed);
Gap random_proper_gap(const Modulus& q, int s, int r, std::int64_t hmin,
                      std::int64_t hmax, SplitMix64& rng);

} // namespace gapsums
