#pragma once

#include <cstdint>

namespace gapsums {

// Counter-based splitmix64. Identical output on every platform, which the
// seeded sweep/search determinism contract relies on.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) without platform-dependent distribution code.
    std::uint64_t below(std::uint64_t n) {
        // Rejection to kill modulo bias; n is tiny compared to 2^64 here.
        std::uint64_t limit = ~0ull - (~0ull % n + 1) % n;
        std::uint64_t v = next();
        while (v > limit) v = next();
        return v % n;
    }

    std::int64_t range(std::int64_t lo, std::int64_t hi) {  // inclusive
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

} // namespace gapsums
