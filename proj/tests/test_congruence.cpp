#include <doctest.h>

#include <cmath>

#include "gapsums/congruence.hpp"
#include "gapsums/rng.hpp"

using namespace gapsums;

namespace {

// Definition-level oracle: walk y over Z_q^s by hand and test membership.
std::uint64_t oracle_count(const CongruenceInstance& inst) {
    std::uint64_t q = inst.q.value();
    std::uint64_t points = 1;
    for (int c = 0; c < inst.s; ++c) points *= q;
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < points; ++code) {
        Vec y(inst.s);
        std::uint64_t rest = code;
        for (int c = 0; c < inst.s; ++c) {
            y[c] = static_cast<std::int64_t>(rest % q);
            rest /= q;
        }
        bool all = true;
        for (int i = 0; i < inst.rank() && all; ++i) {
            std::int64_t dot = 0;
            for (int c = 0; c < inst.s; ++c)
                dot += inst.generators[i][c] * y[c];
            if (!inst.intervals[i].contains(inst.q.reduce(dot), q)) all = false;
        }
        if (all) ++count;
    }
    return count;
}

} // namespace

TEST_CASE("hand-checked counts") {
    Modulus m5 = Modulus::factorize(5);
    // x = 2y mod 5, x in {1, 2}: y = 3 gives 1, y = 1 gives 2.
    CongruenceInstance a{m5, 1, {{2}}, {{1, 2}}, {5}};
    CHECK(count_solutions_exact(a) == 2);
    CHECK(count_solutions_interval_loop(a) == 2);

    // Full interval: every y solves it.
    CongruenceInstance b{m5, 1, {{3}}, {{0, 5}}, {5}};
    CHECK(count_solutions_exact(b) == 5);

    // Non-coprime generator: x = 2y mod 6 hits only even residues.
    Modulus m6 = Modulus::factorize(6);
    CongruenceInstance c{m6, 1, {{2}}, {{0, 3}}, {3}};
    // x in {0,1,2}; 2y mod 6 in {0,2,4}; matches x=0 (y=0,3) and x=2 (y=1,4).
    CHECK(count_solutions_exact(c) == 4);
    CHECK(count_solutions_interval_loop(c) == 4);

    // Wraparound interval {5, 0} mod 6.
    CongruenceInstance d{m6, 1, {{1}}, {{5, 2}}, {6}};
    CHECK(count_solutions_exact(d) == 2);
    CHECK(count_solutions_interval_loop(d) == 2);
}

TEST_CASE("dual counters agree for r = s = 1 across random instances") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 3000; ++trial) {
        std::uint64_t q = 2 + rng.below(60);
        Modulus m = Modulus::factorize(q);
        std::int64_t g = 1 + static_cast<std::int64_t>(rng.below(q - 1));
        BoxInterval iv{static_cast<std::int64_t>(rng.below(q)),
                       1 + rng.below(q)};
        std::int64_t H = 1 + static_cast<std::int64_t>(rng.below(q));
        CongruenceInstance inst{m, 1, {{g}}, {iv}, {H}};
        std::uint64_t exact = count_solutions_exact(inst);
        CHECK(exact == count_solutions_interval_loop(inst));
        CHECK(exact == oracle_count(inst));
    }
}

TEST_CASE("exact counter matches the definition oracle for r = 2, s <= 2") {
    SplitMix64 rng(12);
    for (int trial = 0; trial < 400; ++trial) {
        std::uint64_t q = 2 + rng.below(12);
        int s = 1 + static_cast<int>(rng.below(2));
        Modulus m = Modulus::factorize(q);
        std::vector<Vec> gens(2, Vec(s));
        bool zero = false;
        for (auto& g : gens) {
            std::int64_t norm = 0;
            for (auto& v : g) {
                v = static_cast<std::int64_t>(rng.below(q));
                norm += v;
            }
            if (norm == 0) zero = true;
        }
        if (zero) continue;
        std::vector<BoxInterval> ivs;
        std::vector<std::int64_t> lens;
        for (int i = 0; i < 2; ++i) {
            ivs.push_back({static_cast<std::int64_t>(rng.below(q)),
                           1 + rng.below(q)});
            lens.push_back(1 + static_cast<std::int64_t>(rng.below(q)));
        }
        CongruenceInstance inst{m, s, gens, ivs, lens};
        CHECK(count_solutions_exact(inst) == oracle_count(inst));
    }
}

TEST_CASE("kernel condition matches the small-kernel search") {
    Modulus m = Modulus::factorize(12);
    // g = 4: smallest z with 4z = 0 mod 12 is z = 3.
    CongruenceInstance ok{m, 1, {{4}}, {{0, 4}}, {3}};
    CHECK(kernel_condition(ok));
    CHECK(solution_bound(ok) > 0.0);
    CongruenceInstance bad{m, 1, {{4}}, {{0, 4}}, {4}};
    CHECK_FALSE(kernel_condition(bad));
    CHECK_THROWS_AS(solution_bound(bad), PreconditionError);
}

TEST_CASE("solution_bound closed form") {
    Modulus m = Modulus::factorize(20);
    CongruenceInstance inst{m, 2, {{3, 7}}, {{2, 5}}, {4}};
    REQUIRE(kernel_condition(inst));
    // q^{s-r} (len + q/H) = 20^1 * (5 + 20/4) = 200.
    CHECK(solution_bound(inst) == doctest::Approx(200.0));
}

TEST_CASE("bound dominates the count on kernel-satisfying instances") {
    SplitMix64 rng(13);
    double max_ratio = 0.0;
    for (int trial = 0; trial < 2000; ++trial) {
        std::uint64_t q = 3 + rng.below(40);
        Modulus m = Modulus::factorize(q);
        int r = 1 + static_cast<int>(rng.below(2));
        std::vector<Vec> gens;
        std::vector<BoxInterval> ivs;
        std::vector<std::int64_t> lens;
        for (int i = 0; i < r; ++i) {
            gens.push_back({1 + static_cast<std::int64_t>(rng.below(q - 1))});
            ivs.push_back({static_cast<std::int64_t>(rng.below(q)),
                           1 + rng.below(q)});
            lens.push_back(1 + static_cast<std::int64_t>(rng.below(q)));
        }
        CongruenceInstance inst{m, 1, gens, ivs, lens};
        if (!kernel_condition(inst)) continue;
        double ratio = double(count_solutions_exact(inst)) / solution_bound(inst);
        max_ratio = std::max(max_ratio, ratio);
    }
    // The measured desk-scale ceiling lives in the constants file; here we
    // only pin that the ratio stays of order one.
    CHECK(max_ratio <= 8.0);
    CHECK(max_ratio > 0.0);
}

TEST_CASE("input validation") {
    Modulus m = Modulus::factorize(9);
    CongruenceInstance zero_gen{m, 1, {{0}}, {{0, 3}}, {2}};
    CHECK_THROWS_AS(count_solutions_exact(zero_gen), PreconditionError);
    CongruenceInstance bad_len{m, 1, {{2}}, {{0, 10}}, {2}};
    CHECK_THROWS_AS(count_solutions_exact(bad_len), PreconditionError);
    CongruenceInstance bad_h{m, 1, {{2}}, {{0, 3}}, {10}};
    CHECK_THROWS_AS(count_solutions_exact(bad_h), PreconditionError);
}
