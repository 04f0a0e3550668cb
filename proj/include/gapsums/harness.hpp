#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gapsums/sums.hpp"

namespace gapsums {

enum class ReportFormat { csv, json_lines };

struct SweepConfig {
    std::uint64_t q_min = 3;
    std::uint64_t q_max = 30;
    bool primes_only = false;
    int r = 1;
    int s = 1;
    // Kinds to evaluate: any of "char", "poly", "multilinear".
    std::vector<std::string> kinds = {"char"};
    // r = 1, s = 1: include every interval [0, H) for H in [2, q].
    bool exhaustive_intervals = true;
    int random_gaps_per_q = 0;
    std::int64_t hmin = 2;
    std::int64_t hmax = 0;  // 0: use q
    int max_chars_per_q = 0;  // 0: all primitive characters
    std::vector<int> poly_degrees = {2, 3};
    int polys_per_degree = 3;
    std::uint64_t seed = 1;
    std::string output_path;
    ReportFormat format = ReportFormat::csv;

    static SweepConfig from_json(const std::string& text);
    std::string to_json() const;
};

// One row per (function, GAP) pair; every row with a chain bound is checked
// against it and a violation aborts with the witness.
std::vector<SumReport> sweep(const SweepConfig& config);

struct ExtremalResult {
    bool empty = true;
    bool exhaustive = false;
    std::uint64_t q = 0;
    int r = 1;
    std::string gap_json;
    std::string character_id;
    double max_magnitude = 0.0;
    double ratio_to_shape = 0.0;
    long evaluations = 0;
};

// Approximates S(chi, r) over primitive characters mod q. Exhaustive when the
// search space fits the budget, else seeded random restarts with local moves.
ExtremalResult extremal_search(std::uint64_t q, int r, long budget,
                               std::uint64_t seed);

struct CounterexampleReport {
    std::uint64_t q = 0;
    std::int64_t H = 0;
    std::string character_id;
    cplx double_sum{0.0, 0.0};      // sum_{h1,h2} chi(h1 - h2)
    cplx weighted_sum{0.0, 0.0};    // 2 sum_n chi(n) (H - n)
    double difference = 0.0;
    std::int64_t max_multiplicity = 0;  // max_b #{a in A : a = b mod q}
};

// The rank-2 GAP {h1 + h2(q-1) : 1 <= h1,h2 <= H}, proper over Z but not as a
// multiset in Z_q; checks the collapse identity for the first even primitive
// character mod q.
CounterexampleReport counterexample_demo(std::uint64_t q, std::int64_t H);

void emit_report(const std::vector<SumReport>& rows, ReportFormat format,
                 const std::string& path);
std::string format_report(const std::vector<SumReport>& rows, ReportFormat format);
std::vector<SumReport> parse_report(const std::string& text, ReportFormat format);

} // namespace gapsums
