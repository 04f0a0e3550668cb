#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gapsums/constants.hpp"

namespace gapsums {

// Desk-scale family parameters, shared by the calibrate tool (which measures
// the ratio ceilings over these exact ranges) and the acceptance suite (which
// asserts against them).
struct FamilyCaps {
    // Congruence-count family (statement-level Prop ratio law).
    std::uint64_t cong_q_s1 = 30;       // s = 1, r in {1, 2}
    std::uint64_t cong_q_s2_r1 = 20;
    std::uint64_t cong_q_s2_r2 = 8;
    std::uint64_t cong_q_r3 = 12;       // s = 1, r = 3 (calibration only)
    // l1-norm family (proper GAPs).
    std::uint64_t l1_q_s1 = 30;         // s = 1, r in {1, 2}
    std::uint64_t l1_q_s2_r1 = 20;
    std::uint64_t l1_q_s2_r2 = 8;
};

struct CongruenceScan {
    std::map<int, double> max_ratio_by_r;  // max N / solution_bound
    long instances = 0;
    long counter_disagreements = 0;        // r = s = 1 dual-route mismatches
};
CongruenceScan scan_congruence_family(const FamilyCaps& caps);

struct L1Scan {
    std::map<std::pair<int, int>, double> max_ratio_by_rs;  // l1 / l1_bound
    double max_parseval_relative_error = 0.0;
    double min_l1_over_qs = 0.0;  // inversion floor margin, should stay >= 1
    long gaps = 0;
};
L1Scan scan_l1_family(const FamilyCaps& caps);

struct CriterionResult {
    int id = 0;
    std::string name;
    bool asserted = true;  // criterion 9 is report-only
    bool pass = false;
    std::string detail;
};

struct AcceptanceOptions {
    MeasuredConstants constants;
    std::optional<int> only;  // run a single criterion
    FamilyCaps caps;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts,
                                            std::ostream& log);

// True iff every asserted criterion passed.
bool acceptance_passed(const std::vector<CriterionResult>& results);

// Loads data/measured_constants.json (build-time path), with the baked-in
// copy as fallback.
MeasuredConstants default_constants();

} // namespace gapsums
