// Measures the ratio ceilings K_r (congruence counts vs solution_bound) and
// C_{r,s} (l1 norm vs l1_bound) by exhausting the desk-scale families in
// FamilyCaps, then writes data/measured_constants.json. Run from the repo
// root after changing anything that feeds the bounds, and mirror the output
// into MeasuredConstants::builtin().

#include <cstdio>
#include <sstream>
#include <string>

#include "gapsums/acceptance.hpp"

using namespace gapsums;

int main(int argc, char** argv) {
    std::string out_path = argc > 1 ? argv[1] : "data/measured_constants.json";
    FamilyCaps caps;

    std::printf("scanning congruence family...\n");
    CongruenceScan cong = scan_congruence_family(caps);
    std::printf("  %ld instances, %ld counter disagreements\n", cong.instances,
                cong.counter_disagreements);
    if (cong.counter_disagreements != 0) {
        std::fprintf(stderr, "dual counters disagree; refusing to calibrate\n");
        return 2;
    }

    std::printf("scanning l1 family...\n");
    L1Scan l1 = scan_l1_family(caps);
    std::printf("  %ld proper GAPs, parseval err %.3g, min l1/q^s %.6f\n",
                l1.gaps, l1.max_parseval_relative_error, l1.min_l1_over_qs);

    MeasuredConstants mc;
    for (const auto& [r, ratio] : cong.max_ratio_by_r) {
        mc.K[r] = ratio;
        std::printf("  K_%d = %.12g\n", r, ratio);
    }
    for (const auto& [rs, ratio] : l1.max_ratio_by_rs) {
        mc.C[rs] = ratio;
        std::printf("  C_{%d,%d} = %.12g\n", rs.first, rs.second, ratio);
    }
    std::ostringstream prov;
    prov << "{\"tool\":\"calibrate\",\"families\":{"
         << "\"cong_q_s1\":" << caps.cong_q_s1
         << ",\"cong_q_s2_r1\":" << caps.cong_q_s2_r1
         << ",\"cong_q_s2_r2\":" << caps.cong_q_s2_r2
         << ",\"cong_q_r3\":" << caps.cong_q_r3
         << ",\"l1_q_s1\":" << caps.l1_q_s1
         << ",\"l1_q_s2_r1\":" << caps.l1_q_s2_r1
         << ",\"l1_q_s2_r2\":" << caps.l1_q_s2_r2
         << "},\"cong_instances\":" << cong.instances
         << ",\"l1_gaps\":" << l1.gaps << "}";
    mc.provenance = prov.str();
    mc.save(out_path);
    std::printf("wrote %s\n", out_path.c_str());
    return 0;
}
