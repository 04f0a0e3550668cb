#pragma once

#include <map>
#include <string>

namespace gapsums {

// Ratio ceilings measured by the calibrate tool over the exhaustive desk-scale
// families (see tools/calibrate.cpp); the acceptance suite asserts against
// them. K[r]: max N / solution_bound. C[{r,s}]: max l1_norm / l1_bound.
struct MeasuredConstants {
    std::map<int, double> K;
    std::map<std::pair<int, int>, double> C;  // keyed (r, s)
    std::string provenance;

    static MeasuredConstants load(const std::string& path);
    static MeasuredConstants builtin();  // baked-in copy of the shipped file
    void save(const std::string& path) const;
};

} // namespace gapsums
