#include "gapsums/constants.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "gapsums/errors.hpp"

namespace gapsums {

MeasuredConstants MeasuredConstants::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot open constants file: " + path);
    nlohmann::json j;
    in >> j;
    MeasuredConstants mc;
    for (auto& [key, val] : j.at("K").items())
        mc.K[std::stoi(key)] = val.get<double>();
    for (auto& [key, val] : j.at("C").items()) {
        auto comma = key.find(',');
        mc.C[{std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))}] =
            val.get<double>();
    }
    mc.provenance = j.value("provenance", nlohmann::json::object()).dump();
    return mc;
}

void MeasuredConstants::save(const std::string& path) const {
    nlohmann::json j;
    for (const auto& [r, v] : K) j["K"][std::to_string(r)] = v;
    for (const auto& [rs, v] : C)
        j["C"][std::to_string(rs.first) + "," + std::to_string(rs.second)] = v;
    j["provenance"] = nlohmann::json::parse(provenance.empty() ? "{}" : provenance);
    std::ofstream out(path);
    if (!out) throw IOError("cannot write constants file: " + path);
    out << j.dump(2) << "\n";
}

// Values produced by `calibrate` (see data/measured_constants.json); kept in
// sync so library users do not need the data file on disk.
MeasuredConstants MeasuredConstants::builtin() {
    MeasuredConstants mc;
    mc.K[1] = 0.967741935483871;
    mc.K[2] = 0.9072580645161291;
    mc.K[3] = 0.4;
    mc.C[{1, 1}] = 1.9235933878519513;
    mc.C[{1, 2}] = 1.9235933878519513;
    mc.C[{2, 1}] = 3.592240804689929;
    mc.C[{2, 2}] = 3.7002115217877476;
    mc.provenance = "{\"source\":\"builtin copy of data/measured_constants.json\"}";
    return mc;
}

} // namespace gapsums
