#pragma once

#include <json.hpp>

#include "irred/experiment.hpp"

namespace irred {

inline nlohmann::json to_json(const FiniteAbelianGroup& g) {
    return {{"invariant_factors", g.invariant_factors()}};
}

inline nlohmann::json to_json(const GroupElement& e) { return nlohmann::json(e.coords); }

inline nlohmann::json to_json(const ClassOrdering& ord) {
    nlohmann::json arr = nlohmann::json::array();
    for (const GroupElement& e : ord.classes()) arr.push_back(e.coords);
    return arr;
}

inline nlohmann::json to_json(const TypeSet& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (const TypeVec& t : s.types) arr.push_back(t); // already lexicographic
    return arr;
}

inline nlohmann::json to_json(const Rational& r) {
    return {{"num", r.num()}, {"den", r.den()}};
}

inline nlohmann::json to_json(const MaximizationResult& m) {
    return {{"m", m.m}, {"argmax", m.argmax}, {"kkt_residual", m.kkt_residual}, {"seed", m.seed}};
}

inline nlohmann::json to_json(const QIIdeal& a) { return {{"a", a.a}, {"b", a.b}, {"c", a.c}}; }

inline nlohmann::json to_json(const QIInteger& v) {
    return {{"x", v.x}, {"y", v.y}, {"basis", "omega"}};
}

inline nlohmann::json to_json(const PrimeIdealRec& r) {
    const char* kind = r.kind == SplitKind::Split ? "split"
                       : r.kind == SplitKind::Ramified ? "ramified"
                                                       : "inert";
    return {{"p", r.p},
            {"kind", kind},
            {"ideal", to_json(r.ideal)},
            {"norm", r.norm},
            {"class_index", r.class_index}};
}

inline nlohmann::json to_json(const ProgressionConstants& c) {
    nlohmann::json types = nlohmann::json::array();
    for (const TypeVec& t : c.maximal_types) types.push_back(t);
    return {{"L", c.L},
            {"type_sum", to_json(c.type_sum)},
            {"C_prime", to_json(c.c_prime)},
            {"maximal_types", types}};
}

inline nlohmann::json to_json(const ExperimentReport& r, bool include_timing = true) {
    nlohmann::json series = nlohmann::json::array();
    for (const auto& s : r.series) {
        series.push_back({{"label", s.label},
                          {"observed", s.observed},
                          {"predicted", s.predicted},
                          {"ratio", s.ratio}});
    }
    nlohmann::json j{{"experiment", r.id},
                     {"params", r.params},
                     {"x_grid", r.x_grid},
                     {"series", series},
                     {"seed", r.seed}};
    if (include_timing) j["wall_seconds"] = r.wall_seconds;
    return j;
}

inline nlohmann::json to_json(const MertensTable& t) {
    return {{"x_grid", t.x_grid}, {"sums", t.sums}, {"residuals", t.residuals}};
}

/// column order: experiment,label,x,observed,predicted,ratio
inline std::string report_to_csv(const ExperimentReport& r) {
    std::string out = "experiment,label,x,observed,predicted,ratio\n";
    for (const auto& s : r.series) {
        for (size_t i = 0; i < r.x_grid.size(); ++i) {
            out += r.id + "," + s.label + "," + std::to_string(r.x_grid[i]);
            out += "," + (i < s.observed.size() ? std::to_string(s.observed[i]) : std::string());
            out += "," + (i < s.predicted.size() ? std::to_string(s.predicted[i]) : std::string());
            out += "," + (i < s.ratio.size() ? std::to_string(s.ratio[i]) : std::string());
            out += "\n";
        }
    }
    return out;
}

} // namespace irred
