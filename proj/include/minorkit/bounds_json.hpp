#pragma once

#include <json.hpp>

#include "bounds.hpp"

namespace minorkit {

// Values routinely exceed every machine word, so they serialize as decimal
// strings rather than JSON numbers.
inline nlohmann::json bound_trace_to_json(const BoundTrace& t) {
    nlohmann::json j;
    j["name"] = t.name;
    j["note"] = t.note;
    j["value"] = t.value.str();
    if (!t.children.empty()) {
        nlohmann::json kids = nlohmann::json::array();
        for (const auto& c : t.children) kids.push_back(bound_trace_to_json(c));
        j["steps"] = std::move(kids);
    }
    return j;
}

inline nlohmann::json bound_result_to_json(const BoundResult& r) {
    nlohmann::json j;
    j["value"] = r.value.str();
    j["trace"] = bound_trace_to_json(r.trace);
    nlohmann::json consts = nlohmann::json::object();
    for (const auto& [name, value] : r.constants) consts[name] = value;
    j["constants"] = std::move(consts);
    if (!r.warnings.empty()) j["warnings"] = r.warnings;
    return j;
}

}  // namespace minorkit
