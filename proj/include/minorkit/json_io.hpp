#pragma once

#include <string>

#include <json.hpp>

#include "errors.hpp"
#include "graph.hpp"

namespace minorkit {

using nlohmann::json;

// {"n": 4, "edges": [[0,1],[1,2]]}
inline json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.vertex_count();
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    j["edges"] = std::move(edges);
    return j;
}

inline Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw parse_error("graph json: expected object with \"n\" and \"edges\"");
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 0)
        throw parse_error("graph json: \"n\" must be a non-negative integer");
    long long n = j["n"].get<long long>();
    if (n > 1000000) throw parse_error("graph json: size implausibly large");
    Graph g(static_cast<int>(n));
    if (!j["edges"].is_array()) throw parse_error("graph json: \"edges\" must be an array");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw parse_error("graph json: each edge must be a pair of integers");
        long long u = e[0].get<long long>(), v = e[1].get<long long>();
        if (u < 0 || v < 0 || u >= n || v >= n) throw parse_error("graph json: edge endpoint out of range");
        if (u == v) throw parse_error("graph json: loop edge");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

inline json parse_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw parse_error("malformed json");
    return j;
}

}  // namespace minorkit
