#pragma once

#include <map>
#include <string>

#include "errors.hpp"
#include "grids.hpp"
#include "json_io.hpp"
#include "walls.hpp"

namespace minorkit {

inline nlohmann::json wall_to_json(const Wall& w) {
    nlohmann::json j;
    j["type"] = "wall";
    j["r"] = w.r;
    nlohmann::json subs = nlohmann::json::array();
    for (const auto& [e, len] : w.subdiv) {
        auto cu = w.coord[static_cast<std::size_t>(e.first)];
        auto cv = w.coord[static_cast<std::size_t>(e.second)];
        subs.push_back({{"u", {cu.first, cu.second}}, {"v", {cv.first, cv.second}}, {"length", len}});
    }
    j["subdivisions"] = subs;
    return j;
}

inline Wall wall_from_json(const nlohmann::json& j) {
    if (!j.is_object() || j.value("type", "") != "wall" || !j.contains("r") ||
        !j["r"].is_number_integer())
        throw parse_error("expected a wall object with an integer height");
    int r = j["r"].get<int>();
    if (r < 3 || r % 2 == 0) throw parse_error("wall height must be an odd integer >= 3");
    Wall probe = build_wall(r);
    std::map<Edge, int> lengths;
    if (j.contains("subdivisions")) {
        if (!j["subdivisions"].is_array()) throw parse_error("subdivisions must be an array");
        for (const auto& entry : j["subdivisions"]) {
            if (!entry.is_object() || !entry.contains("u") || !entry.contains("v") ||
                !entry.contains("length"))
                throw parse_error("each subdivision needs u, v, and length");
            auto read_coord = [&](const nlohmann::json& c) -> std::pair<int, int> {
                if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() ||
                    !c[1].is_number_integer())
                    throw parse_error("subdivision endpoint must be a coordinate pair");
                return {c[0].get<int>(), c[1].get<int>()};
            };
            auto cu = read_coord(entry["u"]);
            auto cv = read_coord(entry["v"]);
            if (!entry["length"].is_number_integer() || entry["length"].get<int>() < 1)
                throw parse_error("subdivision length must be a positive integer");
            if (!probe.has_vertex_at(cu.first, cu.second) ||
                !probe.has_vertex_at(cv.first, cv.second))
                throw parse_error("subdivision endpoint is not a wall vertex");
            Edge e = make_edge(probe.vertex_at(cu.first, cu.second),
                               probe.vertex_at(cv.first, cv.second));
            if (lengths.count(e)) throw parse_error("duplicate subdivision entry");
            lengths[e] = entry["length"].get<int>();
        }
    }
    try {
        return build_wall(r, lengths);
    } catch (const std::invalid_argument& ex) {
        throw parse_error(ex.what());
    }
}

inline nlohmann::json grid_to_json(const Grid& gr) {
    return {{"type", "grid"}, {"k", gr.k}, {"r", gr.r}};
}

inline Grid grid_from_json(const nlohmann::json& j) {
    if (!j.is_object() || j.value("type", "") != "grid" || !j.contains("k") || !j.contains("r") ||
        !j["k"].is_number_integer() || !j["r"].is_number_integer())
        throw parse_error("expected a grid object with integer dimensions");
    try {
        return build_grid(j["k"].get<int>(), j["r"].get<int>());
    } catch (const std::invalid_argument& ex) {
        throw parse_error(ex.what());
    }
}

inline nlohmann::json ptgrid_to_json(const PartiallyTriangulatedGrid& pt) {
    nlohmann::json chords = nlohmann::json::array();
    for (const Edge& e : pt.chords) chords.push_back({e.first, e.second});
    return {{"type", "ptgrid"}, {"k", pt.k}, {"r", pt.r}, {"chords", chords}};
}

inline PartiallyTriangulatedGrid ptgrid_from_json(const nlohmann::json& j) {
    if (!j.is_object() || j.value("type", "") != "ptgrid" || !j.contains("k") ||
        !j.contains("r") || !j["k"].is_number_integer() || !j["r"].is_number_integer())
        throw parse_error("expected a ptgrid object with integer dimensions");
    std::vector<Edge> chords;
    if (j.contains("chords")) {
        if (!j["chords"].is_array()) throw parse_error("chords must be an array");
        for (const auto& c : j["chords"]) {
            if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() ||
                !c[1].is_number_integer())
                throw parse_error("each chord must be a pair of vertex ids");
            chords.push_back(make_edge(c[0].get<int>(), c[1].get<int>()));
        }
    }
    try {
        return build_partially_triangulated_grid(j["k"].get<int>(), j["r"].get<int>(), chords);
    } catch (const std::invalid_argument& ex) {
        throw parse_error(ex.what());
    }
}

}  // namespace minorkit
