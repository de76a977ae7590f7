#pragma once

#include <json.hpp>

#include "errors.hpp"
#include "flatness.hpp"
#include "json_io.hpp"
#include "wallgrid_io.hpp"

// JSON forms for flatness certificates. A certificate file bundles the host
// graph, the wall, and the certificate so that a bundle alone decides
// validity. The schema is documented in docs/flatness-certificates.md.

namespace minorkit {

inline nlohmann::json painting_to_json(const Painting& p) {
    nlohmann::json j;
    j["nodes"] = p.node_count;
    j["boundary"] = p.boundary;
    j["cells"] = nlohmann::json::array();
    for (const PaintingCell& c : p.cells) j["cells"].push_back({{"rim", c.rim}});
    j["rotations"] = nlohmann::json::array();
    for (const auto& rot : p.rotations) {
        nlohmann::json row = nlohmann::json::array();
        for (const RotationEntry& e : rot)
            row.push_back(e.is_cell ? nlohmann::json{{"cell", e.index}}
                                    : nlohmann::json{{"arc", e.index}});
        j["rotations"].push_back(std::move(row));
    }
    return j;
}

inline Painting painting_from_json(const nlohmann::json& j) {
    Painting p;
    try {
        p.node_count = j.at("nodes").get<int>();
        p.boundary = j.at("boundary").get<std::vector<int>>();
        for (const auto& cj : j.at("cells"))
            p.cells.push_back({cj.at("rim").get<std::vector<int>>()});
        for (const auto& row : j.at("rotations")) {
            std::vector<RotationEntry> rot;
            for (const auto& ej : row) {
                if (ej.contains("cell"))
                    rot.push_back({true, ej.at("cell").get<int>()});
                else
                    rot.push_back({false, ej.at("arc").get<int>()});
            }
            p.rotations.push_back(std::move(rot));
        }
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("painting json: ") + e.what());
    }
    return p;
}

inline nlohmann::json flap_to_json(const Flap& f) {
    nlohmann::json j;
    j["vertices"] = f.vertices;
    j["edges"] = nlohmann::json::array();
    for (const Edge& e : f.edges) j["edges"].push_back({e.first, e.second});
    return j;
}

inline Flap flap_from_json(const nlohmann::json& j) {
    Flap f;
    try {
        f.vertices = j.at("vertices").get<std::vector<int>>();
        for (const auto& ej : j.at("edges"))
            f.edges.push_back(make_edge(ej.at(0).get<int>(), ej.at(1).get<int>()));
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("flap json: ") + e.what());
    }
    return f;
}

inline nlohmann::json certificate_to_json(const FlatnessCertificate& cert) {
    nlohmann::json j;
    j["x"] = cert.x;
    j["y"] = cert.y;
    j["pegs"] = cert.pegs;
    j["corners"] = cert.corners;
    j["omega"] = cert.omega;
    j["painting"] = painting_to_json(cert.painting);
    j["sigma"] = nlohmann::json::array();
    for (const Flap& f : cert.sigma) j["sigma"].push_back(flap_to_json(f));
    j["pi"] = cert.pi;
    return j;
}

inline FlatnessCertificate certificate_from_json(const nlohmann::json& j) {
    FlatnessCertificate cert;
    try {
        cert.x = j.at("x").get<std::vector<int>>();
        cert.y = j.at("y").get<std::vector<int>>();
        cert.pegs = j.at("pegs").get<std::vector<int>>();
        cert.corners = j.at("corners").get<std::vector<int>>();
        cert.omega = j.at("omega").get<std::vector<int>>();
        cert.painting = painting_from_json(j.at("painting"));
        for (const auto& fj : j.at("sigma")) cert.sigma.push_back(flap_from_json(fj));
        cert.pi = j.at("pi").get<std::vector<int>>();
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("certificate json: ") + e.what());
    }
    return cert;
}

struct FlatnessBundle {
    Graph graph;
    Wall wall;
    FlatnessCertificate certificate;
};

inline nlohmann::json flatness_bundle_to_json(const Graph& g, const Wall& w,
                                              const FlatnessCertificate& cert) {
    nlohmann::json j;
    j["graph"] = graph_to_json(g);
    j["wall"] = wall_to_json(w);
    j["certificate"] = certificate_to_json(cert);
    return j;
}

inline FlatnessBundle flatness_bundle_from_json(const nlohmann::json& j) {
    FlatnessBundle b;
    try {
        b.graph = graph_from_json(j.at("graph"));
        b.wall = wall_from_json(j.at("wall"));
        b.certificate = certificate_from_json(j.at("certificate"));
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("flatness bundle json: ") + e.what());
    }
    return b;
}

}  // namespace minorkit
