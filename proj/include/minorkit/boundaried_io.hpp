#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "boundaried.hpp"
#include "errors.hpp"
#include "graph6.hpp"
#include "json_io.hpp"

// Boundaried graphs travel as graph6 with a boundary sidecar. Characteristic
// vectors travel as CSV keyed by the label set and the representative; the
// graph6 alphabet starts above both separators, so no quoting is needed.

namespace minorkit {

inline nlohmann::json boundaried_to_json(const BoundariedGraph& b) {
    nlohmann::json j;
    j["graph6"] = to_graph6(b.g);
    j["boundary"] = b.boundary;
    return j;
}

inline BoundariedGraph boundaried_from_json(const nlohmann::json& j) {
    BoundariedGraph b;
    try {
        b.g = from_graph6(j.at("graph6").get<std::string>());
        b.boundary = j.at("boundary").get<std::vector<int>>();
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("boundaried json: ") + e.what());
    }
    try {
        check_boundaried(b, "boundaried json");
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
    return b;
}

inline nlohmann::json repset_to_json(const RepresentativeSet& rs) {
    nlohmann::json j;
    j["t"] = rs.t;
    j["h"] = rs.h;
    j["size_bound"] = rs.size_bound;
    j["context_bound"] = rs.context_bound;
    j["members"] = nlohmann::json::array();
    for (const BoundariedGraph& m : rs.members) j["members"].push_back(boundaried_to_json(m));
    return j;
}

inline RepresentativeSet repset_from_json(const nlohmann::json& j) {
    RepresentativeSet rs;
    try {
        rs.t = j.at("t").get<int>();
        rs.h = j.at("h").get<int>();
        rs.size_bound = j.at("size_bound").get<int>();
        rs.context_bound = j.at("context_bound").get<int>();
        for (const auto& mj : j.at("members")) rs.members.push_back(boundaried_from_json(mj));
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("representative set json: ") + e.what());
    }
    for (const BoundariedGraph& m : rs.members) {
        if (boundary_size(m) != rs.t) throw parse_error("representative set json: member boundary size mismatch");
        rs.codes.push_back(boundaried_code(m));
    }
    return rs;
}

namespace detail_bnd {

inline std::string join_ints(const std::vector<int>& xs, char sep) {
    if (xs.empty()) return ".";
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out.push_back(sep);
        out += std::to_string(xs[i]);
    }
    return out;
}

inline std::vector<int> split_ints(const std::string& s, char sep, const char* who) {
    std::vector<int> out;
    if (s == ".") return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        try {
            size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw parse_error(std::string(who) + ": bad integer list entry '" + item + "'");
        }
    }
    return out;
}

}  // namespace detail_bnd

// one row per (I, R) key: the labels of I, the representative, the entry
inline std::string characteristic_to_csv(const Characteristic& chi,
                                         const std::vector<RepresentativeSet>& table) {
    std::string out = "I,rep_graph6,rep_boundary,entry\n";
    for (size_t i = 0; i < chi.keys.size(); ++i) {
        auto [mask, ridx] = chi.keys[i];
        std::vector<int> labels;
        for (int b = 0; b < chi.t; ++b)
            if (mask >> b & 1) labels.push_back(b + 1);
        int t2 = chi.t - static_cast<int>(labels.size());
        if (t2 < 0 || t2 >= static_cast<int>(table.size()) ||
            ridx < 0 || ridx >= static_cast<int>(table[static_cast<size_t>(t2)].members.size()))
            throw std::invalid_argument("characteristic_to_csv: key outside the representative table");
        const BoundariedGraph& rep = table[static_cast<size_t>(t2)].members[static_cast<size_t>(ridx)];
        out += detail_bnd::join_ints(labels, '+');
        out += ',';
        out += to_graph6(rep.g);
        out += ',';
        out += detail_bnd::join_ints(rep.boundary, ';');
        out += ',';
        out += std::to_string(chi.entries[i]);
        out += '\n';
    }
    return out;
}

inline Characteristic characteristic_from_csv(const std::string& text, int k, int h, int t,
                                              const std::vector<RepresentativeSet>& table) {
    Characteristic chi;
    chi.k = k;
    chi.h = h;
    chi.t = t;
    std::stringstream ss(text);
    std::string line;
    if (!std::getline(ss, line) || line != "I,rep_graph6,rep_boundary,entry")
        throw parse_error("characteristic csv: missing header");
    while (std::getline(ss, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cols;
        std::stringstream ls(line);
        std::string col;
        while (std::getline(ls, col, ',')) cols.push_back(col);
        if (cols.size() != 4) throw parse_error("characteristic csv: expected 4 columns");
        std::vector<int> labels = detail_bnd::split_ints(cols[0], '+', "characteristic csv");
        int mask = 0;
        for (int lab : labels) {
            if (lab < 1 || lab > t) throw parse_error("characteristic csv: label out of range");
            mask |= 1 << (lab - 1);
        }
        int t2 = t - static_cast<int>(labels.size());
        if (t2 < 0 || t2 >= static_cast<int>(table.size()))
            throw parse_error("characteristic csv: label set larger than the boundary");
        std::vector<int> bd = detail_bnd::split_ints(cols[2], ';', "characteristic csv");
        int ridx = -1;
        const RepresentativeSet& reps = table[static_cast<size_t>(t2)];
        for (size_t r = 0; r < reps.members.size(); ++r)
            if (to_graph6(reps.members[r].g) == cols[1] && reps.members[r].boundary == bd) {
                ridx = static_cast<int>(r);
                break;
            }
        if (ridx < 0) throw parse_error("characteristic csv: representative not in the table");
        int entry = 0;
        try {
            entry = std::stoi(cols[3]);
        } catch (const std::exception&) {
            throw parse_error("characteristic csv: bad entry value");
        }
        if (entry < 0 || entry > k + 1) throw parse_error("characteristic csv: entry outside 0..k+1");
        chi.keys.emplace_back(mask, ridx);
        chi.entries.push_back(entry);
    }
    return chi;
}

}  // namespace minorkit
