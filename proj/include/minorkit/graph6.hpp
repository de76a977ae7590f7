#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace minorkit {

// graph6 text format. Bytes are printable (63..126); the upper adjacency
// triangle is read column by column: (0,1), (0,2), (1,2), (0,3), ...

namespace detail6 {

inline void append_size(std::string& out, long long n) {
    if (n < 0) throw std::invalid_argument("graph6: negative size");
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else if (n <= 68719476735LL) {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        throw std::invalid_argument("graph6: size too large");
    }
}

inline int read_byte(std::string_view s, size_t& pos) {
    if (pos >= s.size()) throw parse_error("graph6: truncated input");
    int c = static_cast<unsigned char>(s[pos++]);
    if (c < 63 || c > 126) throw parse_error("graph6: byte out of range at position " + std::to_string(pos - 1));
    return c - 63;
}

inline long long read_size(std::string_view s, size_t& pos) {
    int c = read_byte(s, pos);
    if (c != 63) return c;
    // 126 encodes as 63 after offset removal
    size_t mark = pos;
    int c2 = read_byte(s, pos);
    if (c2 == 63) {
        long long n = 0;
        for (int i = 0; i < 6; ++i) n = (n << 6) | read_byte(s, pos);
        return n;
    }
    pos = mark;
    long long n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | read_byte(s, pos);
    return n;
}

}  // namespace detail6

inline std::string to_graph6(const Graph& g) {
    std::string out;
    long long n = g.vertex_count();
    detail6::append_size(out, n);
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph from_graph6(std::string_view s) {
    // optional format header
    constexpr std::string_view header = ">>graph6<<";
    if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    if (s.empty()) throw parse_error("graph6: empty input");
    size_t pos = 0;
    long long n = detail6::read_size(s, pos);
    if (n > 1000000) throw parse_error("graph6: size implausibly large");
    Graph g(static_cast<int>(n));
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (nbits == 0) {
                acc = detail6::read_byte(s, pos);
                nbits = 6;
            }
            if (acc & (1 << (nbits - 1))) g.add_edge(u, v);
            --nbits;
        }
    if (pos != s.size()) throw parse_error("graph6: trailing bytes");
    return g;
}

}  // namespace minorkit
