#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "minor.hpp"

namespace minorkit {

// ---- exhaustive isomorphism-free graph generation -----------------------------

namespace detail_enum {

// The canonical deletion edge: the edge whose canonical-position pair is
// lexicographically largest. Well-defined up to automorphism, which is all
// the augmentation test needs.
inline Edge canonical_deletion_edge(const Graph& g) {
    auto res = canonicalize(g);
    Edge best{-1, -1};
    std::pair<int, int> best_pos{-1, -1};
    for (auto [u, v] : g.edges()) {
        int a = res.labeling[static_cast<size_t>(u)], b = res.labeling[static_cast<size_t>(v)];
        std::pair<int, int> pos{std::min(a, b), std::max(a, b)};
        if (pos > best_pos) {
            best_pos = pos;
            best = {u, v};
        }
    }
    return best;
}

inline void augment(const Graph& g, const std::function<void(const Graph&)>& emit) {
    emit(g);
    // one candidate non-edge per automorphism orbit
    std::map<std::vector<std::uint8_t>, Edge> reps;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (!g.has_edge(u, v)) reps.emplace(pair_signature(g, u, v), Edge{u, v});
    for (const auto& [sig, e] : reps) {
        Graph child = g;
        child.add_edge(e.first, e.second);
        // accept the child only when the edge we added plays the role of the
        // child's canonical deletion edge; every class then arrives exactly
        // once, from its canonical parent
        Edge d = canonical_deletion_edge(child);
        if (pair_signature(child, e.first, e.second) == pair_signature(child, d.first, d.second))
            augment(child, emit);
    }
}

}  // namespace detail_enum

// Streams exactly one representative per isomorphism class on n vertices,
// connected or not, in a deterministic order.
inline void enumerate_graphs(int n, const std::function<void(const Graph&)>& emit, int n_limit = 10) {
    if (n < 0) throw std::invalid_argument("enumerate_graphs: negative n");
    if (n > n_limit) throw resource_limit_error("enumerate_graphs: n exceeds the vertex budget");
    detail_enum::augment(Graph(n), emit);
}

inline std::vector<Graph> all_graphs(int n, int n_limit = 10) {
    std::vector<Graph> out;
    enumerate_graphs(n, [&out](const Graph& g) { out.push_back(g); }, n_limit);
    return out;
}

// ---- obstruction sets ----------------------------------------------------------

// Membership verdicts per canonical code. Codes recorded false form the
// blocklist of graphs already known to lie outside the class.
class AkCache {
public:
    const bool* lookup(const std::vector<std::uint8_t>& code) const {
        auto it = verdicts_.find(code);
        return it == verdicts_.end() ? nullptr : &it->second;
    }
    void store(std::vector<std::uint8_t> code, bool verdict) { verdicts_[std::move(code)] = verdict; }

private:
    std::map<std::vector<std::uint8_t>, bool> verdicts_;
};

namespace detail_enum {

inline bool in_class(const Graph& g, const std::vector<Graph>& F, int k, long long budget,
                     MinorCache* mc, AkCache* ac) {
    std::vector<std::uint8_t> code;
    if (ac) {
        code = canonical_code(g);
        if (const bool* v = ac->lookup(code)) return *v;
    }
    bool verdict = is_in_Ak(g, F, k, budget, mc);
    if (ac) ac->store(std::move(code), verdict);
    return verdict;
}

}  // namespace detail_enum

// All graphs reachable by one vertex deletion, edge deletion, or edge
// contraction, deduplicated up to isomorphism.
inline std::vector<Graph> one_step_minors(const Graph& g) {
    std::vector<Graph> out;
    std::set<std::vector<std::uint8_t>> seen;
    auto push = [&](Graph m) {
        auto code = canonical_code(m);
        if (seen.insert(std::move(code)).second) out.push_back(std::move(m));
    };
    for (int v = 0; v < g.vertex_count(); ++v) push(delete_vertex(g, v));
    for (auto [u, v] : g.edges()) {
        push(delete_edge(g, u, v));
        push(contract_edge(g, u, v));
    }
    return out;
}

// Minor-minimal non-membership: g lies outside A_k(excl(F)) while every
// one-step minor lies inside. One-step minors suffice because the class is
// minor-closed.
inline bool is_obstruction(const Graph& g, const std::vector<Graph>& F, int k,
                           long long budget = 50000000, MinorCache* mc = nullptr, AkCache* ac = nullptr) {
    if (detail_enum::in_class(g, F, k, budget, mc, ac)) return false;
    for (const auto& m : one_step_minors(g))
        if (!detail_enum::in_class(m, F, k, budget, mc, ac)) return false;
    return true;
}

struct ObstructionRun {
    std::vector<Graph> family;
    int k = 0;
    int n_max = 0;
    std::vector<Graph> found;          // sorted by (vertex count, canonical code)
    std::map<int, int> counts_per_n;   // obstructions found at each order
    bool complete = true;              // false when any candidate hit a resource limit
    long long skipped_candidates = 0;
};

inline ObstructionRun enumerate_obstructions(const std::vector<Graph>& F, int k, int n_max,
                                             long long budget = 50000000, int n_limit = 10) {
    if (F.empty()) throw std::invalid_argument("enumerate_obstructions: empty family");
    ObstructionRun run;
    run.family = F;
    run.k = k;
    run.n_max = n_max;
    MinorCache mc;
    AkCache ac;
    std::vector<std::pair<std::vector<std::uint8_t>, Graph>> keyed;
    for (int n = 1; n <= n_max; ++n) {
        enumerate_graphs(n, [&](const Graph& g) {
            try {
                if (is_obstruction(g, F, k, budget, &mc, &ac)) keyed.emplace_back(canonical_code(g), g);
            } catch (const resource_limit_error&) {
                ++run.skipped_candidates;
                run.complete = false;
            }
        }, n_limit);
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.second.vertex_count() != b.second.vertex_count())
            return a.second.vertex_count() < b.second.vertex_count();
        return a.first < b.first;
    });
    for (auto& [code, g] : keyed) {
        ++run.counts_per_n[g.vertex_count()];
        run.found.push_back(std::move(g));
    }
    return run;
}

// Does the minimum F-hitting set of g have size exactly k+1?
inline bool verify_hitting_size(const Graph& g, const std::vector<Graph>& F, int k,
                                long long budget = 50000000) {
    return !hitting_set(g, F, k, budget).has_value() && hitting_set(g, F, k + 1, budget).has_value();
}

}  // namespace minorkit
