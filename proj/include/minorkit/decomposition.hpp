#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace minorkit {

// Bags are sorted vertex lists indexed by tree node. root == -1 means the
// decomposition is unrooted.
struct TreeDecomposition {
    Graph tree;
    std::vector<std::vector<int>> bags;
    int root = -1;
};

struct Verdict {
    bool ok = true;
    std::string detail;
};

inline int width(const TreeDecomposition& td) {
    int best = -1;
    for (const auto& b : td.bags) best = std::max(best, static_cast<int>(b.size()) - 1);
    return best;
}

inline Verdict validate(const TreeDecomposition& td, const Graph& g) {
    int nodes = td.tree.vertex_count();
    if (static_cast<int>(td.bags.size()) != nodes)
        return {false, "bag list does not match the tree node count"};
    if (nodes == 0) {
        if (g.vertex_count() == 0) return {true, ""};
        return {false, "empty tree cannot cover a nonempty graph"};
    }
    if (td.tree.edge_count() != nodes - 1 || !is_connected(td.tree))
        return {false, "decomposition tree is not a tree"};
    if (td.root != -1 && !td.tree.has_vertex(td.root)) return {false, "root is not a tree node"};

    std::vector<char> covered(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& b : td.bags)
        for (int v : b) {
            if (!g.has_vertex(v)) return {false, "bag contains a vertex outside the graph"};
            covered[static_cast<std::size_t>(v)] = 1;
        }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!covered[static_cast<std::size_t>(v)])
            return {false, "vertex " + std::to_string(v) + " is in no bag"};

    for (const Edge& e : g.edges()) {
        bool inside = false;
        for (const auto& b : td.bags) {
            if (std::binary_search(b.begin(), b.end(), e.first) &&
                std::binary_search(b.begin(), b.end(), e.second)) {
                inside = true;
                break;
            }
        }
        if (!inside)
            return {false, "edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                               "} is in no bag"};
    }

    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> holders;
        for (int t = 0; t < nodes; ++t)
            if (std::binary_search(td.bags[static_cast<std::size_t>(t)].begin(),
                                   td.bags[static_cast<std::size_t>(t)].end(), v))
                holders.push_back(t);
        if (!is_connected_set(td.tree, holders))
            return {false, "bag nodes of vertex " + std::to_string(v) + " are not connected"};
    }
    return {true, ""};
}

// Rooted decomposition of a boundaried graph: the root bag is exactly the
// boundary.
inline Verdict validate_boundaried(const TreeDecomposition& td, const Graph& g,
                                   std::vector<int> boundary) {
    Verdict base = validate(td, g);
    if (!base.ok) return base;
    if (td.root == -1) return {false, "boundaried decomposition needs a root"};
    std::sort(boundary.begin(), boundary.end());
    if (td.bags[static_cast<std::size_t>(td.root)] != boundary)
        return {false, "root bag differs from the boundary"};
    return {true, ""};
}

namespace detail_td {

// Vertices of V \ (S + {v}) seen from v through paths internal to S. This is
// the bag v would get when eliminated right after the set S.
inline int fill_degree(const Graph& g, unsigned mask, int v) {
    int n = g.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{v};
    seen[static_cast<std::size_t>(v)] = 1;
    int outside = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u)) {
            if (seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = 1;
            if (mask & (1u << w))
                stack.push_back(w);
            else
                ++outside;
        }
    }
    return outside;
}

inline std::vector<int> subset_dp(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> dp(static_cast<std::size_t>(1) << n, 0);
    dp[0] = -1;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        int best = std::numeric_limits<int>::max();
        for (int v = 0; v < n; ++v) {
            if (!(mask & (1u << v))) continue;
            unsigned rest = mask & ~(1u << v);
            best = std::min(best, std::max(dp[rest], fill_degree(g, rest, v)));
        }
        dp[mask] = best;
    }
    return dp;
}

}  // namespace detail_td

inline int treewidth_exact(const Graph& g) {
    int n = g.vertex_count();
    if (n > 14) throw resource_limit_error("exact treewidth handles at most 14 vertices");
    if (n == 0) return -1;
    auto dp = detail_td::subset_dp(g);
    return dp[(static_cast<std::size_t>(1) << n) - 1];
}

// Elimination order realizing the exact treewidth, first-eliminated first.
inline std::vector<int> optimal_elimination_order(const Graph& g) {
    int n = g.vertex_count();
    if (n > 14) throw resource_limit_error("exact treewidth handles at most 14 vertices");
    auto dp = detail_td::subset_dp(g);
    std::vector<int> order;
    unsigned mask = (n == 0 ? 0u : (1u << n) - 1);
    while (mask) {
        for (int v = 0; v < n; ++v) {
            if (!(mask & (1u << v))) continue;
            unsigned rest = mask & ~(1u << v);
            if (std::max(dp[rest], detail_td::fill_degree(g, rest, v)) == dp[mask]) {
                order.push_back(v);
                mask = rest;
                break;
            }
        }
    }
    std::reverse(order.begin(), order.end());
    return order;
}

// Standard elimination construction: the bag of v is v plus its neighborhood
// in the fill graph at elimination time; v's node hangs under the node of the
// first later-eliminated bag member.
inline TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<int>& order) {
    int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("elimination order must list every vertex once");
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        int v = order[static_cast<std::size_t>(i)];
        if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] != -1)
            throw std::invalid_argument("elimination order must list every vertex once");
        pos[static_cast<std::size_t>(v)] = i;
    }

    TreeDecomposition td;
    if (n == 0) return td;
    std::vector<std::set<int>> nb(static_cast<std::size_t>(n));
    for (const Edge& e : g.edges()) {
        nb[static_cast<std::size_t>(e.first)].insert(e.second);
        nb[static_cast<std::size_t>(e.second)].insert(e.first);
    }
    for (int i = 0; i < n; ++i) td.tree.add_vertex();
    for (int i = 0; i < n; ++i) {
        int v = order[static_cast<std::size_t>(i)];
        std::vector<int> bag{v};
        for (int w : nb[static_cast<std::size_t>(v)]) bag.push_back(w);
        std::sort(bag.begin(), bag.end());
        td.bags.push_back(bag);

        int attach = -1;
        for (int w : nb[static_cast<std::size_t>(v)])
            if (attach == -1 || pos[static_cast<std::size_t>(w)] < pos[static_cast<std::size_t>(attach)])
                attach = w;
        if (attach != -1)
            td.tree.add_edge(i, pos[static_cast<std::size_t>(attach)]);
        else if (i + 1 < n)
            td.tree.add_edge(i, i + 1);

        for (int a : nb[static_cast<std::size_t>(v)])
            for (int b : nb[static_cast<std::size_t>(v)])
                if (a < b) {
                    nb[static_cast<std::size_t>(a)].insert(b);
                    nb[static_cast<std::size_t>(b)].insert(a);
                }
        for (int w : nb[static_cast<std::size_t>(v)]) nb[static_cast<std::size_t>(w)].erase(v);
        nb[static_cast<std::size_t>(v)].clear();
    }
    td.root = n - 1;
    return td;
}

namespace detail_td {

inline std::vector<int> parents_from_root(const Graph& tree, int root) {
    std::vector<int> parent(static_cast<std::size_t>(tree.vertex_count()), -2);
    std::queue<int> q;
    q.push(root);
    parent[static_cast<std::size_t>(root)] = -1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : tree.neighbors(u))
            if (parent[static_cast<std::size_t>(w)] == -2) {
                parent[static_cast<std::size_t>(w)] = u;
                q.push(w);
            }
    }
    return parent;
}

}  // namespace detail_td

// Splits nodes with more than two children by chaining copies of their bag,
// one child shed per copy. Width and validity are preserved.
inline TreeDecomposition make_binary_rooted(const TreeDecomposition& td, int root) {
    if (!td.tree.has_vertex(root)) throw std::invalid_argument("root is not a tree node");
    TreeDecomposition out = td;
    out.root = root;
    std::vector<int> work;
    for (int v = 0; v < out.tree.vertex_count(); ++v) work.push_back(v);
    while (!work.empty()) {
        int u = work.back();
        work.pop_back();
        auto parent = detail_td::parents_from_root(out.tree, out.root);
        std::vector<int> kids;
        for (int w : out.tree.neighbors(u))
            if (parent[static_cast<std::size_t>(w)] == u) kids.push_back(w);
        if (static_cast<int>(kids.size()) <= 2) continue;
        int copy = out.tree.add_vertex();
        out.bags.push_back(out.bags[static_cast<std::size_t>(u)]);
        for (std::size_t i = 1; i < kids.size(); ++i) {
            out.tree.remove_edge(u, kids[i]);
            out.tree.add_edge(copy, kids[i]);
        }
        out.tree.add_edge(u, copy);
        work.push_back(copy);
    }
    return out;
}

// Contracts any node whose bag is contained in a neighbor's bag.
inline TreeDecomposition prune_subsumed_bags(const TreeDecomposition& td) {
    TreeDecomposition cur = td;
    bool again = true;
    while (again && cur.tree.vertex_count() > 1) {
        again = false;
        for (const Edge& e : cur.tree.edges()) {
            int a = e.first, b = e.second;
            const auto& ba = cur.bags[static_cast<std::size_t>(a)];
            const auto& bb = cur.bags[static_cast<std::size_t>(b)];
            int gone, keep;
            if (std::includes(bb.begin(), bb.end(), ba.begin(), ba.end())) {
                gone = a;
                keep = b;
            } else if (std::includes(ba.begin(), ba.end(), bb.begin(), bb.end())) {
                gone = b;
                keep = a;
            } else {
                continue;
            }
            TreeDecomposition next;
            std::vector<int> remap(static_cast<std::size_t>(cur.tree.vertex_count()), -1);
            for (int v = 0; v < cur.tree.vertex_count(); ++v)
                if (v != gone) {
                    remap[static_cast<std::size_t>(v)] = next.tree.add_vertex();
                    next.bags.push_back(cur.bags[static_cast<std::size_t>(v)]);
                }
            auto target = [&](int v) { return remap[static_cast<std::size_t>(v == gone ? keep : v)]; };
            for (const Edge& te : cur.tree.edges()) {
                int x = target(te.first), y = target(te.second);
                if (x != y && !next.tree.has_edge(x, y)) next.tree.add_edge(x, y);
            }
            next.root = cur.root == -1 ? -1 : target(cur.root);
            cur = next;
            again = true;
            break;
        }
    }
    return cur;
}

namespace detail_flow {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

// Unit-vertex-capacity network over a split digraph: only in->out arcs carry
// capacity one, so max flow counts vertex-disjoint paths and the min cut is a
// vertex set.
struct SplitNetwork {
    int n = 0;
    int source = 0;
    int sink = 0;
    std::vector<std::vector<int>> adj;
    std::vector<int> to;
    std::vector<int> cap;

    void add_arc(int u, int v, int c) {
        adj[static_cast<std::size_t>(u)].push_back(static_cast<int>(to.size()));
        to.push_back(v);
        cap.push_back(c);
        adj[static_cast<std::size_t>(v)].push_back(static_cast<int>(to.size()));
        to.push_back(u);
        cap.push_back(0);
    }

    bool augment_unit() {
        std::vector<int> via(static_cast<std::size_t>(n), -1);
        std::queue<int> q;
        q.push(source);
        via[static_cast<std::size_t>(source)] = -2;
        while (!q.empty() && via[static_cast<std::size_t>(sink)] == -1) {
            int u = q.front();
            q.pop();
            for (int a : adj[static_cast<std::size_t>(u)]) {
                int w = to[static_cast<std::size_t>(a)];
                if (cap[static_cast<std::size_t>(a)] > 0 && via[static_cast<std::size_t>(w)] == -1) {
                    via[static_cast<std::size_t>(w)] = a;
                    q.push(w);
                }
            }
        }
        if (via[static_cast<std::size_t>(sink)] == -1) return false;
        int u = sink;
        while (u != source) {
            int a = via[static_cast<std::size_t>(u)];
            cap[static_cast<std::size_t>(a)] -= 1;
            cap[static_cast<std::size_t>(a ^ 1)] += 1;
            u = to[static_cast<std::size_t>(a ^ 1)];
        }
        return true;
    }

    std::vector<char> residual_reach() const {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<int> stack{source};
        seen[static_cast<std::size_t>(source)] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int a : adj[static_cast<std::size_t>(u)]) {
                int w = to[static_cast<std::size_t>(a)];
                if (cap[static_cast<std::size_t>(a)] > 0 && !seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        return seen;
    }
};

inline SplitNetwork build_split(const Graph& g, const std::set<int>& xs, const std::set<int>& ys) {
    SplitNetwork net;
    int n = g.vertex_count();
    net.n = 2 * n + 2;
    net.source = 2 * n;
    net.sink = 2 * n + 1;
    net.adj.assign(static_cast<std::size_t>(net.n), {});
    for (int v = 0; v < n; ++v) net.add_arc(2 * v, 2 * v + 1, 1);
    for (const Edge& e : g.edges()) {
        net.add_arc(2 * e.first + 1, 2 * e.second, kInf);
        net.add_arc(2 * e.second + 1, 2 * e.first, kInf);
    }
    for (int x : xs) net.add_arc(net.source, 2 * x, kInf);
    for (int y : ys) net.add_arc(2 * y + 1, net.sink, kInf);
    return net;
}

}  // namespace detail_flow

// Maximum number of fully vertex-disjoint X-Y paths, capped at `limit`.
inline int disjoint_path_count(const Graph& g, const std::vector<int>& X,
                               const std::vector<int>& Y, int limit) {
    for (int v : X)
        if (!g.has_vertex(v)) throw std::invalid_argument("X contains a non-vertex");
    for (int v : Y)
        if (!g.has_vertex(v)) throw std::invalid_argument("Y contains a non-vertex");
    if (limit <= 0) return 0;
    std::set<int> xs(X.begin(), X.end()), ys(Y.begin(), Y.end());
    auto net = detail_flow::build_split(g, xs, ys);
    int flow = 0;
    while (flow < limit && net.augment_unit()) ++flow;
    return flow;
}

// Either s fully vertex-disjoint X-Y paths (each listed from its X endpoint)
// or nothing. Single vertices of X ∩ Y count as zero-length paths.
inline std::optional<std::vector<std::vector<int>>> disjoint_paths(const Graph& g,
                                                                   const std::vector<int>& X,
                                                                   const std::vector<int>& Y,
                                                                   int s) {
    for (int v : X)
        if (!g.has_vertex(v)) throw std::invalid_argument("X contains a non-vertex");
    for (int v : Y)
        if (!g.has_vertex(v)) throw std::invalid_argument("Y contains a non-vertex");
    if (s < 0) throw std::invalid_argument("path count must be nonnegative");
    if (s == 0) return std::vector<std::vector<int>>{};
    std::set<int> xs(X.begin(), X.end()), ys(Y.begin(), Y.end());
    auto net = detail_flow::build_split(g, xs, ys);
    int flow = 0;
    while (flow < s && net.augment_unit()) ++flow;
    if (flow < s) return std::nullopt;

    // used[a] for forward arcs: one unit pushed through.
    std::vector<int> used(net.to.size(), 0);
    auto orig = [&](std::size_t a) { return a % 2 == 0; };
    for (std::size_t a = 0; a < net.to.size(); ++a)
        if (orig(a)) {
            int full = (net.cap[a] + net.cap[a ^ 1] == detail_flow::kInf) ? detail_flow::kInf : 1;
            used[a] = full - net.cap[a];
        }
    std::vector<std::vector<int>> paths;
    for (int a : net.adj[static_cast<std::size_t>(net.source)]) {
        if (!orig(static_cast<std::size_t>(a)) || used[static_cast<std::size_t>(a)] <= 0) continue;
        used[static_cast<std::size_t>(a)] -= 1;
        int cur = net.to[static_cast<std::size_t>(a)];  // some x_in
        std::vector<int> path;
        while (cur != net.sink) {
            if (cur % 2 == 0) path.push_back(cur / 2);
            bool moved = false;
            for (int b : net.adj[static_cast<std::size_t>(cur)]) {
                if (!orig(static_cast<std::size_t>(b)) || used[static_cast<std::size_t>(b)] <= 0)
                    continue;
                used[static_cast<std::size_t>(b)] -= 1;
                cur = net.to[static_cast<std::size_t>(b)];
                moved = true;
                break;
            }
            if (!moved) throw construction_bug("flow decomposition lost conservation");
        }
        paths.push_back(path);
        if (static_cast<int>(paths.size()) == s) break;
    }
    if (static_cast<int>(paths.size()) != s)
        throw construction_bug("flow decomposition produced too few paths");

    std::set<int> touched;
    for (const auto& p : paths) {
        if (p.empty() || !xs.count(p.front()) || !ys.count(p.back()))
            throw construction_bug("extracted path has wrong endpoints");
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (!g.has_edge(p[i], p[i + 1]))
                throw construction_bug("extracted path uses a non-edge");
        for (int v : p) {
            if (touched.count(v)) throw construction_bug("extracted paths share a vertex");
            touched.insert(v);
        }
    }
    return paths;
}

struct LinkedCheck {
    bool ok = true;
    int ancestor = -1;
    int descendant = -1;
    int s = 0;
    std::string detail;
};

// Property: for every ancestor pair with equal bag sizes and every s up to
// s_max, either some internal node of the tree path has a bag smaller than s,
// or s vertex-disjoint paths join the two bags. Values of s beyond the bag
// size are never realizable by disjoint paths, so the effective range is
// s <= min(s_max, |bag|, smallest internal bag).
inline LinkedCheck check_linked(const TreeDecomposition& td, const Graph& g, int s_max,
                                std::size_t budget = 1000000) {
    if (td.root == -1) throw std::invalid_argument("linkedness needs a rooted decomposition");
    Verdict v = validate(td, g);
    if (!v.ok) throw std::invalid_argument("linkedness needs a valid decomposition: " + v.detail);
    auto parent = detail_td::parents_from_root(td.tree, td.root);

    std::map<std::pair<std::vector<int>, std::vector<int>>, int> flow_memo;
    for (int u2 = 0; u2 < td.tree.vertex_count(); ++u2) {
        int q2 = static_cast<int>(td.bags[static_cast<std::size_t>(u2)].size());
        int min_internal = std::numeric_limits<int>::max();
        int cur = u2;
        while (parent[static_cast<std::size_t>(cur)] != -1) {
            int u1 = parent[static_cast<std::size_t>(cur)];
            if (cur != u2)
                min_internal =
                    std::min(min_internal,
                             static_cast<int>(td.bags[static_cast<std::size_t>(cur)].size()));
            cur = u1;
            if (static_cast<int>(td.bags[static_cast<std::size_t>(u1)].size()) != q2) continue;
            int bound = std::min({s_max, q2, min_internal});
            if (bound <= 0) continue;
            if (budget == 0) throw resource_limit_error("linkedness check budget exhausted");
            --budget;
            auto key = std::make_pair(td.bags[static_cast<std::size_t>(u1)],
                                      td.bags[static_cast<std::size_t>(u2)]);
            if (key.first > key.second) std::swap(key.first, key.second);
            auto it = flow_memo.find(key);
            int have;
            if (it != flow_memo.end() && it->second >= bound) {
                have = it->second;
            } else {
                have = disjoint_path_count(g, key.first, key.second, std::min(s_max, q2));
                flow_memo[key] = have;
            }
            if (have < bound) {
                LinkedCheck bad;
                bad.ok = false;
                bad.ancestor = u1;
                bad.descendant = u2;
                bad.s = have + 1;
                bad.detail = "only " + std::to_string(have) + " disjoint paths between bags " +
                             std::to_string(u1) + " and " + std::to_string(u2) + ", s = " +
                             std::to_string(have + 1) + " needs an internal bag below it";
                return bad;
            }
        }
    }
    return {};
}

// Best-effort local repair: shrink the internal bags of a violating tree path
// toward a minimum vertex cut. Keeps a change only if the decomposition stays
// valid and no wider; stops on the first stall.
inline TreeDecomposition improve_linked(const TreeDecomposition& td, const Graph& g, int s_max,
                                        int rounds = 8) {
    TreeDecomposition cur = td;
    for (int round = 0; round < rounds; ++round) {
        LinkedCheck chk = check_linked(cur, g, s_max);
        if (chk.ok) return cur;

        const auto& X = cur.bags[static_cast<std::size_t>(chk.ancestor)];
        const auto& Y = cur.bags[static_cast<std::size_t>(chk.descendant)];
        std::set<int> xs(X.begin(), X.end()), ys(Y.begin(), Y.end());
        auto net = detail_flow::build_split(g, xs, ys);
        while (net.augment_unit()) {
        }
        auto reach = net.residual_reach();
        std::vector<int> cut;
        for (int u = 0; u < g.vertex_count(); ++u)
            if (reach[static_cast<std::size_t>(2 * u)] && !reach[static_cast<std::size_t>(2 * u + 1)])
                cut.push_back(u);

        std::set<int> side(cut.begin(), cut.end());
        {
            std::vector<int> stack;
            for (int x : xs)
                if (!side.count(x)) {
                    stack.push_back(x);
                    side.insert(x);
                }
            std::set<int> cutset(cut.begin(), cut.end());
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                if (cutset.count(u)) continue;
                for (int w : g.neighbors(u))
                    if (!side.count(w)) {
                        side.insert(w);
                        if (!cutset.count(w)) stack.push_back(w);
                    }
            }
        }

        auto parent = detail_td::parents_from_root(cur.tree, cur.root);
        TreeDecomposition next = cur;
        bool changed = false;
        for (int w = parent[static_cast<std::size_t>(chk.descendant)]; w != chk.ancestor;
             w = parent[static_cast<std::size_t>(w)]) {
            std::set<int> nb;
            for (int x : cur.bags[static_cast<std::size_t>(w)])
                if (side.count(x)) nb.insert(x);
            for (int x : cut) nb.insert(x);
            std::vector<int> nbag(nb.begin(), nb.end());
            if (nbag != next.bags[static_cast<std::size_t>(w)]) changed = true;
            next.bags[static_cast<std::size_t>(w)] = nbag;
        }
        if (!changed) return cur;
        if (!validate(next, g).ok || width(next) > width(cur)) return cur;
        cur = next;
    }
    return cur;
}

// Descendant bag unions must strictly shrink whenever a child keeps its
// parent's bag size.
inline Verdict check_proper_growth(const TreeDecomposition& td, const Graph& g) {
    if (td.root == -1) throw std::invalid_argument("growth check needs a rooted decomposition");
    Verdict v = validate(td, g);
    if (!v.ok) return v;
    int nodes = td.tree.vertex_count();
    auto parent = detail_td::parents_from_root(td.tree, td.root);

    // Union of bags over each rooted subtree, by processing deepest-first.
    std::vector<std::set<int>> covered(static_cast<std::size_t>(nodes));
    std::vector<int> order;
    {
        std::vector<int> stack{td.root};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            order.push_back(u);
            for (int w : td.tree.neighbors(u))
                if (parent[static_cast<std::size_t>(w)] == u) stack.push_back(w);
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int u = *it;
        covered[static_cast<std::size_t>(u)].insert(td.bags[static_cast<std::size_t>(u)].begin(),
                                                    td.bags[static_cast<std::size_t>(u)].end());
        for (int w : td.tree.neighbors(u))
            if (parent[static_cast<std::size_t>(w)] == u)
                covered[static_cast<std::size_t>(u)].insert(
                    covered[static_cast<std::size_t>(w)].begin(),
                    covered[static_cast<std::size_t>(w)].end());
    }
    for (int a = 0; a < nodes; ++a) {
        int b = parent[static_cast<std::size_t>(a)];
        if (b == -1) continue;
        if (td.bags[static_cast<std::size_t>(a)].size() != td.bags[static_cast<std::size_t>(b)].size())
            continue;
        if (covered[static_cast<std::size_t>(a)].size() >= covered[static_cast<std::size_t>(b)].size())
            return {false, "child " + std::to_string(a) + " keeps the bag size of " +
                               std::to_string(b) + " without shrinking its subtree graph"};
    }
    return {true, ""};
}

// |V(G)| <= (width+1) * |V(T)|; follows from coverage for any valid
// decomposition, kept as an explicit post-transform check.
inline Verdict check_size_bound(const TreeDecomposition& td, const Graph& g) {
    long long t = width(td) + 1;
    long long nodes = td.tree.vertex_count();
    if (g.vertex_count() > t * nodes)
        return {false, "graph exceeds bag capacity of the tree"};
    return {true, ""};
}

// s-line header, one b-line per bag, then tree edges; vertices and bag ids
// are one-based in the file.
inline std::string td_to_string(const TreeDecomposition& td, int n_vertices = -1) {
    if (n_vertices < 0) {
        n_vertices = 0;
        for (const auto& b : td.bags)
            for (int v : b) n_vertices = std::max(n_vertices, v + 1);
    }
    std::ostringstream out;
    int maxbag = 0;
    for (const auto& b : td.bags) maxbag = std::max(maxbag, static_cast<int>(b.size()));
    out << "s td " << td.bags.size() << " " << maxbag << " " << n_vertices << "\n";
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << i + 1;
        for (int v : td.bags[i]) out << " " << v + 1;
        out << "\n";
    }
    for (const Edge& e : td.tree.edges()) out << e.first + 1 << " " << e.second + 1 << "\n";
    return out.str();
}

inline TreeDecomposition td_from_string(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    bool header = false;
    int nbags = 0, maxbag = 0, nverts = 0;
    TreeDecomposition td;
    std::vector<char> seen_bag;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (line[0] == 's') {
            std::string s, kind;
            if (header) throw parse_error("duplicate s-line");
            if (!(ls >> s >> kind >> nbags >> maxbag >> nverts) || kind != "td")
                throw parse_error("malformed s-line");
            if (nbags < 0 || maxbag < 0 || nverts < 0) throw parse_error("negative s-line field");
            header = true;
            td.bags.assign(static_cast<std::size_t>(nbags), {});
            seen_bag.assign(static_cast<std::size_t>(nbags), 0);
            for (int i = 0; i < nbags; ++i) td.tree.add_vertex();
            continue;
        }
        if (!header) throw parse_error("content before the s-line");
        if (line[0] == 'b') {
            char b;
            int id;
            ls >> b;
            if (!(ls >> id) || id < 1 || id > nbags) throw parse_error("bag id out of range");
            if (seen_bag[static_cast<std::size_t>(id - 1)]) throw parse_error("duplicate bag line");
            seen_bag[static_cast<std::size_t>(id - 1)] = 1;
            int v;
            std::vector<int> bag;
            while (ls >> v) {
                if (v < 1 || v > nverts) throw parse_error("bag vertex out of range");
                bag.push_back(v - 1);
            }
            std::sort(bag.begin(), bag.end());
            bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
            if (static_cast<int>(bag.size()) > maxbag)
                throw parse_error("bag larger than the declared maximum");
            td.bags[static_cast<std::size_t>(id - 1)] = bag;
            continue;
        }
        int a, b;
        std::istringstream es(line);
        if (!(es >> a >> b) || a < 1 || a > nbags || b < 1 || b > nbags || a == b)
            throw parse_error("malformed tree edge");
        if (!td.tree.add_edge(a - 1, b - 1)) throw parse_error("duplicate tree edge");
    }
    if (!header) throw parse_error("missing s-line");
    for (int i = 0; i < nbags; ++i)
        if (!seen_bag[static_cast<std::size_t>(i)]) throw parse_error("missing bag line");
    return td;
}

struct SubwordWitness {
    int k = 0;
    std::size_t lo = 0;
    std::size_t hi = 0;
};

// In any word of length m^r over {1..r} some contiguous span uses only
// letters >= k and repeats k at least m times. The recursion follows the
// counting proof: too few k's split the span into at most m blocks, the
// longest of which is long enough for the next letter up.
inline SubwordWitness pigeonhole_subword(const std::vector<int>& w, int r, int m) {
    if (r < 1 || m < 1) throw std::invalid_argument("alphabet size and multiplicity must be positive");
    for (int x : w)
        if (x < 1 || x > r) throw std::invalid_argument("letter outside the alphabet");
    long long need = 1;
    for (int i = 0; i < r; ++i) {
        if (need > static_cast<long long>(w.size())) break;
        need *= m;
    }
    if (static_cast<long long>(w.size()) < need)
        throw std::invalid_argument("word shorter than m^r");

    std::size_t lo = 0, hi = w.size() - 1;
    for (int b = 1;; ++b) {
        if (b == r) {
            SubwordWitness out{b, lo, hi};
            return out;
        }
        std::size_t count = 0;
        for (std::size_t i = lo; i <= hi; ++i)
            if (w[i] == b) ++count;
        if (count >= static_cast<std::size_t>(m)) return {b, lo, hi};
        std::size_t best_lo = lo, best_len = 0;
        std::size_t run_lo = lo, run_len = 0;
        for (std::size_t i = lo; i <= hi + 1; ++i) {
            if (i <= hi && w[i] != b) {
                if (run_len == 0) run_lo = i;
                ++run_len;
            } else {
                if (run_len > best_len) {
                    best_len = run_len;
                    best_lo = run_lo;
                }
                run_len = 0;
            }
        }
        if (best_len == 0) throw construction_bug("pigeonhole block vanished");
        lo = best_lo;
        hi = best_lo + best_len - 1;
    }
}

}  // namespace minorkit
