#pragma once

// Test-only reference oracles, deliberately written as plain exhaustive
// enumerations independent of the library's algorithm paths.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "lclaw/graph.hpp"
#include "lclaw/patterns.hpp"

namespace lclaw::testing {

/// Exhaustive MWIS over all subsets of scope (scope size <= 24).
inline std::int64_t mwis_exhaustive(const Graph& g, const VertexSet& scope, const Weights& w) {
    std::vector<int> verts = scope.to_vector();
    const int k = static_cast<int>(verts.size());
    std::int64_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        std::int64_t weight = 0;
        bool independent = true;
        for (int i = 0; i < k && independent; ++i) {
            if (!(mask >> i & 1)) continue;
            weight += w[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])];
            for (int j = i + 1; j < k; ++j)
                if ((mask >> j & 1) &&
                    g.adjacent(verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(j)]))
                    independent = false;
        }
        if (independent) best = std::max(best, weight);
    }
    return best;
}

/// Exhaustive maximal-independent-set listing over all subsets (size <= 20).
inline std::vector<VertexSet> maximal_is_exhaustive(const Graph& g, const VertexSet& scope) {
    std::vector<int> verts = scope.to_vector();
    const int k = static_cast<int>(verts.size());
    std::vector<VertexSet> out;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        VertexSet s(g.vertex_count());
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1) s.add(verts[static_cast<std::size_t>(i)]);
        if (is_maximal_independent_set(g, scope, s)) out.push_back(std::move(s));
    }
    return out;
}

/// Count of maximal cliques of G[scope] by subset enumeration (size <= 20).
inline std::size_t maximal_clique_count_exhaustive(const Graph& g, const VertexSet& scope) {
    std::vector<int> verts = scope.to_vector();
    const int k = static_cast<int>(verts.size());
    std::size_t count = 0;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        std::vector<int> members;
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1) members.push_back(verts[static_cast<std::size_t>(i)]);
        bool clique = true;
        for (std::size_t i = 0; i < members.size() && clique; ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (!g.adjacent(members[i], members[j])) {
                    clique = false;
                    break;
                }
        if (!clique) continue;
        bool maximal = true;
        for (int v : scope) {
            if (std::find(members.begin(), members.end(), v) != members.end()) continue;
            bool dominates = true;
            for (int m : members)
                if (!g.adjacent(v, m)) {
                    dominates = false;
                    break;
                }
            if (dominates) {
                maximal = false;
                break;
            }
        }
        if (maximal) ++count;
    }
    return count;
}

/// All induced embeddings of every pattern anchored at `anchor`, found by
/// trying every injection, deduplicated by (image, white image).
inline std::set<std::pair<std::vector<int>, std::vector<int>>> embeddings_exhaustive(
    const Graph& g, const VertexSet& scope, int anchor) {
    std::set<std::pair<std::vector<int>, std::vector<int>>> out;
    std::vector<int> verts = scope.to_vector();
    for (const LPattern& p : pattern_catalog()) {
        std::vector<int> map(static_cast<std::size_t>(p.size), -1);
        map[0] = anchor;
        std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
        used[static_cast<std::size_t>(anchor)] = 1;
        std::function<void(int)> rec = [&](int idx) {
            if (idx == p.size) {
                for (int i = 0; i < p.size; ++i)
                    for (int j = i + 1; j < p.size; ++j)
                        if (g.adjacent(map[static_cast<std::size_t>(i)],
                                       map[static_cast<std::size_t>(j)]) != p.adjacent(i, j))
                            return;
                std::vector<int> image, white;
                for (int i = 0; i < p.size; ++i) {
                    image.push_back(map[static_cast<std::size_t>(i)]);
                    if (p.is_white(i)) white.push_back(map[static_cast<std::size_t>(i)]);
                }
                std::sort(image.begin(), image.end());
                std::sort(white.begin(), white.end());
                out.emplace(std::move(image), std::move(white));
                return;
            }
            for (int host : verts) {
                if (used[static_cast<std::size_t>(host)]) continue;
                used[static_cast<std::size_t>(host)] = 1;
                map[static_cast<std::size_t>(idx)] = host;
                rec(idx + 1);
                used[static_cast<std::size_t>(host)] = 0;
            }
        };
        rec(1);
    }
    return out;
}

/// Maximum matching weight by include/exclude over the edge list.
inline std::int64_t matching_exhaustive(int n, const std::vector<std::array<std::int64_t, 3>>& es) {
    std::int64_t best = 0;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t acc) {
        best = std::max(best, acc);
        if (i == es.size()) return;
        rec(i + 1, acc);
        int u = static_cast<int>(es[i][0]);
        int v = static_cast<int>(es[i][1]);
        if (!used[static_cast<std::size_t>(u)] && !used[static_cast<std::size_t>(v)]) {
            used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 1;
            rec(i + 1, acc + es[i][2]);
            used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 0;
        }
    };
    rec(0, 0);
    return best;
}

/// Independent line-graph decision: partition the edges into groups whose
/// spans are cliques, pairwise sharing at most one vertex, with every vertex
/// in at most two groups (edge-indexed backtracking, a different route than
/// the library's vertex-split propagation).
inline bool krausz_partition_exists(const Graph& g) {
    auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    std::vector<VertexSet> spans;
    std::vector<int> group_count(static_cast<std::size_t>(g.vertex_count()), 0);

    std::function<bool(int)> rec = [&](int idx) -> bool {
        if (idx == m) {
            for (std::size_t i = 0; i < spans.size(); ++i)
                for (std::size_t j = i + 1; j < spans.size(); ++j)
                    if ((spans[i] & spans[j]).count() > 1) return false;
            return true;
        }
        auto [u, v] = edges[static_cast<std::size_t>(idx)];
        for (std::size_t gi = 0; gi <= spans.size(); ++gi) {
            bool fresh = gi == spans.size();
            VertexSet span = fresh ? VertexSet(g.vertex_count()) : spans[gi];
            bool ok = true;
            int added_u = !span.contains(u), added_v = !span.contains(v);
            for (int x : span)
                if ((x != u && added_u && !g.adjacent(x, u)) ||
                    (x != v && added_v && !g.adjacent(x, v)))
                    ok = false;
            if (!ok) continue;
            if (added_u && group_count[static_cast<std::size_t>(u)] == 2) continue;
            if (added_v && group_count[static_cast<std::size_t>(v)] == 2) continue;
            span.add(u);
            span.add(v);
            if (fresh)
                spans.push_back(span);
            else
                std::swap(spans[gi], span);
            group_count[static_cast<std::size_t>(u)] += added_u;
            group_count[static_cast<std::size_t>(v)] += added_v;
            if (rec(idx + 1)) return true;
            group_count[static_cast<std::size_t>(u)] -= added_u;
            group_count[static_cast<std::size_t>(v)] -= added_v;
            if (fresh)
                spans.pop_back();
            else
                std::swap(spans[gi], span);
        }
        return false;
    };
    return rec(0);
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

/// K_{1,3} with center 0 and leaves 1..3.
inline Graph claw_graph() {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    return g;
}

/// Claw (0;1,2,3) plus the pendant edge 3-4.
inline Graph chair_graph() {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(3, 4);
    return g;
}

/// Disjoint union placed side by side.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.vertex_count() + b.vertex_count());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.vertex_count() + u, a.vertex_count() + v);
    return g;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) g.add_edge(u, v);
    return g;
}

inline Weights random_weights(std::mt19937_64& rng, int n, std::int64_t lo, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> dist(lo, hi);
    Weights w(static_cast<std::size_t>(n));
    for (auto& x : w) x = dist(rng);
    return w;
}

} // namespace lclaw::testing
