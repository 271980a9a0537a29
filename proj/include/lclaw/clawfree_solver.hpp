#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lclaw/graph.hpp"
#include "lclaw/vertex_set.hpp"

namespace lclaw {

/// An independent set together with its total weight.
struct Solution {
    VertexSet set;
    std::int64_t weight = 0;
};

/// Root graph recovered for a line-graph component: root edge (a, b)
/// realizes input vertex g_vertex, i.e. L(root) is isomorphic to the
/// component via this correspondence.
struct RootGraph {
    int vertex_count = 0;
    struct EdgeImage {
        int a = 0;
        int b = 0;
        int g_vertex = 0;
    };
    std::vector<EdgeImage> edges;
};

/// If G[scope] (connected, nonempty) is a line graph, reconstructs a root
/// graph via Krausz clique partitions; otherwise nullopt. The returned root
/// is always verified against the input before being reported, so a wrong
/// root is never returned. The triangle's two roots are disambiguated by a
/// fixed canonical choice (K_{1,3}).
std::optional<RootGraph> line_graph_root(const Graph& g, const VertexSet& scope);

/// Exact MWIS with no class assumptions: plain exhaustive branching, no
/// bounds. The reference oracle; guarded to |scope| <= 34.
Solution mwis_bruteforce(const Graph& g, const VertexSet& scope, const Weights& w);

/// Exact MWIS by branch and bound: greedy clique-cover upper bounds,
/// highest-degree branching. No class assumptions.
Solution mwis_branch_and_bound(const Graph& g, const VertexSet& scope, const Weights& w);

enum class ClawfreeSolver {
    Auto,           ///< components -> matching fast path, else branch and bound
    Matching,       ///< require the line-graph/matching path; error otherwise
    BranchAndBound, ///< skip the matching path
    Brute,          ///< exhaustive reference search
};

/// Exact MWIS of G[scope]. Intended for claw-free scopes (verified under
/// paranoid checks), but the fallback path is class-agnostic, so the result
/// is exact for arbitrary inputs. Ladder: drop nonpositive weights, split
/// into components, recover a line-graph root and solve by maximum-weight
/// matching where possible, branch and bound otherwise.
Solution mwis_clawfree(const Graph& g, const VertexSet& scope, const Weights& w,
                       ClawfreeSolver solver = ClawfreeSolver::Auto);

} // namespace lclaw
