#include "lclaw/clawfree_solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "lclaw/config.hpp"
#include "lclaw/matching.hpp"

namespace lclaw {

namespace {

int max_degree_vertex(const Graph& g, const VertexSet& scope, int& degree_out) {
    int best = -1, best_deg = -1;
    for (int v : scope) {
        int d = (g.neighbors(v) & scope).count();
        if (d > best_deg) {
            best_deg = d;
            best = v;
        }
    }
    degree_out = best_deg;
    return best;
}

Solution brute_rec(const Graph& g, VertexSet scope, const Weights& w) {
    int deg = -1;
    int v = max_degree_vertex(g, scope, deg);
    if (v == -1) return Solution{VertexSet(g.vertex_count()), 0};
    if (deg == 0) {
        // Only isolated vertices remain: take the positive ones.
        Solution s{VertexSet(g.vertex_count()), 0};
        for (int u : scope)
            if (w[static_cast<std::size_t>(u)] > 0) {
                s.set.add(u);
                s.weight += w[static_cast<std::size_t>(u)];
            }
        return s;
    }
    VertexSet without = scope;
    without.remove(v);
    Solution exclude = brute_rec(g, without, w);
    VertexSet rest = without;
    rest -= g.neighbors(v);
    Solution include = brute_rec(g, std::move(rest), w);
    include.set.add(v);
    include.weight += w[static_cast<std::size_t>(v)];
    return include.weight > exclude.weight ? include : exclude;
}

} // namespace

Solution mwis_bruteforce(const Graph& g, const VertexSet& scope, const Weights& w) {
    if (scope.count() > 34)
        throw std::invalid_argument("mwis_bruteforce: scope exceeds the size guard (34 vertices)");
    Solution s = brute_rec(g, scope, w);
    // The empty set is always available.
    if (s.weight < 0) return Solution{VertexSet(g.vertex_count()), 0};
    return s;
}

namespace {

// Greedy clique cover bound: at most one vertex per clique can enter an
// independent set, so summing each clique's maximum weight bounds the
// optimum. Vertices are processed by descending weight.
std::int64_t clique_cover_bound(const Graph& g, const VertexSet& scope, const Weights& w) {
    std::vector<int> verts = scope.to_vector();
    std::sort(verts.begin(), verts.end(), [&](int a, int b) {
        auto wa = w[static_cast<std::size_t>(a)], wb = w[static_cast<std::size_t>(b)];
        return wa != wb ? wa > wb : a < b;
    });
    std::vector<VertexSet> cliques;
    std::int64_t bound = 0;
    for (int v : verts) {
        bool placed = false;
        for (auto& q : cliques) {
            if (q.subset_of(g.neighbors(v))) {
                q.add(v);
                placed = true;
                break;
            }
        }
        if (!placed) {
            VertexSet q(g.vertex_count());
            q.add(v);
            cliques.push_back(std::move(q));
            bound += w[static_cast<std::size_t>(v)]; // first member has the clique's max weight
        }
    }
    return bound;
}

struct BnB {
    const Graph& g;
    const Weights& w;
    Solution best;

    void search(const VertexSet& scope, const VertexSet& chosen, std::int64_t weight) {
        if (weight > best.weight) best = Solution{chosen, weight};
        if (scope.empty()) return;
        if (weight + clique_cover_bound(g, scope, w) <= best.weight) return;
        int deg = -1;
        int v = max_degree_vertex(g, scope, deg);
        VertexSet include_scope = scope;
        include_scope.remove(v);
        include_scope -= g.neighbors(v);
        VertexSet include_chosen = chosen;
        include_chosen.add(v);
        search(include_scope, include_chosen, weight + w[static_cast<std::size_t>(v)]);
        VertexSet exclude_scope = scope;
        exclude_scope.remove(v);
        search(exclude_scope, chosen, weight);
    }
};

} // namespace

Solution mwis_branch_and_bound(const Graph& g, const VertexSet& scope, const Weights& w) {
    VertexSet pos(g.vertex_count());
    for (int v : scope)
        if (w[static_cast<std::size_t>(v)] > 0) pos.add(v);
    BnB bnb{g, w, Solution{VertexSet(g.vertex_count()), 0}};
    bnb.search(pos, VertexSet(g.vertex_count()), 0);
    return bnb.best;
}

Solution mwis_clawfree(const Graph& g, const VertexSet& scope, const Weights& w,
                       ClawfreeSolver solver) {
    if (paranoid_checks() && !is_claw_free(g, scope))
        throw std::logic_error("mwis_clawfree: scope is not claw-free");
    if (solver == ClawfreeSolver::Brute) return mwis_bruteforce(g, scope, w);

    VertexSet pos(g.vertex_count());
    for (int v : scope)
        if (w[static_cast<std::size_t>(v)] > 0) pos.add(v);

    Solution total{VertexSet(g.vertex_count()), 0};
    for (const VertexSet& comp : connected_components(g, pos)) {
        std::optional<RootGraph> root;
        if (solver != ClawfreeSolver::BranchAndBound) root = line_graph_root(g, comp);
        Solution part{VertexSet(g.vertex_count()), 0};
        if (root) {
            std::vector<WeightedEdge> edges;
            edges.reserve(root->edges.size());
            for (const auto& e : root->edges)
                edges.push_back({e.a, e.b, w[static_cast<std::size_t>(e.g_vertex)]});
            std::vector<int> mate =
                max_weight_matching(root->vertex_count, edges);
            for (const auto& e : root->edges)
                if (mate[static_cast<std::size_t>(e.a)] == e.b) {
                    part.set.add(e.g_vertex);
                    part.weight += w[static_cast<std::size_t>(e.g_vertex)];
                }
        } else if (solver == ClawfreeSolver::Matching) {
            throw std::runtime_error(
                "matching solver requested but a component is not a line graph");
        } else {
            part = mwis_branch_and_bound(g, comp, w);
        }
        total.set |= part.set;
        total.weight += part.weight;
    }
    return total;
}

} // namespace lclaw
