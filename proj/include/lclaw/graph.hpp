#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lclaw/vertex_set.hpp"

namespace lclaw {

/// Per-vertex integer weights; length equals the graph's vertex count.
using Weights = std::vector<std::int64_t>;

/// Undirected simple graph over dense vertex ids 0..n-1 with bitset adjacency
/// rows. Immutable once built (algorithms only ever take const references and
/// induced views via VertexSet masks).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), VertexSet(n)) {}

    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
        return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
    }

    void add_edge(int u, int v) {
        assert(u != v && u >= 0 && v >= 0 && u < n_ && v < n_);
        if (adj_[static_cast<std::size_t>(u)].contains(v)) return;
        adj_[static_cast<std::size_t>(u)].add(v);
        adj_[static_cast<std::size_t>(v)].add(u);
        ++m_;
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }

    const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    int degree(int v) const { return adj_[static_cast<std::size_t>(v)].count(); }

    VertexSet vertices() const { return VertexSet::full(n_); }

    /// Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[static_cast<std::size_t>(u)])
                if (v > u) out.emplace_back(u, v);
        return out;
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

/// Induced K_{1,3}: a center adjacent to three pairwise nonadjacent leaves.
struct Claw {
    int center = -1;
    std::array<int, 3> leaves{-1, -1, -1};

    VertexSet to_set(int universe) const {
        return VertexSet::of(universe, {center, leaves[0], leaves[1], leaves[2]});
    }

    std::string to_string() const {
        return "(" + std::to_string(center) + "; " + std::to_string(leaves[0]) + "," +
               std::to_string(leaves[1]) + "," + std::to_string(leaves[2]) + ")";
    }
};

/// True iff c is an induced claw of G[scope].
bool is_valid_claw(const Graph& g, const VertexSet& scope, const Claw& c);

/// N_G(U) within scope: vertices of scope outside U adjacent to some u in U.
VertexSet neighborhood(const Graph& g, const VertexSet& scope, const VertexSet& u);
VertexSet neighborhood(const Graph& g, const VertexSet& u);

/// A_G(U) within scope: scope minus (U and its neighborhood). U, N(U), A(U)
/// partition the scope.
VertexSet anti_neighborhood(const Graph& g, const VertexSet& scope, const VertexSet& u);
VertexSet anti_neighborhood(const Graph& g, const VertexSet& u);

/// Some induced claw of G[scope], or nullopt. Deterministic: centers are
/// scanned in ascending id, leaf triples in lexicographic order.
std::optional<Claw> find_any_claw(const Graph& g, const VertexSet& scope);

/// Some induced claw of G[scope] whose vertex set contains v (as center or
/// leaf), or nullopt. Deterministic lowest-id search order.
std::optional<Claw> find_claw_at(const Graph& g, const VertexSet& scope, int v);
std::optional<Claw> find_claw_at(const Graph& g, int v);

bool is_claw_free(const Graph& g, const VertexSet& scope);
bool is_claw_free(const Graph& g);

/// Given claw-free G[H] and v outside H, decides whether G[H + v] is still
/// claw-free by checking only claws through v. The precondition on H is
/// verified only under paranoid checks.
bool extension_stays_claw_free(const Graph& g, const VertexSet& h, int v);

/// Searches G[scope] for `count` pairwise anti-adjacent induced claws
/// (disjoint, no edges between them). Returns the claws when found.
/// Exponential in `count`, which is a small constant throughout.
std::optional<std::vector<Claw>> find_claw_packing(const Graph& g, const VertexSet& scope,
                                                   int count);

/// True iff G contains no induced subgraph isomorphic to the disjoint union
/// of l claws. l = 1 coincides with is_claw_free.
bool is_l_claw_free(const Graph& g, const VertexSet& scope, int l);
bool is_l_claw_free(const Graph& g, int l);

enum class EnumOutcome {
    Complete,    ///< every set was emitted
    CapExceeded, ///< resource guard hit; enumeration aborted
    Stopped,     ///< the visitor asked to stop
};

/// Streams every maximal independent set of G[scope] exactly once
/// (Bron-Kerbosch with pivoting on the complement). The visitor returns false
/// to stop early. Intended for small scopes; `cap` bounds the number of
/// emissions.
EnumOutcome for_each_maximal_independent_set(const Graph& g, const VertexSet& scope,
                                             std::size_t cap,
                                             const std::function<bool(const VertexSet&)>& visit);

/// Collects the stream; nullopt when the cap was exceeded.
std::optional<std::vector<VertexSet>> maximal_independent_sets(const Graph& g,
                                                               const VertexSet& scope,
                                                               std::size_t cap = 1u << 22);

/// True iff `set` is independent in G[scope] and no scope vertex outside it
/// can be added.
bool is_independent_set(const Graph& g, const VertexSet& set);
bool is_maximal_independent_set(const Graph& g, const VertexSet& scope, const VertexSet& set);

std::int64_t set_weight(const Weights& w, const VertexSet& set);

/// Connected components of G[scope], ordered by their smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& scope);

/// L(H) for a root graph H given by its edge list: one vertex per root edge,
/// adjacent iff the root edges share an endpoint.
Graph line_graph(std::span<const std::pair<int, int>> root_edges);

} // namespace lclaw
