#include "lclaw/graph.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include "lclaw/config.hpp"

namespace lclaw {

namespace {
std::atomic<bool> g_paranoid{false};
} // namespace

void set_paranoid_checks(bool enabled) { g_paranoid.store(enabled, std::memory_order_relaxed); }
bool paranoid_checks() { return g_paranoid.load(std::memory_order_relaxed); }

bool is_valid_claw(const Graph& g, const VertexSet& scope, const Claw& c) {
    std::array<int, 4> vs{c.center, c.leaves[0], c.leaves[1], c.leaves[2]};
    for (int v : vs)
        if (v < 0 || v >= g.vertex_count() || !scope.contains(v)) return false;
    std::array<int, 4> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (int leaf : c.leaves)
        if (!g.adjacent(c.center, leaf)) return false;
    return !g.adjacent(c.leaves[0], c.leaves[1]) && !g.adjacent(c.leaves[0], c.leaves[2]) &&
           !g.adjacent(c.leaves[1], c.leaves[2]);
}

VertexSet neighborhood(const Graph& g, const VertexSet& scope, const VertexSet& u) {
    VertexSet n(g.vertex_count());
    for (int v : u) n |= g.neighbors(v);
    n &= scope;
    n -= u;
    return n;
}

VertexSet neighborhood(const Graph& g, const VertexSet& u) {
    return neighborhood(g, g.vertices(), u);
}

VertexSet anti_neighborhood(const Graph& g, const VertexSet& scope, const VertexSet& u) {
    VertexSet closed = u;
    for (int v : u) closed |= g.neighbors(v);
    VertexSet a = scope;
    a -= closed;
    return a;
}

VertexSet anti_neighborhood(const Graph& g, const VertexSet& u) {
    return anti_neighborhood(g, g.vertices(), u);
}

namespace {

/// Lexicographically first pairwise-nonadjacent triple within `candidates`
/// that is a valid leaf set for `center`; all candidates are neighbors of
/// center already.
std::optional<Claw> first_leaf_triple(const Graph& g, const std::vector<int>& candidates,
                                      int center) {
    const std::size_t k = candidates.size();
    for (std::size_t i = 0; i + 2 < k; ++i)
        for (std::size_t j = i + 1; j + 1 < k; ++j) {
            if (g.adjacent(candidates[i], candidates[j])) continue;
            for (std::size_t l = j + 1; l < k; ++l) {
                if (g.adjacent(candidates[i], candidates[l]) ||
                    g.adjacent(candidates[j], candidates[l]))
                    continue;
                return Claw{center, {candidates[i], candidates[j], candidates[l]}};
            }
        }
    return std::nullopt;
}

} // namespace

std::optional<Claw> find_any_claw(const Graph& g, const VertexSet& scope) {
    for (int c : scope) {
        VertexSet nb = g.neighbors(c) & scope;
        if (nb.count() < 3) continue;
        if (auto claw = first_leaf_triple(g, nb.to_vector(), c)) return claw;
    }
    return std::nullopt;
}

std::optional<Claw> find_claw_at(const Graph& g, const VertexSet& scope, int v) {
    assert(v >= 0 && v < g.vertex_count() && scope.contains(v));
    // Candidate centers: v itself or a neighbor of v (v then sits as a leaf).
    VertexSet centers = g.neighbors(v) & scope;
    centers.add(v);
    for (int c : centers) {
        VertexSet nb = g.neighbors(c) & scope;
        if (c == v) {
            if (nb.count() < 3) continue;
            if (auto claw = first_leaf_triple(g, nb.to_vector(), c)) return claw;
        } else {
            // v is forced to be one of the leaves.
            std::vector<int> others;
            for (int x : nb)
                if (x != v && !g.adjacent(x, v)) others.push_back(x);
            for (std::size_t i = 0; i + 1 < others.size(); ++i)
                for (std::size_t j = i + 1; j < others.size(); ++j) {
                    if (g.adjacent(others[i], others[j])) continue;
                    std::array<int, 3> leaves{v, others[i], others[j]};
                    std::sort(leaves.begin(), leaves.end());
                    return Claw{c, leaves};
                }
        }
    }
    return std::nullopt;
}

std::optional<Claw> find_claw_at(const Graph& g, int v) {
    return find_claw_at(g, g.vertices(), v);
}

bool is_claw_free(const Graph& g, const VertexSet& scope) {
    return !find_any_claw(g, scope).has_value();
}

bool is_claw_free(const Graph& g) { return is_claw_free(g, g.vertices()); }

bool extension_stays_claw_free(const Graph& g, const VertexSet& h, int v) {
    assert(!h.contains(v));
    if (paranoid_checks() && !is_claw_free(g, h))
        throw std::logic_error("extension_stays_claw_free: G[H] is not claw-free");
    VertexSet nb = g.neighbors(v) & h;
    // v as center: three pairwise nonadjacent neighbors inside H.
    if (nb.count() >= 3 && first_leaf_triple(g, nb.to_vector(), v)) return false;
    // v as leaf: a center c in H adjacent to v plus two more leaves in H,
    // nonadjacent to each other and to v.
    for (int c : nb) {
        std::vector<int> others;
        for (int x : g.neighbors(c) & h)
            if (x != v && !g.adjacent(x, v)) others.push_back(x);
        for (std::size_t i = 0; i + 1 < others.size(); ++i)
            for (std::size_t j = i + 1; j < others.size(); ++j)
                if (!g.adjacent(others[i], others[j])) return false;
    }
    return true;
}

namespace {

/// Every induced claw of G[scope], each exactly once (centers ascending,
/// leaf triples lexicographic). The visitor returns false to stop.
bool for_each_claw(const Graph& g, const VertexSet& scope,
                   const std::function<bool(const Claw&)>& visit) {
    for (int c : scope) {
        std::vector<int> nb = (g.neighbors(c) & scope).to_vector();
        const std::size_t k = nb.size();
        if (k < 3) continue;
        for (std::size_t i = 0; i + 2 < k; ++i)
            for (std::size_t j = i + 1; j + 1 < k; ++j) {
                if (g.adjacent(nb[i], nb[j])) continue;
                for (std::size_t l = j + 1; l < k; ++l) {
                    if (g.adjacent(nb[i], nb[l]) || g.adjacent(nb[j], nb[l])) continue;
                    if (!visit(Claw{c, {nb[i], nb[j], nb[l]}})) return false;
                }
            }
    }
    return true;
}

bool claw_packing_rec(const Graph& g, const VertexSet& scope, int count,
                      std::vector<Claw>& acc) {
    if (count == 0) return true;
    bool found = false;
    for_each_claw(g, scope, [&](const Claw& c) {
        acc.push_back(c);
        VertexSet rest = anti_neighborhood(g, scope, c.to_set(g.vertex_count()));
        if (claw_packing_rec(g, rest, count - 1, acc)) {
            found = true;
            return false; // stop enumeration
        }
        acc.pop_back();
        return true;
    });
    return found;
}

} // namespace

std::optional<std::vector<Claw>> find_claw_packing(const Graph& g, const VertexSet& scope,
                                                   int count) {
    assert(count >= 0);
    std::vector<Claw> acc;
    if (claw_packing_rec(g, scope, count, acc)) return acc;
    return std::nullopt;
}

bool is_l_claw_free(const Graph& g, const VertexSet& scope, int l) {
    assert(l >= 1);
    return !find_claw_packing(g, scope, l).has_value();
}

bool is_l_claw_free(const Graph& g, int l) { return is_l_claw_free(g, g.vertices(), l); }

namespace {

struct MisEnum {
    const Graph& g;
    const VertexSet& scope;
    std::size_t cap;
    std::size_t emitted = 0;
    const std::function<bool(const VertexSet&)>& visit;

    // Non-neighbors of v within scope (the complement adjacency row).
    VertexSet co_neighbors(int v) const {
        VertexSet cn = scope;
        cn -= g.neighbors(v);
        cn.remove(v);
        return cn;
    }

    EnumOutcome expand(VertexSet r, VertexSet p, VertexSet x) {
        if (p.empty() && x.empty()) {
            if (emitted >= cap) return EnumOutcome::CapExceeded;
            ++emitted;
            return visit(r) ? EnumOutcome::Complete : EnumOutcome::Stopped;
        }
        // Pivot: member of P or X with most complement-neighbors in P.
        int pivot = -1, best = -1;
        for (const VertexSet* side : {&p, &x})
            for (int u : *side) {
                int c = (p & co_neighbors(u)).count();
                if (c > best) {
                    best = c;
                    pivot = u;
                }
            }
        VertexSet ext = p;
        if (pivot != -1) ext -= co_neighbors(pivot);
        for (int v : ext) {
            VertexSet cn = co_neighbors(v);
            VertexSet r2 = r;
            r2.add(v);
            EnumOutcome res = expand(std::move(r2), p & cn, x & cn);
            if (res != EnumOutcome::Complete) return res;
            p.remove(v);
            x.add(v);
        }
        return EnumOutcome::Complete;
    }
};

} // namespace

EnumOutcome for_each_maximal_independent_set(const Graph& g, const VertexSet& scope,
                                             std::size_t cap,
                                             const std::function<bool(const VertexSet&)>& visit) {
    if (scope.empty()) {
        // The empty set is the unique maximal independent set of the empty graph.
        if (cap == 0) return EnumOutcome::CapExceeded;
        return visit(VertexSet(g.vertex_count())) ? EnumOutcome::Complete : EnumOutcome::Stopped;
    }
    MisEnum e{g, scope, cap, 0, visit};
    return e.expand(VertexSet(g.vertex_count()), scope, VertexSet(g.vertex_count()));
}

std::optional<std::vector<VertexSet>> maximal_independent_sets(const Graph& g,
                                                               const VertexSet& scope,
                                                               std::size_t cap) {
    std::vector<VertexSet> out;
    EnumOutcome res = for_each_maximal_independent_set(g, scope, cap, [&](const VertexSet& s) {
        out.push_back(s);
        return true;
    });
    if (res == EnumOutcome::CapExceeded) return std::nullopt;
    return out;
}

bool is_independent_set(const Graph& g, const VertexSet& set) {
    for (int v : set)
        if (g.neighbors(v).intersects(set)) return false;
    return true;
}

bool is_maximal_independent_set(const Graph& g, const VertexSet& scope, const VertexSet& set) {
    if (!set.subset_of(scope) || !is_independent_set(g, set)) return false;
    VertexSet addable = scope;
    addable -= set;
    for (int v : addable)
        if (!g.neighbors(v).intersects(set)) return false;
    return true;
}

std::int64_t set_weight(const Weights& w, const VertexSet& set) {
    std::int64_t total = 0;
    for (int v : set) total += w[static_cast<std::size_t>(v)];
    return total;
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& scope) {
    std::vector<VertexSet> comps;
    VertexSet remaining = scope;
    while (!remaining.empty()) {
        int start = remaining.first();
        VertexSet comp(g.vertex_count());
        std::vector<int> stack{start};
        comp.add(start);
        remaining.remove(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v) & remaining) {
                comp.add(u);
                remaining.remove(u);
                stack.push_back(u);
            }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

Graph line_graph(std::span<const std::pair<int, int>> root_edges) {
    Graph g(static_cast<int>(root_edges.size()));
    for (std::size_t i = 0; i < root_edges.size(); ++i)
        for (std::size_t j = i + 1; j < root_edges.size(); ++j) {
            auto [a, b] = root_edges[i];
            auto [c, d] = root_edges[j];
            if (a == c || a == d || b == c || b == d)
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    return g;
}

} // namespace lclaw
