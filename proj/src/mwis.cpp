#include "lclaw/mwis.hpp"

#include <algorithm>

#include "lclaw/config.hpp"

namespace lclaw {

namespace {

void take_if_better(Solution& best, Solution cand) {
    if (cand.weight > best.weight ||
        (cand.weight == best.weight && lex_less(cand.set, best.set)))
        best = std::move(cand);
}

std::vector<int> effective_ordering(const Graph& g, const SolveOptions& opts) {
    return opts.ordering.empty() ? identity_ordering(g.vertex_count()) : opts.ordering;
}

} // namespace

Solution mwis_lclaw(const Graph& g, const Weights& w, int l, const SolveOptions& opts) {
    const int n = g.vertex_count();
    if (static_cast<int>(w.size()) != n)
        throw std::invalid_argument("weight vector length must equal the vertex count");
    if (l < 1) throw std::invalid_argument("l must be at least 1");
    if (n == 0) return Solution{VertexSet(0), 0};
    if (!opts.skip_class_check && n <= opts.class_check_max_n) {
        if (auto packing = find_claw_packing(g, g.vertices(), l))
            throw ClassViolation("input is not " + std::to_string(l) + "claw-free",
                                 std::move(*packing));
    }
    std::vector<int> ordering = effective_ordering(g, opts);
    Family fam = gamma(g, l, ordering);
    Solution best{VertexSet(n), 0};
    for (const VertexSet& member : fam.members())
        take_if_better(best, mwis_clawfree(g, member, w, opts.solver));
    return best;
}

Solution mwis_2k2free(const Graph& g, const Weights& w, const SolveOptions& opts) {
    const int n = g.vertex_count();
    if (static_cast<int>(w.size()) != n)
        throw std::invalid_argument("weight vector length must equal the vertex count");
    if (n == 0) return Solution{VertexSet(0), 0};
    if (!opts.skip_class_check && n <= opts.class_check_max_n) {
        if (auto witness = find_induced_2k2(g))
            throw TwoK2Violation("input is not 2K2-free", *witness);
    }
    std::vector<int> ordering = effective_ordering(g, opts);
    Family fam = algorithm_alpha(g, ordering);
    Solution best{VertexSet(n), 0};
    for (const VertexSet& member : fam.members()) {
        if (paranoid_checks() && !is_independent_set(g, member))
            throw std::logic_error("alpha produced a dependent member on a 2K2-free input");
        Solution cand{VertexSet(n), 0};
        for (int v : member)
            if (w[static_cast<std::size_t>(v)] > 0) {
                cand.set.add(v);
                cand.weight += w[static_cast<std::size_t>(v)];
            }
        take_if_better(best, std::move(cand));
    }
    return best;
}

Solution lift_by_isolated_vertex(const Subsolver& subsolver, const Graph& g, const Weights& w) {
    const int n = g.vertex_count();
    Solution best{VertexSet(n), 0};
    for (int v = 0; v < n; ++v) {
        VertexSet anti = anti_neighborhood(g, VertexSet::of(n, {v}));
        Solution sub;
        try {
            sub = subsolver(g, anti, w);
        } catch (const std::exception& e) {
            throw std::runtime_error("subsolver failed at pivot vertex " + std::to_string(v) +
                                     ": " + e.what());
        }
        sub.set.add(v);
        sub.weight += w[static_cast<std::size_t>(v)];
        take_if_better(best, std::move(sub));
    }
    return best;
}

int detect_claw_packing(const Graph& g, int cap) {
    int p = 0;
    while (p < cap && find_claw_packing(g, g.vertices(), p + 1)) ++p;
    return p;
}

std::optional<std::array<std::pair<int, int>, 2>> find_induced_2k2(const Graph& g) {
    auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) continue;
            if (g.adjacent(a, c) || g.adjacent(a, d) || g.adjacent(b, c) || g.adjacent(b, d))
                continue;
            return std::array{edges[i], edges[j]};
        }
    return std::nullopt;
}

bool is_2k2_free(const Graph& g) { return !find_induced_2k2(g).has_value(); }

} // namespace lclaw
