#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace lclaw {

struct WeightedEdge {
    int u = 0;
    int v = 0;
    std::int64_t weight = 0;
};

/// Exact maximum-weight matching (Galil-style primal-dual with blossoms,
/// O(n^3)). Maximizes total weight over all matchings, not cardinality;
/// edges with weight <= 0 are dropped up front since they never help.
/// Returns mate[v] = partner vertex or -1. Integer arithmetic throughout.
std::vector<int> max_weight_matching(int n, std::span<const WeightedEdge> edges);

/// Total weight of the matching described by a mate array.
std::int64_t matching_weight(std::span<const WeightedEdge> edges, const std::vector<int>& mate);

} // namespace lclaw
