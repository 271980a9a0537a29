#pragma once

#include <cstdint>

#include "lclaw/instance.hpp"

namespace lclaw {

struct WeightRange {
    std::int64_t lo = -5;
    std::int64_t hi = 20;
};

/// l-claw-free instance certified by construction: l-1 disjoint small
/// claw-containing gadgets plus one larger claw-free block (the line graph of
/// a random root whose density follows `density`), with no edges across
/// blocks. Any induced claw lies inside a single gadget, so at most l-1
/// pairwise anti-adjacent claws exist. The certificate is re-checked with
/// is_l_claw_free up to desk scale. Requires l >= 2 and n >= 4(l-1).
Instance gen_lclaw_instance(std::uint64_t seed, int n, int l, double density = 0.4,
                            WeightRange weights = {});

/// Random split graph (clique + independent set + random cross edges);
/// split graphs are 2K2-free, and the certificate is re-checked by induced
/// 2K2 search up to desk scale.
Instance gen_2k2free_instance(std::uint64_t seed, int n, WeightRange weights = {});

/// Line graph of a random root graph on root_n vertices; always claw-free.
Instance gen_linegraph_instance(std::uint64_t seed, int root_n, double density = 0.4,
                                WeightRange weights = {});

} // namespace lclaw
