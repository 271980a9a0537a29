#pragma once

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lclaw/clawfree_solver.hpp"
#include "lclaw/family.hpp"
#include "lclaw/graph.hpp"

namespace lclaw {

/// Raised when a 2K2-free precondition fails; carries the two independent
/// edges.
class TwoK2Violation : public std::runtime_error {
public:
    TwoK2Violation(const std::string& message, std::array<std::pair<int, int>, 2> witness)
        : std::runtime_error(message), witness_(witness) {}

    const std::array<std::pair<int, int>, 2>& witness() const { return witness_; }

private:
    std::array<std::pair<int, int>, 2> witness_;
};

struct SolveOptions {
    std::vector<int> ordering;    ///< empty = input order
    bool skip_class_check = false;
    int class_check_max_n = 30;   ///< up-front verification only at desk scale
    ClawfreeSolver solver = ClawfreeSolver::Auto;
};

/// MWIS for l-claw-free graphs: build the good claw-free family, solve each
/// member exactly with the claw-free solver, return the best. Ties among
/// equal weights go to the lexicographically smallest vertex set. Throws
/// ClassViolation when the input is not l-claw-free (up front for small n,
/// lazily from the family construction otherwise).
Solution mwis_lclaw(const Graph& g, const Weights& w, int l, const SolveOptions& opts = {});

/// MWIS for 2K2-free graphs: every alpha member is an independent set, so
/// the per-member optimum is its positive-weight subset. Throws
/// TwoK2Violation with a witness when the class check fails.
Solution mwis_2k2free(const Graph& g, const Weights& w, const SolveOptions& opts = {});

using Subsolver = std::function<Solution(const Graph&, const VertexSet&, const Weights&)>;

/// max over v of w(v) + subsolver(G[A(v)]), against the empty-set baseline.
/// Exact whenever the subsolver is exact on every anti-neighborhood.
/// Subsolver errors are rethrown annotated with the pivot vertex.
Solution lift_by_isolated_vertex(const Subsolver& subsolver, const Graph& g, const Weights& w);

/// Largest p <= cap such that G contains p pairwise anti-adjacent induced
/// claws; 0 for claw-free graphs, cap when the search saturates.
int detect_claw_packing(const Graph& g, int cap);

/// Two independent edges with no edges between them, if any.
std::optional<std::array<std::pair<int, int>, 2>> find_induced_2k2(const Graph& g);
bool is_2k2_free(const Graph& g);

} // namespace lclaw
