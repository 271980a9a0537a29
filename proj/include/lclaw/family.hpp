#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "lclaw/graph.hpp"
#include "lclaw/vertex_set.hpp"

namespace lclaw {

struct MemberProvenance {
    enum class Origin {
        Initial, ///< the seed member (or the whole scope in the base case)
        Step2,   ///< added for a pattern embedding (or an edge, for alpha)
    };
    Origin origin = Origin::Initial;
    int pattern_id = 0;      ///< L_k id for gamma Step 2; 0 for alpha edge members
    VertexSet source_image;  ///< pattern image (gamma) or edge pair (alpha)
    int extensions = 0;      ///< Step-1 extensions applied since creation
};

/// Deduplicated collection of vertex sets with provenance and construction
/// statistics. Insertion order is preserved; duplicates keep their first
/// provenance.
class Family {
public:
    explicit Family(int universe) : universe_(universe) {}

    bool insert(const VertexSet& member, MemberProvenance prov) {
        auto [it, fresh] = index_.emplace(member, members_.size());
        if (!fresh) return false;
        members_.push_back(member);
        provenance_.push_back(std::move(prov));
        return true;
    }

    bool contains(const VertexSet& member) const { return index_.count(member) > 0; }
    std::size_t size() const { return members_.size(); }
    const std::vector<VertexSet>& members() const { return members_; }
    const MemberProvenance& provenance(std::size_t i) const { return provenance_[i]; }
    int universe() const { return universe_; }

    struct Stats {
        std::size_t embeddings = 0;       ///< deduplicated embeddings enumerated, all levels
        std::size_t step2_candidates = 0; ///< member insertions attempted by Step 2
        std::size_t construction_calls = 0;
        std::size_t memo_hits = 0;
    };
    Stats stats;

private:
    int universe_;
    std::vector<VertexSet> members_;
    std::vector<MemberProvenance> provenance_;
    std::unordered_map<VertexSet, std::size_t, VertexSetHash> index_;
};

/// Raised when a construction that requires an l-claw-free input discovers it
/// is not: the witness is a chain of pairwise anti-adjacent claws.
class ClassViolation : public std::runtime_error {
public:
    ClassViolation(const std::string& message, std::vector<Claw> witness)
        : std::runtime_error(message), witness_(std::move(witness)) {}

    const std::vector<Claw>& witness() const { return witness_; }
    void prepend_witness(const Claw& c) { witness_.insert(witness_.begin(), c); }

private:
    std::vector<Claw> witness_;
};

/// Covering family over prefixes of a vertex ordering: each loop extends
/// members by v_i while independence is preserved, then adds
/// {v_i} + A(u, v_i) for every edge u-v_i of the prefix graph. On 2K2-free
/// inputs every member is independent, every maximal independent set is
/// contained in some member, and there are at most 1 + |E| members.
Family algorithm_alpha(const Graph& g, std::span<const int> ordering);

/// Invoked after each top-level loop with the loop index (1-based), the
/// prefix vertex set and the family built so far.
using GammaCheckpoint = std::function<void(int loop, const VertexSet& prefix, const Family&)>;

/// Good claw-free family of an l-claw-free graph. Claw-free inputs yield the
/// one-member family {V}; otherwise each loop extends members by v_i while
/// claw-freeness is preserved, and for every pattern embedding anchored at
/// v_i adds whiteImage + F for each F in the recursive family of the
/// embedding's anti-neighborhood at l-1. Recursive results are memoized by
/// (anti set, level). Throws ClassViolation when a base case at l = 1 is not
/// claw-free.
Family gamma(const Graph& g, int l, std::span<const int> ordering,
             const GammaCheckpoint& checkpoint = {});

/// gamma with l = 2.
Family gamma2(const Graph& g, std::span<const int> ordering);

enum class CheckState { Pass, Fail, Unverified };

enum class FamilyKind {
    GammaClawFree,    ///< members must induce claw-free subgraphs; cap 1 + Step-2 candidates
    AlphaIndependent, ///< members must be independent sets; cap 1 + |E|
};

struct GoodFamilyReport {
    CheckState member_condition = CheckState::Unverified; // (i)
    std::optional<std::size_t> bad_member;
    std::optional<Claw> bad_member_claw;
    std::optional<std::pair<int, int>> bad_member_edge;

    CheckState coverage = CheckState::Unverified; // (ii)
    std::optional<VertexSet> uncovered;
    std::size_t maximal_is_count = 0;

    CheckState size_cap = CheckState::Unverified; // (iii), structural counting cap
    std::size_t member_count = 0;
    std::size_t cap = 0;

    bool all_pass() const {
        return member_condition == CheckState::Pass && coverage == CheckState::Pass &&
               size_cap == CheckState::Pass;
    }

    std::string to_string() const;
};

/// Checks the good-family conditions against the maximal-independent-set
/// oracle. Exceeding `mis_cap` yields Unverified coverage, never a false
/// pass. `check_size_cap = false` (for families loaded from a dump, whose
/// construction statistics are unknown) leaves condition (iii) unverified.
GoodFamilyReport verify_good_family(const Graph& g, const Family& fam, FamilyKind kind,
                                    std::size_t mis_cap = 1u << 21,
                                    bool check_size_cap = true);

std::vector<int> identity_ordering(int n);
std::vector<int> degree_ordering(const Graph& g, bool ascending);

/// One member per line as sorted 1-based ids, each preceded by a provenance
/// comment line.
std::string dump_family(const Family& fam);

/// Reads the dump format back (comment lines ignored, one member per line,
/// blank line = empty member). Construction statistics are not recoverable,
/// so verification of a loaded family leaves the size cap unverified.
Family parse_family_dump(std::string_view text, int universe);

} // namespace lclaw
