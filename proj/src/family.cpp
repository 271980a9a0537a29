#include "lclaw/family.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "lclaw/config.hpp"
#include "lclaw/patterns.hpp"

namespace lclaw {

namespace {

void check_ordering(const Graph& g, std::span<const int> ordering) {
    int n = g.vertex_count();
    if (static_cast<int>(ordering.size()) != n)
        throw std::invalid_argument("ordering length must equal the vertex count");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : ordering) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("ordering is not a permutation of the vertices");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

} // namespace

Family algorithm_alpha(const Graph& g, std::span<const int> ordering) {
    check_ordering(g, ordering);
    const int n = g.vertex_count();
    Family fam(n);
    fam.insert(VertexSet(n), MemberProvenance{});
    VertexSet prefix(n);
    for (int v : ordering) {
        prefix.add(v);
        // Step 1: extension of members that stay independent.
        Family next(n);
        next.stats = fam.stats;
        for (std::size_t i = 0; i < fam.size(); ++i) {
            VertexSet h = fam.members()[i];
            MemberProvenance prov = fam.provenance(i);
            if (!g.neighbors(v).intersects(h)) {
                h.add(v);
                ++prov.extensions;
            }
            next.insert(h, std::move(prov));
        }
        // Step 2: one new member per edge u-v of the prefix graph.
        for (int u : g.neighbors(v) & prefix) {
            VertexSet uv = VertexSet::of(n, {u, v});
            VertexSet h = anti_neighborhood(g, prefix, uv);
            h.add(v);
            ++next.stats.step2_candidates;
            next.insert(h, MemberProvenance{MemberProvenance::Origin::Step2, 0, uv, 0});
        }
        fam = std::move(next);
    }
    return fam;
}

namespace {

struct MemoKey {
    VertexSet scope;
    int level;
    bool operator==(const MemoKey&) const = default;
};

struct MemoKeyHash {
    std::size_t operator()(const MemoKey& k) const {
        return k.scope.hash() * 31u + static_cast<std::size_t>(k.level);
    }
};

struct GammaContext {
    const Graph& g;
    std::vector<int> position; // position of each vertex in the top-level ordering
    std::unordered_map<MemoKey, std::vector<VertexSet>, MemoKeyHash> memo;
    Family::Stats stats;
};

Family gamma_level(GammaContext& ctx, const VertexSet& scope, int level,
                   const GammaCheckpoint* checkpoint);

const std::vector<VertexSet>& gamma_members(GammaContext& ctx, const VertexSet& scope,
                                            int level) {
    MemoKey key{scope, level};
    if (auto it = ctx.memo.find(key); it != ctx.memo.end()) {
        ++ctx.stats.memo_hits;
        return it->second;
    }
    Family fam = gamma_level(ctx, scope, level, nullptr);
    auto [it, fresh] = ctx.memo.emplace(std::move(key), fam.members());
    assert(fresh);
    return it->second;
}

Family gamma_level(GammaContext& ctx, const VertexSet& scope, int level,
                   const GammaCheckpoint* checkpoint) {
    ++ctx.stats.construction_calls;
    const Graph& g = ctx.g;
    const int n = g.vertex_count();
    Family fam(n);
    if (is_claw_free(g, scope)) {
        // One-member good family of a claw-free graph.
        fam.insert(scope, MemberProvenance{});
        return fam;
    }
    if (level <= 1) {
        auto claw = find_any_claw(g, scope);
        assert(claw.has_value());
        throw ClassViolation("claw found where a claw-free graph was required", {*claw});
    }

    std::vector<int> verts = scope.to_vector();
    std::sort(verts.begin(), verts.end(), [&](int a, int b) {
        return ctx.position[static_cast<std::size_t>(a)] < ctx.position[static_cast<std::size_t>(b)];
    });

    fam.insert(VertexSet(n), MemberProvenance{});
    VertexSet prefix(n);
    int loop = 0;
    for (int v : verts) {
        ++loop;
        prefix.add(v);

        // Step 1: extension of members whose induced subgraph stays claw-free.
        Family next(n);
        for (std::size_t i = 0; i < fam.size(); ++i) {
            VertexSet h = fam.members()[i];
            MemberProvenance prov = fam.provenance(i);
            if (extension_stays_claw_free(g, h, v)) {
                h.add(v);
                ++prov.extensions;
                if (paranoid_checks() && !is_claw_free(g, h))
                    throw std::logic_error("Step 1 extension destroyed claw-freeness");
            }
            next.insert(h, std::move(prov));
        }

        // Step 2: whiteImage + F for each pattern embedding anchored at v and
        // each F in the recursive family of the embedding's anti-neighborhood.
        enumerate_embeddings(g, prefix, v, [&](const Embedding& e) {
            ++ctx.stats.embeddings;
            VertexSet anti = anti_neighborhood(g, prefix, e.image);
            const std::vector<VertexSet>* rec = nullptr;
            try {
                rec = &gamma_members(ctx, anti, level - 1);
            } catch (ClassViolation& cv) {
                cv.prepend_witness(embedded_claw(e));
                throw;
            }
            for (const VertexSet& f : *rec) {
                ++ctx.stats.step2_candidates;
                VertexSet member = f | e.white_image;
                if (paranoid_checks() && !is_claw_free(g, member))
                    throw std::logic_error("Step 2 produced a member that is not claw-free");
                next.insert(member,
                            MemberProvenance{MemberProvenance::Origin::Step2, e.pattern_id,
                                             e.image, 0});
            }
            return true;
        });

        fam = std::move(next);
        if (checkpoint) {
            fam.stats = ctx.stats;
            (*checkpoint)(loop, prefix, fam);
        }
    }
    return fam;
}

} // namespace

Family gamma(const Graph& g, int l, std::span<const int> ordering,
             const GammaCheckpoint& checkpoint) {
    if (l < 1) throw std::invalid_argument("l must be at least 1");
    check_ordering(g, ordering);
    GammaContext ctx{g, std::vector<int>(static_cast<std::size_t>(g.vertex_count())), {}, {}};
    for (std::size_t i = 0; i < ordering.size(); ++i)
        ctx.position[static_cast<std::size_t>(ordering[i])] = static_cast<int>(i);
    Family fam = gamma_level(ctx, g.vertices(), l, checkpoint ? &checkpoint : nullptr);
    fam.stats = ctx.stats;
    return fam;
}

Family gamma2(const Graph& g, std::span<const int> ordering) { return gamma(g, 2, ordering); }

GoodFamilyReport verify_good_family(const Graph& g, const Family& fam, FamilyKind kind,
                                    std::size_t mis_cap, bool check_size_cap) {
    GoodFamilyReport r;
    r.member_count = fam.size();

    // (i) member condition.
    r.member_condition = CheckState::Pass;
    for (std::size_t i = 0; i < fam.size() && r.member_condition == CheckState::Pass; ++i) {
        const VertexSet& m = fam.members()[i];
        if (kind == FamilyKind::GammaClawFree) {
            if (auto claw = find_any_claw(g, m)) {
                r.member_condition = CheckState::Fail;
                r.bad_member = i;
                r.bad_member_claw = claw;
            }
        } else {
            for (int v : m) {
                VertexSet nb = g.neighbors(v) & m;
                if (!nb.empty()) {
                    r.member_condition = CheckState::Fail;
                    r.bad_member = i;
                    r.bad_member_edge = std::pair{v, nb.first()};
                    break;
                }
            }
        }
    }

    // (ii) every maximal independent set is contained in some member.
    r.coverage = CheckState::Pass;
    EnumOutcome outcome =
        for_each_maximal_independent_set(g, g.vertices(), mis_cap, [&](const VertexSet& mis) {
            ++r.maximal_is_count;
            for (const VertexSet& m : fam.members())
                if (mis.subset_of(m)) return true;
            r.coverage = CheckState::Fail;
            r.uncovered = mis;
            return false;
        });
    if (outcome == EnumOutcome::CapExceeded) r.coverage = CheckState::Unverified;

    // (iii) structural counting cap.
    if (check_size_cap) {
        r.cap = 1 + (kind == FamilyKind::AlphaIndependent
                         ? static_cast<std::size_t>(g.edge_count())
                         : fam.stats.step2_candidates);
        r.size_cap = fam.size() <= r.cap ? CheckState::Pass : CheckState::Fail;
    }
    return r;
}

namespace {

const char* state_str(CheckState s) {
    switch (s) {
    case CheckState::Pass: return "pass";
    case CheckState::Fail: return "FAIL";
    default: return "unverified";
    }
}

std::string one_based(const VertexSet& s) {
    std::string out;
    for (int v : s) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v + 1);
    }
    return out;
}

} // namespace

std::string GoodFamilyReport::to_string() const {
    std::string out;
    out += "members: " + std::to_string(member_count) + " (cap " + std::to_string(cap) +
           "): " + state_str(size_cap) + "\n";
    out += "(i) member condition: " + std::string(state_str(member_condition));
    if (bad_member) {
        out += " [member " + std::to_string(*bad_member + 1);
        if (bad_member_claw) out += " has claw " + bad_member_claw->to_string();
        if (bad_member_edge)
            out += " has edge " + std::to_string(bad_member_edge->first + 1) + "-" +
                   std::to_string(bad_member_edge->second + 1);
        out += "]";
    }
    out += "\n";
    out += "(ii) maximal independent sets covered: " + std::string(state_str(coverage));
    if (coverage != CheckState::Unverified)
        out += " (" + std::to_string(maximal_is_count) + " sets)";
    if (uncovered) out += " [uncovered: " + one_based(*uncovered) + "]";
    out += "\n";
    return out;
}

std::vector<int> identity_ordering(int n) {
    std::vector<int> ord(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ord[static_cast<std::size_t>(i)] = i;
    return ord;
}

std::vector<int> degree_ordering(const Graph& g, bool ascending) {
    std::vector<int> ord = identity_ordering(g.vertex_count());
    std::stable_sort(ord.begin(), ord.end(), [&](int a, int b) {
        return ascending ? g.degree(a) < g.degree(b) : g.degree(a) > g.degree(b);
    });
    return ord;
}

std::string dump_family(const Family& fam) {
    std::string out;
    for (std::size_t i = 0; i < fam.size(); ++i) {
        const MemberProvenance& p = fam.provenance(i);
        out += "# member " + std::to_string(i + 1) + " origin=";
        if (p.origin == MemberProvenance::Origin::Initial) {
            out += "initial";
        } else if (p.pattern_id > 0) {
            out += "step2 pattern=L" + std::to_string(p.pattern_id) + " image=" +
                   one_based(p.source_image);
        } else {
            out += "step2 edge=" + one_based(p.source_image);
        }
        out += " extensions=" + std::to_string(p.extensions) + "\n";
        out += one_based(fam.members()[i]) + "\n";
    }
    return out;
}

Family parse_family_dump(std::string_view text, int universe) {
    Family fam(universe);
    std::string line;
    bool member_pending = false;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        line.assign(text.substr(pos, nl - pos));
        pos = nl + 1;
        if (!line.empty() && line[0] == '#') {
            member_pending = true;
            continue;
        }
        bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
        if (blank && !member_pending) continue; // trailing blank lines
        VertexSet member(universe);
        std::istringstream ss(line);
        long long v = 0;
        while (ss >> v) {
            if (v < 1 || v > universe)
                throw std::invalid_argument("family dump vertex out of range: " +
                                            std::to_string(v));
            member.add(static_cast<int>(v - 1));
        }
        fam.insert(member, MemberProvenance{});
        member_pending = false;
        if (pos > text.size()) break;
    }
    return fam;
}

} // namespace lclaw
