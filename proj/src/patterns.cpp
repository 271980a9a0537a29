#include "lclaw/patterns.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "lclaw/config.hpp"

namespace lclaw {

Graph LPattern::to_graph() const {
    Graph g(size);
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
}

namespace {

LPattern make_pattern(int id, std::vector<const char*> names, std::vector<int> whites,
                      std::vector<std::pair<int, int>> edges, Claw claw) {
    LPattern p;
    p.id = id;
    p.size = static_cast<int>(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) p.names[i] = names[i];
    for (int w : whites) p.white_mask |= static_cast<std::uint8_t>(1u << w);
    p.edges = std::move(edges);
    for (auto [a, b] : p.edges) {
        p.adj[static_cast<std::size_t>(a)] |= static_cast<std::uint8_t>(1u << b);
        p.adj[static_cast<std::size_t>(b)] |= static_cast<std::uint8_t>(1u << a);
    }
    p.claw = claw;
    return p;
}

void validate_pattern(const LPattern& p) {
    if (p.size < 4 || p.size > 7) throw std::logic_error("pattern size out of range");
    if (!p.is_white(0)) throw std::logic_error("top vertex must be white");
    for (int i = 0; i < p.size; ++i)
        for (int j = i + 1; j < p.size; ++j)
            if (p.is_white(i) && p.is_white(j) && p.adjacent(i, j))
                throw std::logic_error("white vertices must be independent");
    Graph g = p.to_graph();
    if (!is_valid_claw(g, g.vertices(), p.claw))
        throw std::logic_error("designated claw is not an induced claw");
    if (p.white_mask >= (1u << p.size)) throw std::logic_error("white mask out of range");
}

std::array<LPattern, 14> build_catalog() {
    std::array<LPattern, 14> cat{
        // Top claw (v center, blacks a,b,c) and its one-black variant.
        make_pattern(1, {"v", "a", "s1", "s2"}, {0, 2, 3},
                     {{1, 0}, {1, 2}, {1, 3}}, Claw{1, {0, 2, 3}}),
        make_pattern(2, {"v", "a", "b", "c"}, {0},
                     {{0, 1}, {0, 2}, {0, 3}}, Claw{0, {1, 2, 3}}),
        make_pattern(3, {"v", "a", "b", "c", "s1"}, {0, 4},
                     {{0, 1}, {0, 2}, {0, 3}, {1, 4}}, Claw{0, {1, 2, 3}}),
        make_pattern(4, {"v", "a", "b", "c", "s1", "s2"}, {0, 4, 5},
                     {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}, Claw{0, {1, 2, 3}}),
        make_pattern(5, {"v", "a", "b", "c", "s1", "s2", "s3"}, {0, 4, 5, 6},
                     {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}}, Claw{0, {1, 2, 3}}),
        make_pattern(6, {"v", "a", "b", "c", "s1"}, {0, 4},
                     {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}}, Claw{0, {1, 2, 3}}),
        make_pattern(7, {"v", "a", "b", "c", "s1", "s3"}, {0, 4, 5},
                     {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 5}}, Claw{0, {1, 2, 3}}),
        // Side claw (v a leaf, black center b).
        make_pattern(8, {"v", "a", "b", "c", "s"}, {0, 1, 4},
                     {{2, 0}, {2, 1}, {2, 3}, {3, 4}}, Claw{2, {0, 1, 3}}),
        make_pattern(9, {"v", "a", "b", "c", "s1", "s2"}, {0, 4, 5},
                     {{2, 0}, {2, 1}, {2, 3}, {1, 4}, {3, 5}}, Claw{2, {0, 1, 3}}),
        make_pattern(10, {"v", "a", "b", "c", "s1"}, {0, 4},
                      {{2, 0}, {2, 1}, {2, 3}, {1, 4}, {3, 4}}, Claw{2, {0, 1, 3}}),
        make_pattern(11, {"v", "a", "b", "c", "s"}, {0, 4},
                      {{2, 0}, {2, 1}, {2, 3}, {4, 1}, {4, 2}, {4, 3}}, Claw{2, {0, 1, 3}}),
        make_pattern(12, {"v", "a", "b", "c", "s", "s1"}, {0, 4, 5},
                      {{2, 0}, {2, 1}, {2, 3}, {4, 1}, {4, 2}, {4, 3}, {1, 5}},
                      Claw{2, {0, 1, 3}}),
        make_pattern(13, {"v", "a", "b", "c", "s", "s1", "s2"}, {0, 4, 5, 6},
                      {{2, 0}, {2, 1}, {2, 3}, {4, 1}, {4, 2}, {4, 3}, {1, 5}, {3, 6}},
                      Claw{2, {0, 1, 3}}),
        make_pattern(14, {"v", "a", "b", "c", "s", "s1"}, {0, 4, 5},
                      {{2, 0}, {2, 1}, {2, 3}, {4, 1}, {4, 2}, {4, 3}, {1, 5}, {3, 5}},
                      Claw{2, {0, 1, 3}}),
    };
    for (const auto& p : cat) validate_pattern(p);
    return cat;
}

} // namespace

const std::array<LPattern, 14>& pattern_catalog() {
    static const std::array<LPattern, 14> catalog = build_catalog();
    return catalog;
}

namespace {

/// Assignment order for backtracking: BFS from the top vertex, so every
/// vertex placed after the first has an already-placed neighbor.
std::array<int, 7> assignment_order(const LPattern& p) {
    std::array<int, 7> order{};
    std::array<bool, 7> seen{};
    int head = 0, tail = 0;
    order[tail++] = 0;
    seen[0] = true;
    while (head < tail) {
        int u = order[head++];
        for (int w = 0; w < p.size; ++w)
            if (p.adjacent(u, w) && !seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                order[tail++] = w;
            }
    }
    if (tail != p.size) throw std::logic_error("pattern is not connected");
    return order;
}

struct EmbedKey {
    VertexSet image;
    VertexSet white;
    bool operator==(const EmbedKey&) const = default;
};

struct EmbedKeyHash {
    std::size_t operator()(const EmbedKey& k) const {
        return k.image.hash() * 1000003u + k.white.hash();
    }
};

struct Enumerator {
    const Graph& g;
    const VertexSet& scope;
    int anchor;
    const std::function<bool(const Embedding&)>& visit;
    std::unordered_set<EmbedKey, EmbedKeyHash> seen;
    bool stopped = false;

    void run_pattern(const LPattern& p, const std::array<int, 7>& order) {
        std::array<int, 7> map{};
        map.fill(-1);
        map[0] = anchor;
        place(p, order, 1, map);
    }

    void place(const LPattern& p, const std::array<int, 7>& order, int slot,
               std::array<int, 7>& map) {
        if (stopped) return;
        if (slot == p.size) {
            emit(p, map);
            return;
        }
        int pv = order[static_cast<std::size_t>(slot)];
        for (int host : scope) {
            bool ok = true;
            for (int t = 0; t < slot && ok; ++t) {
                int q = order[static_cast<std::size_t>(t)];
                if (map[static_cast<std::size_t>(q)] == host)
                    ok = false;
                else if (g.adjacent(map[static_cast<std::size_t>(q)], host) != p.adjacent(q, pv))
                    ok = false;
            }
            if (!ok) continue;
            map[static_cast<std::size_t>(pv)] = host;
            place(p, order, slot + 1, map);
            map[static_cast<std::size_t>(pv)] = -1;
            if (stopped) return;
        }
    }

    void emit(const LPattern& p, const std::array<int, 7>& map) {
        Embedding e;
        e.pattern_id = p.id;
        e.map = map;
        e.image = VertexSet(g.vertex_count());
        e.white_image = VertexSet(g.vertex_count());
        for (int i = 0; i < p.size; ++i) {
            e.image.add(map[static_cast<std::size_t>(i)]);
            if (p.is_white(i)) e.white_image.add(map[static_cast<std::size_t>(i)]);
        }
        if (!seen.insert(EmbedKey{e.image, e.white_image}).second) return;
        if (paranoid_checks()) {
            for (int i = 0; i < p.size; ++i)
                for (int j = i + 1; j < p.size; ++j)
                    if (g.adjacent(map[static_cast<std::size_t>(i)],
                                   map[static_cast<std::size_t>(j)]) != p.adjacent(i, j))
                        throw std::logic_error("embedding is not an induced isomorphism");
        }
        if (!visit(e)) stopped = true;
    }
};

} // namespace

void enumerate_embeddings(const Graph& g, const VertexSet& scope, int anchor,
                          const std::function<bool(const Embedding&)>& visit) {
    assert(scope.contains(anchor));
    Enumerator en{g, scope, anchor, visit, {}, false};
    for (const auto& p : pattern_catalog()) {
        en.run_pattern(p, assignment_order(p));
        if (en.stopped) return;
    }
}

std::vector<Embedding> enumerate_embeddings(const Graph& g, const VertexSet& scope, int anchor) {
    std::vector<Embedding> out;
    enumerate_embeddings(g, scope, anchor, [&](const Embedding& e) {
        out.push_back(e);
        return true;
    });
    return out;
}

EmbeddingMember embedding_member(const Graph& g, const VertexSet& scope, const Embedding& e) {
    return EmbeddingMember{e.white_image, anti_neighborhood(g, scope, e.image)};
}

Claw embedded_claw(const Embedding& e) {
    const LPattern& p = pattern_catalog()[static_cast<std::size_t>(e.pattern_id - 1)];
    Claw c;
    c.center = e.map[static_cast<std::size_t>(p.claw.center)];
    for (int i = 0; i < 3; ++i)
        c.leaves[static_cast<std::size_t>(i)] =
            e.map[static_cast<std::size_t>(p.claw.leaves[static_cast<std::size_t>(i)])];
    std::sort(c.leaves.begin(), c.leaves.end());
    return c;
}

std::string pattern_atlas() {
    std::string out;
    for (const auto& p : pattern_catalog()) {
        out += "L" + std::to_string(p.id) + ": V={";
        for (int i = 0; i < p.size; ++i) {
            if (i) out += ",";
            out += p.names[static_cast<std::size_t>(i)];
        }
        out += "} W={";
        bool first = true;
        for (int i = 0; i < p.size; ++i)
            if (p.is_white(i)) {
                if (!first) out += ",";
                out += p.names[static_cast<std::size_t>(i)];
                first = false;
            }
        out += "} B={";
        first = true;
        for (int i = 0; i < p.size; ++i)
            if (!p.is_white(i)) {
                if (!first) out += ",";
                out += p.names[static_cast<std::size_t>(i)];
                first = false;
            }
        out += "} top=v edges:";
        auto sorted = p.edges;
        for (auto& e : sorted)
            if (e.first > e.second) std::swap(e.first, e.second);
        std::sort(sorted.begin(), sorted.end());
        for (auto [a, b] : sorted) {
            out += " ";
            out += p.names[static_cast<std::size_t>(a)];
            out += "-";
            out += p.names[static_cast<std::size_t>(b)];
        }
        out += "\n";
    }
    return out;
}

} // namespace lclaw
