#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lclaw/graph.hpp"
#include "lclaw/vertex_set.hpp"

namespace lclaw {

/// One of the fourteen role-labeled claw-containing graphs L_1..L_14. Vertex 0
/// is always the distinguished top vertex "v" (white). White vertices form an
/// independent set; every pattern contains an induced claw and has at most 7
/// vertices.
struct LPattern {
    int id = 0;   // 1..14
    int size = 0; // |V|
    std::array<const char*, 7> names{};
    std::uint8_t white_mask = 0; // bit i set => vertex i is white
    std::vector<std::pair<int, int>> edges;
    std::array<std::uint8_t, 7> adj{}; // adjacency bitmasks, local ids
    Claw claw;                         // a designated induced claw, local ids

    bool is_white(int local) const { return (white_mask >> local) & 1; }
    bool adjacent(int a, int b) const { return (adj[static_cast<std::size_t>(a)] >> b) & 1; }

    /// The pattern as a standalone graph on its local vertex ids.
    Graph to_graph() const;
};

/// The fixed catalog; invariants are validated once on first use.
const std::array<LPattern, 14>& pattern_catalog();

/// An induced embedding of some L_k into a host graph: map[i] is the host
/// vertex of pattern vertex i; map[0] is the anchor (image of top).
struct Embedding {
    int pattern_id = 0;
    std::array<int, 7> map{};
    VertexSet image;
    VertexSet white_image;
};

/// Emits every induced embedding of every L_k into G[scope] with top mapped
/// to anchor, in ascending pattern order, hosts in lexicographic order.
/// Embeddings with identical (image, white image) pairs are emitted once.
/// The visitor returns false to stop early.
void enumerate_embeddings(const Graph& g, const VertexSet& scope, int anchor,
                          const std::function<bool(const Embedding&)>& visit);

std::vector<Embedding> enumerate_embeddings(const Graph& g, const VertexSet& scope, int anchor);

struct EmbeddingMember {
    VertexSet white_image;
    VertexSet anti; ///< anti-neighborhood of the full image within G[scope]
};

/// White image and scope-restricted anti-neighborhood of an embedding; no
/// vertex of `anti` is adjacent to any vertex of the pattern image.
EmbeddingMember embedding_member(const Graph& g, const VertexSet& scope, const Embedding& e);

/// The designated claw of the embedded pattern, mapped to host vertex ids.
Claw embedded_claw(const Embedding& e);

/// Human-readable catalog listing (edge lists plus role sets), one pattern
/// per paragraph. Backs the `patterns` CLI subcommand and docs/patterns.md.
std::string pattern_atlas();

} // namespace lclaw
