#include <algorithm>
#include <cassert>
#include <optional>
#include <unordered_map>
#include <vector>

#include "lclaw/clawfree_solver.hpp"

namespace lclaw {

namespace {

// Krausz partition state on a compacted component: cells are cliques covering
// every edge exactly once, every vertex lying in at most two cells. Each cell
// is fully determined on creation ({u} plus the uncovered neighbors of u), so
// dedup by content is sound.
struct KrauszState {
    int n;
    const std::vector<VertexSet>& adj;
    std::vector<VertexSet> cells;
    std::unordered_map<VertexSet, int, VertexSetHash> cell_ids;
    std::vector<std::array<int, 2>> vertex_cells; // -1 = unset
    std::vector<int> dirty;
    bool failed = false;

    KrauszState(int n_, const std::vector<VertexSet>& adj_)
        : n(n_), adj(adj_), vertex_cells(static_cast<std::size_t>(n_), {-1, -1}) {}

    bool is_clique(const VertexSet& s) const {
        for (int a : s)
            for (int b = s.next(a); b != -1; b = s.next(b))
                if (!adj[static_cast<std::size_t>(a)].contains(b)) return false;
        return true;
    }

    void assign(int v, int cid) {
        auto& vc = vertex_cells[static_cast<std::size_t>(v)];
        if (vc[0] == cid || vc[1] == cid) return;
        if (vc[0] == -1)
            vc[0] = cid;
        else if (vc[1] == -1)
            vc[1] = cid;
        else {
            failed = true; // third cell at v
            return;
        }
        dirty.push_back(v);
    }

    void create_cell(const VertexSet& members) {
        if (failed) return;
        if (auto it = cell_ids.find(members); it != cell_ids.end()) {
            // Cell already known; members carry it already.
            return;
        }
        if (!is_clique(members)) {
            failed = true;
            return;
        }
        int cid = static_cast<int>(cells.size());
        cells.push_back(members);
        cell_ids.emplace(members, cid);
        for (int v : members) {
            assign(v, cid);
            if (failed) return;
        }
    }

    // Completes vertex v: derives its second cell from the uncovered part of
    // its neighborhood, or validates the pair it already has.
    void complete(int v) {
        if (failed) return;
        const auto& vc = vertex_cells[static_cast<std::size_t>(v)];
        assert(vc[0] != -1);
        VertexSet covered(n);
        covered |= cells[static_cast<std::size_t>(vc[0])];
        if (vc[1] != -1) covered |= cells[static_cast<std::size_t>(vc[1])];
        covered.remove(v);
        VertexSet rest = adj[static_cast<std::size_t>(v)] - covered;
        if (vc[1] != -1) {
            // Both cells fixed: they must cover N(v) and meet only in v.
            VertexSet common =
                cells[static_cast<std::size_t>(vc[0])] & cells[static_cast<std::size_t>(vc[1])];
            common.remove(v);
            if (!rest.empty() || !common.empty()) failed = true;
            return;
        }
        if (rest.empty()) return; // pendant: a single cell suffices
        VertexSet second = rest;
        second.add(v);
        create_cell(second);
    }

    bool propagate() {
        while (!dirty.empty() && !failed) {
            int v = dirty.back();
            dirty.pop_back();
            complete(v);
        }
        return !failed;
    }
};

std::optional<RootGraph> build_root(const std::vector<int>& verts,
                                    const std::vector<VertexSet>& adj, KrauszState& st) {
    const int n = static_cast<int>(verts.size());
    // Every vertex must have at least one cell.
    for (int v = 0; v < n; ++v)
        if (st.vertex_cells[static_cast<std::size_t>(v)][0] == -1) return std::nullopt;
    RootGraph root;
    root.vertex_count = static_cast<int>(st.cells.size());
    for (int v = 0; v < n; ++v) {
        auto vc = st.vertex_cells[static_cast<std::size_t>(v)];
        int a = vc[0];
        int b = vc[1];
        if (b == -1) b = root.vertex_count++; // private pendant endpoint
        root.edges.push_back({a, b, verts[static_cast<std::size_t>(v)]});
    }
    // Verify the correspondence: adjacency in the component must coincide
    // with root edges sharing an endpoint.
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const auto& eu = root.edges[static_cast<std::size_t>(u)];
            const auto& ev = root.edges[static_cast<std::size_t>(v)];
            bool share = eu.a == ev.a || eu.a == ev.b || eu.b == ev.a || eu.b == ev.b;
            if (share != adj[static_cast<std::size_t>(u)].contains(v)) return std::nullopt;
        }
    return root;
}

} // namespace

std::optional<RootGraph> line_graph_root(const Graph& g, const VertexSet& scope) {
    std::vector<int> verts = scope.to_vector();
    const int n = static_cast<int>(verts.size());
    if (n == 0) return std::nullopt;
    if (n == 1) {
        RootGraph root;
        root.vertex_count = 2;
        root.edges.push_back({0, 1, verts[0]});
        return root;
    }
    // Compacted local adjacency.
    std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int i = 0; i < n; ++i) local[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])] = i;
    std::vector<VertexSet> adj(static_cast<std::size_t>(n), VertexSet(n));
    int edge_count = 0;
    for (int i = 0; i < n; ++i)
        for (int u : g.neighbors(verts[static_cast<std::size_t>(i)]) & scope) {
            adj[static_cast<std::size_t>(i)].add(local[static_cast<std::size_t>(u)]);
            ++edge_count;
        }
    edge_count /= 2;

    // K3 is the one ambiguous line graph; fixed canonical root K_{1,3}.
    if (n == 3 && edge_count == 3) {
        RootGraph root;
        root.vertex_count = 4;
        for (int i = 0; i < 3; ++i) root.edges.push_back({0, i + 1, verts[static_cast<std::size_t>(i)]});
        return root;
    }

    // Start vertex: minimum degree keeps the number of first splits small.
    int v0 = 0;
    for (int v = 1; v < n; ++v)
        if (adj[static_cast<std::size_t>(v)].count() < adj[static_cast<std::size_t>(v0)].count()) v0 = v;

    // The incident edges of v0 split into at most two cells; equivalently the
    // complement of G[N(v0)] must be bipartite, with one side of each
    // component going to each cell.
    std::vector<int> nb = adj[static_cast<std::size_t>(v0)].to_vector();
    const int d = static_cast<int>(nb.size());
    std::vector<int> color(static_cast<std::size_t>(d), -1);
    std::vector<int> comp_of(static_cast<std::size_t>(d), -1);
    int ncomp = 0;
    for (int s = 0; s < d; ++s) {
        if (comp_of[static_cast<std::size_t>(s)] != -1) continue;
        std::vector<int> stack{s};
        comp_of[static_cast<std::size_t>(s)] = ncomp;
        color[static_cast<std::size_t>(s)] = 0;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y = 0; y < d; ++y) {
                if (y == x) continue;
                bool co_edge = !adj[static_cast<std::size_t>(nb[static_cast<std::size_t>(x)])].contains(
                    nb[static_cast<std::size_t>(y)]);
                if (!co_edge) continue;
                if (comp_of[static_cast<std::size_t>(y)] == -1) {
                    comp_of[static_cast<std::size_t>(y)] = ncomp;
                    color[static_cast<std::size_t>(y)] = color[static_cast<std::size_t>(x)] ^ 1;
                    stack.push_back(y);
                } else if (color[static_cast<std::size_t>(y)] == color[static_cast<std::size_t>(x)]) {
                    return std::nullopt; // complement odd cycle: not a line graph
                }
            }
        }
        ++ncomp;
    }

    if (ncomp > 20) return std::nullopt; // split search would be unreasonable
    const std::uint32_t variants = ncomp == 0 ? 1u : (1u << (ncomp - 1));
    for (std::uint32_t mask = 0; mask < variants; ++mask) {
        VertexSet sideA(n), sideB(n);
        for (int s = 0; s < d; ++s) {
            int flip = comp_of[static_cast<std::size_t>(s)] == 0
                           ? 0
                           : static_cast<int>((mask >> (comp_of[static_cast<std::size_t>(s)] - 1)) & 1u);
            if ((color[static_cast<std::size_t>(s)] ^ flip) == 0)
                sideA.add(nb[static_cast<std::size_t>(s)]);
            else
                sideB.add(nb[static_cast<std::size_t>(s)]);
        }
        KrauszState st(n, adj);
        if (!sideA.empty()) {
            VertexSet cell = sideA;
            cell.add(v0);
            st.create_cell(cell);
        }
        if (!sideB.empty()) {
            VertexSet cell = sideB;
            cell.add(v0);
            st.create_cell(cell);
        }
        if (!st.propagate()) continue;
        if (auto root = build_root(verts, adj, st)) return root;
    }
    return std::nullopt;
}

} // namespace lclaw
