#include "lclaw/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "lclaw/mwis.hpp"

namespace lclaw {

namespace {

constexpr int kCertificateMaxN = 30;

using Rng = std::mt19937_64;

std::int64_t rand_weight(Rng& rng, WeightRange r) {
    if (r.lo > r.hi) throw std::invalid_argument("empty weight range");
    std::uniform_int_distribution<std::int64_t> dist(r.lo, r.hi);
    return dist(rng);
}

double clamp_density(double d) { return std::clamp(d, 0.05, 1.0); }

/// Random graph on k vertices guaranteed to contain an induced claw.
Graph random_claw_gadget(Rng& rng, int k) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int attempt = 0; attempt < 50; ++attempt) {
        Graph g(k);
        for (int u = 0; u < k; ++u)
            for (int v = u + 1; v < k; ++v)
                if (coin(rng) < 0.35) g.add_edge(u, v);
        if (!is_claw_free(g)) return g;
    }
    // Planted star fallback: the first four vertices form a claw.
    Graph g(k);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    for (int v = 4; v < k; ++v)
        if (coin(rng) < 0.5) g.add_edge(v, 0);
    return g;
}

/// Root graph with exactly `edge_count` edges; density steers how many root
/// vertices are used (denser root = fewer vertices = denser line graph).
std::vector<std::pair<int, int>> random_root_edges(Rng& rng, int edge_count, double density) {
    if (edge_count <= 0) return {};
    double d = clamp_density(density);
    double target_pairs = static_cast<double>(edge_count) / d;
    int r = static_cast<int>(std::ceil((1.0 + std::sqrt(1.0 + 8.0 * target_pairs)) / 2.0));
    r = std::max(r, 2);
    while (static_cast<long long>(r) * (r - 1) / 2 < edge_count) ++r;
    std::vector<std::pair<int, int>> all;
    for (int u = 0; u < r; ++u)
        for (int v = u + 1; v < r; ++v) all.emplace_back(u, v);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(edge_count));
    return all;
}

/// Relabels vertices by a random permutation and draws weights.
Instance finish_instance(Rng& rng, const Graph& g, WeightRange weights, std::string name,
                         ClassTag tag) {
    const int n = g.vertex_count();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Instance inst;
    inst.name = std::move(name);
    inst.graph = Graph(n);
    for (auto [u, v] : g.edges())
        inst.graph.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    inst.weights.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) inst.weights[static_cast<std::size_t>(v)] = rand_weight(rng, weights);
    inst.tag = tag;
    return inst;
}

} // namespace

Instance gen_lclaw_instance(std::uint64_t seed, int n, int l, double density,
                            WeightRange weights) {
    if (l < 2) throw std::invalid_argument("gen_lclaw_instance requires l >= 2");
    if (n < 4 * (l - 1))
        throw std::invalid_argument("gen_lclaw_instance requires n >= 4(l-1)");
    Rng rng(seed);
    while (true) {
        // Split n into l-1 gadget sizes in [4,7] plus a claw-free block.
        std::vector<int> sizes;
        int used = 0;
        for (int i = 0; i < l - 1; ++i) {
            int remaining_gadgets = l - 1 - i - 1;
            int hi = std::min(7, n - used - 4 * remaining_gadgets);
            std::uniform_int_distribution<int> dist(4, hi);
            int k = dist(rng);
            sizes.push_back(k);
            used += k;
        }
        int block = n - used;

        Graph g(n);
        int base = 0;
        for (int k : sizes) {
            Graph gadget = random_claw_gadget(rng, k);
            for (auto [u, v] : gadget.edges()) g.add_edge(base + u, base + v);
            base += k;
        }
        if (block > 0) {
            Graph lg = line_graph(random_root_edges(rng, block, density));
            for (auto [u, v] : lg.edges()) g.add_edge(base + u, base + v);
        }

        Instance inst = finish_instance(rng, g, weights,
                                        "lclaw" + std::to_string(l) + "-n" + std::to_string(n) +
                                            "-s" + std::to_string(seed),
                                        ClassTag{ClassTag::Kind::LClaw, l});
        if (n > kCertificateMaxN || is_l_claw_free(inst.graph, l)) return inst;
        // Certificate failed (cannot happen by construction); regenerate.
    }
}

Instance gen_2k2free_instance(std::uint64_t seed, int n, WeightRange weights) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    Rng rng(seed);
    while (true) {
        std::uniform_int_distribution<int> ksize(0, n);
        int k = ksize(rng);
        std::uniform_real_distribution<double> pdist(0.2, 0.8);
        double p = pdist(rng);
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        Graph g(n);
        for (int u = 0; u < k; ++u)
            for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
        for (int u = 0; u < k; ++u)
            for (int v = k; v < n; ++v)
                if (coin(rng) < p) g.add_edge(u, v);
        Instance inst = finish_instance(rng, g, weights,
                                        "split-n" + std::to_string(n) + "-s" +
                                            std::to_string(seed),
                                        ClassTag{ClassTag::Kind::TwoK2Free, 0});
        if (inst.graph.vertex_count() > kCertificateMaxN || is_2k2_free(inst.graph)) return inst;
    }
}

Instance gen_linegraph_instance(std::uint64_t seed, int root_n, double density,
                                WeightRange weights) {
    if (root_n < 2) throw std::invalid_argument("root graph needs at least 2 vertices");
    Rng rng(seed);
    double p = clamp_density(density);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < root_n; ++u)
        for (int v = u + 1; v < root_n; ++v)
            if (coin(rng) < p) edges.emplace_back(u, v);
    if (edges.empty()) edges.emplace_back(0, 1);
    Graph lg = line_graph(edges);
    Instance inst = finish_instance(rng, lg, weights,
                                    "linegraph-r" + std::to_string(root_n) + "-s" +
                                        std::to_string(seed),
                                    ClassTag{ClassTag::Kind::ClawFree, 0});
    if (!is_claw_free(inst.graph))
        throw std::logic_error("line graph generator produced a claw"); // unreachable
    return inst;
}

} // namespace lclaw
