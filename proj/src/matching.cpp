#include "lclaw/matching.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

namespace lclaw {

namespace {

constexpr std::int64_t kNoDelta = std::numeric_limits<std::int64_t>::max();

// Primal-dual blossom search. Vertex duals, slacks and deltas are kept
// pre-multiplied so that everything stays in 64-bit integers; input weights
// are doubled on entry, which keeps the one halving step (delta type 3)
// exact for integer inputs.
struct BlossomMatcher {
    int nvertex;
    int nedge;
    std::vector<std::array<std::int64_t, 3>> edges; // (u, v, 2*weight)
    std::vector<int> endpoint;                      // endpoint[p] = edges[p/2][p%2]
    std::vector<std::vector<int>> neighbend;        // remote endpoints per vertex

    std::vector<int> mate; // remote endpoint of matched edge, or -1
    std::vector<int> label;
    std::vector<int> labelend;
    std::vector<int> inblossom;
    std::vector<int> blossomparent;
    std::vector<std::vector<int>> blossomchilds;
    std::vector<int> blossombase;
    std::vector<std::vector<int>> blossomendps;
    std::vector<int> bestedge;
    std::vector<std::vector<int>> blossombestedges;
    std::vector<int> unusedblossoms;
    std::vector<std::int64_t> dualvar;
    std::vector<char> allowedge;
    std::vector<int> queue;

    explicit BlossomMatcher(int n, std::span<const WeightedEdge> input) : nvertex(n) {
        for (const auto& e : input) {
            assert(e.u != e.v && e.u >= 0 && e.v >= 0 && e.u < n && e.v < n);
            edges.push_back({e.u, e.v, 2 * e.weight});
        }
        nedge = static_cast<int>(edges.size());
        std::int64_t maxweight = 0;
        for (const auto& e : edges) maxweight = std::max(maxweight, e[2]);
        endpoint.resize(static_cast<std::size_t>(2 * nedge));
        for (int p = 0; p < 2 * nedge; ++p)
            endpoint[static_cast<std::size_t>(p)] =
                static_cast<int>(edges[static_cast<std::size_t>(p / 2)][static_cast<std::size_t>(p % 2)]);
        neighbend.assign(static_cast<std::size_t>(nvertex), {});
        for (int k = 0; k < nedge; ++k) {
            neighbend[static_cast<std::size_t>(edges[static_cast<std::size_t>(k)][0])].push_back(2 * k + 1);
            neighbend[static_cast<std::size_t>(edges[static_cast<std::size_t>(k)][1])].push_back(2 * k);
        }
        mate.assign(static_cast<std::size_t>(nvertex), -1);
        label.assign(static_cast<std::size_t>(2 * nvertex), 0);
        labelend.assign(static_cast<std::size_t>(2 * nvertex), -1);
        inblossom.resize(static_cast<std::size_t>(nvertex));
        for (int v = 0; v < nvertex; ++v) inblossom[static_cast<std::size_t>(v)] = v;
        blossomparent.assign(static_cast<std::size_t>(2 * nvertex), -1);
        blossomchilds.assign(static_cast<std::size_t>(2 * nvertex), {});
        blossombase.resize(static_cast<std::size_t>(2 * nvertex));
        for (int v = 0; v < nvertex; ++v) blossombase[static_cast<std::size_t>(v)] = v;
        for (int b = nvertex; b < 2 * nvertex; ++b) blossombase[static_cast<std::size_t>(b)] = -1;
        blossomendps.assign(static_cast<std::size_t>(2 * nvertex), {});
        bestedge.assign(static_cast<std::size_t>(2 * nvertex), -1);
        blossombestedges.assign(static_cast<std::size_t>(2 * nvertex), {});
        for (int b = nvertex; b < 2 * nvertex; ++b) unusedblossoms.push_back(b);
        dualvar.assign(static_cast<std::size_t>(2 * nvertex), 0);
        for (int v = 0; v < nvertex; ++v) dualvar[static_cast<std::size_t>(v)] = maxweight;
        allowedge.assign(static_cast<std::size_t>(nedge), 0);
    }

    std::int64_t slack(int k) const {
        const auto& e = edges[static_cast<std::size_t>(k)];
        return dualvar[static_cast<std::size_t>(e[0])] + dualvar[static_cast<std::size_t>(e[1])] -
               2 * e[2];
    }

    void blossom_leaves(int b, std::vector<int>& out) const {
        if (b < nvertex) {
            out.push_back(b);
        } else {
            for (int t : blossomchilds[static_cast<std::size_t>(b)]) blossom_leaves(t, out);
        }
    }

    void assign_label(int w, int t, int p) {
        int b = inblossom[static_cast<std::size_t>(w)];
        assert(label[static_cast<std::size_t>(w)] == 0 && label[static_cast<std::size_t>(b)] == 0);
        label[static_cast<std::size_t>(w)] = label[static_cast<std::size_t>(b)] = t;
        labelend[static_cast<std::size_t>(w)] = labelend[static_cast<std::size_t>(b)] = p;
        bestedge[static_cast<std::size_t>(w)] = bestedge[static_cast<std::size_t>(b)] = -1;
        if (t == 1) {
            blossom_leaves(b, queue);
        } else if (t == 2) {
            int base = blossombase[static_cast<std::size_t>(b)];
            assert(mate[static_cast<std::size_t>(base)] >= 0);
            assign_label(endpoint[static_cast<std::size_t>(mate[static_cast<std::size_t>(base)])], 1,
                         mate[static_cast<std::size_t>(base)] ^ 1);
        }
    }

    // Trace back from both endpoints of edge k to find a common ancestor in
    // the alternating tree; returns its base vertex or -1 (augmenting path).
    int scan_blossom(int v, int w) {
        std::vector<int> path;
        int base = -1;
        while (v != -1 || w != -1) {
            int b = inblossom[static_cast<std::size_t>(v)];
            if (label[static_cast<std::size_t>(b)] & 4) {
                base = blossombase[static_cast<std::size_t>(b)];
                break;
            }
            assert(label[static_cast<std::size_t>(b)] == 1);
            path.push_back(b);
            label[static_cast<std::size_t>(b)] = 5;
            assert(labelend[static_cast<std::size_t>(b)] ==
                   mate[static_cast<std::size_t>(blossombase[static_cast<std::size_t>(b)])]);
            if (labelend[static_cast<std::size_t>(b)] == -1) {
                v = -1; // b is single; stop tracing this side
            } else {
                v = endpoint[static_cast<std::size_t>(labelend[static_cast<std::size_t>(b)])];
                b = inblossom[static_cast<std::size_t>(v)];
                assert(label[static_cast<std::size_t>(b)] == 2);
                assert(labelend[static_cast<std::size_t>(b)] >= 0);
                v = endpoint[static_cast<std::size_t>(labelend[static_cast<std::size_t>(b)])];
            }
            if (w != -1) std::swap(v, w);
        }
        for (int b : path) label[static_cast<std::size_t>(b)] = 1;
        return base;
    }

    // Contract the cycle through edge k and the common ancestor `base` into a
    // new blossom.
    void add_blossom(int base, int k) {
        int v = static_cast<int>(edges[static_cast<std::size_t>(k)][0]);
        int w = static_cast<int>(edges[static_cast<std::size_t>(k)][1]);
        int bb = inblossom[static_cast<std::size_t>(base)];
        int bv = inblossom[static_cast<std::size_t>(v)];
        int bw = inblossom[static_cast<std::size_t>(w)];
        int b = unusedblossoms.back();
        unusedblossoms.pop_back();
        blossombase[static_cast<std::size_t>(b)] = base;
        blossomparent[static_cast<std::size_t>(b)] = -1;
        blossomparent[static_cast<std::size_t>(bb)] = b;
        std::vector<int> path;
        std::vector<int> endps;
        while (bv != bb) {
            blossomparent[static_cast<std::size_t>(bv)] = b;
            path.push_back(bv);
            endps.push_back(labelend[static_cast<std::size_t>(bv)]);
            assert(labelend[static_cast<std::size_t>(bv)] >= 0);
            v = endpoint[static_cast<std::size_t>(labelend[static_cast<std::size_t>(bv)])];
            bv = inblossom[static_cast<std::size_t>(v)];
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(endps.begin(), endps.end());
        endps.push_back(2 * k);
        while (bw != bb) {
            blossomparent[static_cast<std::size_t>(bw)] = b;
            path.push_back(bw);
            endps.push_back(labelend[static_cast<std::size_t>(bw)] ^ 1);
            assert(labelend[static_cast<std::size_t>(bw)] >= 0);
            w = endpoint[static_cast<std::size_t>(labelend[static_cast<std::size_t>(bw)])];
            bw = inblossom[static_cast<std::size_t>(w)];
        }
        assert(label[static_cast<std::size_t>(bb)] == 1);
        blossomchilds[static_cast<std::size_t>(b)] = std::move(path);
        blossomendps[static_cast<std::size_t>(b)] = std::move(endps);
        label[static_cast<std::size_t>(b)] = 1;
        labelend[static_cast<std::size_t>(b)] = labelend[static_cast<std::size_t>(bb)];
        dualvar[static_cast<std::size_t>(b)] = 0;
        std::vector<int> leaves;
        blossom_leaves(b, leaves);
        for (int lv : leaves) {
            if (label[static_cast<std::size_t>(inblossom[static_cast<std::size_t>(lv)])] == 2)
                queue.push_back(lv);
            inblossom[static_cast<std::size_t>(lv)] = b;
        }
        // Recompute least-slack edges into neighbouring S-blossoms.
        std::vector<int> bestedgeto(static_cast<std::size_t>(2 * nvertex), -1);
        for (int bv2 : blossomchilds[static_cast<std::size_t>(b)]) {
            std::vector<std::vector<int>> nblists;
            if (blossombestedges[static_cast<std::size_t>(bv2)].empty()) {
                std::vector<int> lvs;
                blossom_leaves(bv2, lvs);
                for (int lv : lvs) {
                    std::vector<int> ks;
                    ks.reserve(neighbend[static_cast<std::size_t>(lv)].size());
                    for (int p : neighbend[static_cast<std::size_t>(lv)]) ks.push_back(p / 2);
                    nblists.push_back(std::move(ks));
                }
            } else {
                nblists.push_back(blossombestedges[static_cast<std::size_t>(bv2)]);
            }
            for (const auto& nblist : nblists) {
                for (int k2 : nblist) {
                    int i = static_cast<int>(edges[static_cast<std::size_t>(k2)][0]);
                    int j = static_cast<int>(edges[static_cast<std::size_t>(k2)][1]);
                    if (inblossom[static_cast<std::size_t>(j)] == b) std::swap(i, j);
                    int bj = inblossom[static_cast<std::size_t>(j)];
                    if (bj != b && label[static_cast<std::size_t>(bj)] == 1 &&
                        (bestedgeto[static_cast<std::size_t>(bj)] == -1 ||
                         slack(k2) < slack(bestedgeto[static_cast<std::size_t>(bj)])))
                        bestedgeto[static_cast<std::size_t>(bj)] = k2;
                }
            }
            blossombestedges[static_cast<std::size_t>(bv2)].clear();
            bestedge[static_cast<std::size_t>(bv2)] = -1;
        }
        auto& bbe = blossombestedges[static_cast<std::size_t>(b)];
        bbe.clear();
        for (int k2 : bestedgeto)
            if (k2 != -1) bbe.push_back(k2);
        bestedge[static_cast<std::size_t>(b)] = -1;
        for (int k2 : bbe)
            if (bestedge[static_cast<std::size_t>(b)] == -1 ||
                slack(k2) < slack(bestedge[static_cast<std::size_t>(b)]))
                bestedge[static_cast<std::size_t>(b)] = k2;
    }

    void expand_blossom(int b, bool endstage) {
        for (int s : blossomchilds[static_cast<std::size_t>(b)]) {
            blossomparent[static_cast<std::size_t>(s)] = -1;
            if (s < nvertex) {
                inblossom[static_cast<std::size_t>(s)] = s;
            } else if (endstage && dualvar[static_cast<std::size_t>(s)] == 0) {
                expand_blossom(s, endstage);
            } else {
                std::vector<int> lvs;
                blossom_leaves(s, lvs);
                for (int lv : lvs) inblossom[static_cast<std::size_t>(lv)] = s;
            }
        }
        if (!endstage && label[static_cast<std::size_t>(b)] == 2) {
            // The expanding blossom was reached through a T-edge; relabel the
            // children on the path from the entry child to the base.
            assert(labelend[static_cast<std::size_t>(b)] >= 0);
            int entrychild = inblossom[static_cast<std::size_t>(
                endpoint[static_cast<std::size_t>(labelend[static_cast<std::size_t>(b)] ^ 1)])];
            const auto& childs = blossomchilds[static_cast<std::size_t>(b)];
            const auto& endps = blossomendps[static_cast<std::size_t>(b)];
            int nchild = static_cast<int>(childs.size());
            int j = static_cast<int>(
                std::find(childs.begin(), childs.end(), entrychild) - childs.begin());
            int jstep, endptrick;
            if (j & 1) {
                j -= nchild;
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }
            auto at = [&](int idx) { return endps[static_cast<std::size_t>(((idx % nchild) + nchild) % nchild)]; };
            auto child_at = [&](int idx) {
                return childs[static_cast<std::size_t>(((idx % nchild) + nchild) % nchild)];
            };
            int p = labelend[static_cast<std::size_t>(b)];
            while (j != 0) {
                label[static_cast<std::size_t>(endpoint[static_cast<std::size_t>(p ^ 1)])] = 0;
                label[static_cast<std::size_t>(
                    endpoint[static_cast<std::size_t>(at(j - endptrick) ^ endptrick ^ 1)])] = 0;
                assign_label(endpoint[static_cast<std::size_t>(p ^ 1)], 2, p);
                allowedge[static_cast<std::size_t>(at(j - endptrick) / 2)] = 1;
                j += jstep;
                p = at(j - endptrick) ^ endptrick;
                allowedge[static_cast<std::size_t>(p / 2)] = 1;
                j += jstep;
            }
            // Relabel the base sub-blossom through the edge just stepped,
            // without walking through to its mate (that lives outside b).
            int bv = child_at(j);
            label[static_cast<std::size_t>(endpoint[static_cast<std::size_t>(p ^ 1)])] =
                label[static_cast<std::size_t>(bv)] = 2;
            labelend[static_cast<std::size_t>(endpoint[static_cast<std::size_t>(p ^ 1)])] =
                labelend[static_cast<std::size_t>(bv)] = p;
            bestedge[static_cast<std::size_t>(bv)] = -1;
            j += jstep;
            while (child_at(j) != entrychild) {
                bv = child_at(j);
                if (label[static_cast<std::size_t>(bv)] == 1) {
                    j += jstep;
                    continue;
                }
                std::vector<int> lvs;
                blossom_leaves(bv, lvs);
                int labeled = -1;
                for (int lv : lvs)
                    if (label[static_cast<std::size_t>(lv)] != 0) {
                        labeled = lv;
                        break;
                    }
                if (labeled != -1) {
                    assert(label[static_cast<std::size_t>(labeled)] == 2);
                    assert(inblossom[static_cast<std::size_t>(labeled)] == bv);
                    label[static_cast<std::size_t>(labeled)] = 0;
                    label[static_cast<std::size_t>(endpoint[static_cast<std::size_t>(
                        mate[static_cast<std::size_t>(blossombase[static_cast<std::size_t>(bv)])])])] = 0;
                    assign_label(labeled, 2, labelend[static_cast<std::size_t>(labeled)]);
                }
                j += jstep;
            }
        }
        label[static_cast<std::size_t>(b)] = -1;
        labelend[static_cast<std::size_t>(b)] = -1;
        blossomchilds[static_cast<std::size_t>(b)].clear();
        blossomendps[static_cast<std::size_t>(b)].clear();
        blossombase[static_cast<std::size_t>(b)] = -1;
        blossombestedges[static_cast<std::size_t>(b)].clear();
        bestedge[static_cast<std::size_t>(b)] = -1;
        unusedblossoms.push_back(b);
    }

    // Swap matched and unmatched edges along the path through blossom b from
    // vertex v to the base.
    void augment_blossom(int b, int v) {
        int t = v;
        while (blossomparent[static_cast<std::size_t>(t)] != b)
            t = blossomparent[static_cast<std::size_t>(t)];
        if (t >= nvertex) augment_blossom(t, v);
        auto& childs = blossomchilds[static_cast<std::size_t>(b)];
        auto& endps = blossomendps[static_cast<std::size_t>(b)];
        int nchild = static_cast<int>(childs.size());
        int i = static_cast<int>(std::find(childs.begin(), childs.end(), t) - childs.begin());
        int j = i;
        int jstep, endptrick;
        if (i & 1) {
            j -= nchild;
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        auto at = [&](int idx) { return endps[static_cast<std::size_t>(((idx % nchild) + nchild) % nchild)]; };
        auto child_at = [&](int idx) {
            return childs[static_cast<std::size_t>(((idx % nchild) + nchild) % nchild)];
        };
        while (j != 0) {
            j += jstep;
            t = child_at(j);
            int p = at(j - endptrick) ^ endptrick;
            if (t >= nvertex) augment_blossom(t, endpoint[static_cast<std::size_t>(p)]);
            j += jstep;
            t = child_at(j);
            if (t >= nvertex) augment_blossom(t, endpoint[static_cast<std::size_t>(p ^ 1)]);
            mate[static_cast<std::size_t>(endpoint[static_cast<std::size_t>(p)])] = p ^ 1;
            mate[static_cast<std::size_t>(endpoint[static_cast<std::size_t>(p ^ 1)])] = p;
        }
        std::rotate(childs.begin(), childs.begin() + i, childs.end());
        std::rotate(endps.begin(), endps.begin() + i, endps.end());
        blossombase[static_cast<std::size_t>(b)] =
            blossombase[static_cast<std::size_t>(childs[0])];
        assert(blossombase[static_cast<std::size_t>(b)] == v);
    }

    // Augment along the path through tight edge k between two S-vertices in
    // different trees.
    void augment_matching(int k) {
        int v = static_cast<int>(edges[static_cast<std::size_t>(k)][0]);
        int w = static_cast<int>(edges[static_cast<std::size_t>(k)][1]);
        for (auto [s0, p0] : {std::pair{v, 2 * k + 1}, std::pair{w, 2 * k}}) {
            int s = s0, p = p0;
            while (true) {
                int bs = inblossom[static_cast<std::size_t>(s)];
                assert(label[static_cast<std::size_t>(bs)] == 1);
                assert(labelend[static_cast<std::size_t>(bs)] ==
                       mate[static_cast<std::size_t>(blossombase[static_cast<std::size_t>(bs)])]);
                if (bs >= nvertex) augment_blossom(bs, s);
                mate[static_cast<std::size_t>(s)] = p;
                if (labelend[static_cast<std::size_t>(bs)] == -1) break; // reached a tree root
                int t = endpoint[static_cast<std::size_t>(labelend[static_cast<std::size_t>(bs)])];
                int bt = inblossom[static_cast<std::size_t>(t)];
                assert(label[static_cast<std::size_t>(bt)] == 2);
                assert(labelend[static_cast<std::size_t>(bt)] >= 0);
                s = endpoint[static_cast<std::size_t>(labelend[static_cast<std::size_t>(bt)])];
                int j = endpoint[static_cast<std::size_t>(labelend[static_cast<std::size_t>(bt)] ^ 1)];
                assert(blossombase[static_cast<std::size_t>(bt)] == t);
                if (bt >= nvertex) augment_blossom(bt, j);
                mate[static_cast<std::size_t>(j)] = labelend[static_cast<std::size_t>(bt)];
                p = labelend[static_cast<std::size_t>(bt)] ^ 1;
            }
        }
    }

    std::vector<int> run() {
        if (nedge == 0) return std::vector<int>(static_cast<std::size_t>(nvertex), -1);
        for (int stage = 0; stage < nvertex; ++stage) {
            std::fill(label.begin(), label.end(), 0);
            std::fill(bestedge.begin(), bestedge.end(), -1);
            for (int b = nvertex; b < 2 * nvertex; ++b)
                blossombestedges[static_cast<std::size_t>(b)].clear();
            std::fill(allowedge.begin(), allowedge.end(), 0);
            queue.clear();
            for (int v = 0; v < nvertex; ++v)
                if (mate[static_cast<std::size_t>(v)] == -1 &&
                    label[static_cast<std::size_t>(inblossom[static_cast<std::size_t>(v)])] == 0)
                    assign_label(v, 1, -1);
            bool augmented = false;
            while (true) {
                while (!queue.empty() && !augmented) {
                    int v = queue.back();
                    queue.pop_back();
                    assert(label[static_cast<std::size_t>(inblossom[static_cast<std::size_t>(v)])] == 1);
                    for (int p : neighbend[static_cast<std::size_t>(v)]) {
                        int k = p / 2;
                        int w = endpoint[static_cast<std::size_t>(p)];
                        if (inblossom[static_cast<std::size_t>(v)] ==
                            inblossom[static_cast<std::size_t>(w)])
                            continue;
                        std::int64_t kslack = 0;
                        if (!allowedge[static_cast<std::size_t>(k)]) {
                            kslack = slack(k);
                            if (kslack <= 0) allowedge[static_cast<std::size_t>(k)] = 1;
                        }
                        if (allowedge[static_cast<std::size_t>(k)]) {
                            int bw = inblossom[static_cast<std::size_t>(w)];
                            if (label[static_cast<std::size_t>(bw)] == 0) {
                                assign_label(w, 2, p ^ 1);
                            } else if (label[static_cast<std::size_t>(bw)] == 1) {
                                int base = scan_blossom(v, w);
                                if (base >= 0) {
                                    add_blossom(base, k);
                                } else {
                                    augment_matching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if (label[static_cast<std::size_t>(w)] == 0) {
                                assert(label[static_cast<std::size_t>(bw)] == 2);
                                label[static_cast<std::size_t>(w)] = 2;
                                labelend[static_cast<std::size_t>(w)] = p ^ 1;
                            }
                        } else if (label[static_cast<std::size_t>(
                                       inblossom[static_cast<std::size_t>(w)])] == 1) {
                            int b = inblossom[static_cast<std::size_t>(v)];
                            if (bestedge[static_cast<std::size_t>(b)] == -1 ||
                                kslack < slack(bestedge[static_cast<std::size_t>(b)]))
                                bestedge[static_cast<std::size_t>(b)] = k;
                        } else if (label[static_cast<std::size_t>(w)] == 0) {
                            if (bestedge[static_cast<std::size_t>(w)] == -1 ||
                                kslack < slack(bestedge[static_cast<std::size_t>(w)]))
                                bestedge[static_cast<std::size_t>(w)] = k;
                        }
                    }
                }
                if (augmented) break;

                // Compute the largest feasible dual update.
                int deltatype = 1;
                std::int64_t delta = kNoDelta;
                int deltaedge = -1, deltablossom = -1;
                for (int v = 0; v < nvertex; ++v)
                    delta = std::min(delta, dualvar[static_cast<std::size_t>(v)]);
                for (int v = 0; v < nvertex; ++v)
                    if (label[static_cast<std::size_t>(inblossom[static_cast<std::size_t>(v)])] == 0 &&
                        bestedge[static_cast<std::size_t>(v)] != -1) {
                        std::int64_t d = slack(bestedge[static_cast<std::size_t>(v)]);
                        if (d < delta) {
                            delta = d;
                            deltatype = 2;
                            deltaedge = bestedge[static_cast<std::size_t>(v)];
                        }
                    }
                for (int b = 0; b < 2 * nvertex; ++b)
                    if (blossomparent[static_cast<std::size_t>(b)] == -1 &&
                        label[static_cast<std::size_t>(b)] == 1 &&
                        bestedge[static_cast<std::size_t>(b)] != -1) {
                        std::int64_t kslack = slack(bestedge[static_cast<std::size_t>(b)]);
                        assert(kslack % 2 == 0);
                        std::int64_t d = kslack / 2;
                        if (d < delta) {
                            delta = d;
                            deltatype = 3;
                            deltaedge = bestedge[static_cast<std::size_t>(b)];
                        }
                    }
                for (int b = nvertex; b < 2 * nvertex; ++b)
                    if (blossombase[static_cast<std::size_t>(b)] >= 0 &&
                        blossomparent[static_cast<std::size_t>(b)] == -1 &&
                        label[static_cast<std::size_t>(b)] == 2 &&
                        dualvar[static_cast<std::size_t>(b)] < delta) {
                        delta = dualvar[static_cast<std::size_t>(b)];
                        deltatype = 4;
                        deltablossom = b;
                    }

                for (int v = 0; v < nvertex; ++v) {
                    int lbl = label[static_cast<std::size_t>(inblossom[static_cast<std::size_t>(v)])];
                    if (lbl == 1)
                        dualvar[static_cast<std::size_t>(v)] -= delta;
                    else if (lbl == 2)
                        dualvar[static_cast<std::size_t>(v)] += delta;
                }
                for (int b = nvertex; b < 2 * nvertex; ++b)
                    if (blossombase[static_cast<std::size_t>(b)] >= 0 &&
                        blossomparent[static_cast<std::size_t>(b)] == -1) {
                        if (label[static_cast<std::size_t>(b)] == 1)
                            dualvar[static_cast<std::size_t>(b)] += delta;
                        else if (label[static_cast<std::size_t>(b)] == 2)
                            dualvar[static_cast<std::size_t>(b)] -= delta;
                    }

                if (deltatype == 1) break; // optimum reached
                if (deltatype == 2) {
                    allowedge[static_cast<std::size_t>(deltaedge)] = 1;
                    int i = static_cast<int>(edges[static_cast<std::size_t>(deltaedge)][0]);
                    int j = static_cast<int>(edges[static_cast<std::size_t>(deltaedge)][1]);
                    if (label[static_cast<std::size_t>(inblossom[static_cast<std::size_t>(i)])] == 0)
                        std::swap(i, j);
                    assert(label[static_cast<std::size_t>(inblossom[static_cast<std::size_t>(i)])] == 1);
                    queue.push_back(i);
                } else if (deltatype == 3) {
                    allowedge[static_cast<std::size_t>(deltaedge)] = 1;
                    int i = static_cast<int>(edges[static_cast<std::size_t>(deltaedge)][0]);
                    assert(label[static_cast<std::size_t>(inblossom[static_cast<std::size_t>(i)])] == 1);
                    queue.push_back(i);
                } else if (deltatype == 4) {
                    expand_blossom(deltablossom, false);
                }
            }
            if (!augmented) break;
            // End of a successful stage: expand unneeded S-blossoms.
            for (int b = nvertex; b < 2 * nvertex; ++b)
                if (blossomparent[static_cast<std::size_t>(b)] == -1 &&
                    blossombase[static_cast<std::size_t>(b)] >= 0 &&
                    label[static_cast<std::size_t>(b)] == 1 &&
                    dualvar[static_cast<std::size_t>(b)] == 0)
                    expand_blossom(b, true);
        }
        std::vector<int> result(static_cast<std::size_t>(nvertex), -1);
        for (int v = 0; v < nvertex; ++v)
            if (mate[static_cast<std::size_t>(v)] >= 0)
                result[static_cast<std::size_t>(v)] =
                    endpoint[static_cast<std::size_t>(mate[static_cast<std::size_t>(v)])];
        for (int v = 0; v < nvertex; ++v)
            assert(result[static_cast<std::size_t>(v)] == -1 ||
                   result[static_cast<std::size_t>(result[static_cast<std::size_t>(v)])] == v);
        return result;
    }
};

} // namespace

std::vector<int> max_weight_matching(int n, std::span<const WeightedEdge> edges) {
    std::vector<WeightedEdge> keep;
    keep.reserve(edges.size());
    for (const auto& e : edges)
        if (e.weight > 0) keep.push_back(e);
    BlossomMatcher m(n, keep);
    return m.run();
}

std::int64_t matching_weight(std::span<const WeightedEdge> edges, const std::vector<int>& mate) {
    std::int64_t total = 0;
    for (const auto& e : edges)
        if (mate[static_cast<std::size_t>(e.u)] == e.v) total += e.weight;
    return total;
}

} // namespace lclaw
