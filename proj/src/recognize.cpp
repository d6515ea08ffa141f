#include "ltdkit/recognize.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "ltdkit/errors.hpp"
#include "ltdkit/structure.hpp"

namespace ltdkit {

// ---------------------------------------------------------------------------
// Cobipartite: G is cobipartite iff its complement is bipartite. The witness
// partition is the complement 2-coloring, BFS from the smallest vertex of
// each complement component, that vertex colored 0.
// ---------------------------------------------------------------------------

std::optional<CobipartiteWitness> recognize_cobipartite(const Graph& g) {
    Graph co = complement(g);
    int n = g.order();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : co.neighbors(u)) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    q.push(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;  // odd cycle in the complement
                }
            }
        }
    }
    CobipartiteWitness w;
    for (int v = 0; v < n; ++v) (color[v] == 0 ? w.c1 : w.c2).push_back(v);
    return w;
}

// ---------------------------------------------------------------------------
// Split: degree-sequence test (Hammer–Simeone). With d_1 >= ... >= d_n and
// m = max{i : d_i >= i-1}, the graph is split iff
//   sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i,
// and then the m highest-degree vertices form a clique. Ties between a
// clique vertex and a stable vertex of equal degree are interchangeable, so
// any stable order works; we still check the partition structurally.
// ---------------------------------------------------------------------------

std::optional<SplitWitness> recognize_split(const Graph& g) {
    int n = g.order();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });
    long lhs = 0, rhs = 0;
    int m = 0;
    for (int i = 0; i < n; ++i)
        if (g.degree(order[i]) >= i) m = i + 1;
    for (int i = 0; i < n; ++i)
        (i < m ? lhs : rhs) += g.degree(order[i]);
    if (lhs != long(m) * (m - 1) + rhs) return std::nullopt;

    SplitWitness w;
    w.clique.assign(order.begin(), order.begin() + m);
    w.stable.assign(order.begin() + m, order.end());
    std::sort(w.clique.begin(), w.clique.end());
    std::sort(w.stable.begin(), w.stable.end());
    for (size_t i = 0; i < w.clique.size(); ++i)
        for (size_t j = i + 1; j < w.clique.size(); ++j)
            LTDKIT_CHECK(g.has_edge(w.clique[i], w.clique[j]), "split witness: clique part not complete");
    for (size_t i = 0; i < w.stable.size(); ++i)
        for (size_t j = i + 1; j < w.stable.size(); ++j)
            LTDKIT_CHECK(!g.has_edge(w.stable[i], w.stable[j]), "split witness: stable part has an edge");
    return w;
}

bool recognize_block_graph(const Graph& g) {
    for (const VertexSet& blk : block_cut_tree(g).blocks)
        for (size_t i = 0; i < blk.size(); ++i)
            for (size_t j = i + 1; j < blk.size(); ++j)
                if (!g.has_edge(blk[i], blk[j])) return false;
    return true;
}

bool recognize_subcubic(const Graph& g) { return g.max_degree() <= 3; }

// ---------------------------------------------------------------------------
// Outerplanarity. Per block: a 2-connected block with >= 4 vertices is
// outerplanar iff the edges split into a Hamiltonian boundary cycle plus
// pairwise non-crossing chords. In such a block an edge uv is a chord exactly
// when deleting {u,v} disconnects the rest (the chord separates the two
// boundary arcs), so the boundary cycle is recovered without any embedding
// machinery: every vertex must have exactly two non-chord edges, they must
// close a single n-cycle, and the chords must be non-crossing w.r.t. it.
// Any failure certifies non-outerplanarity because success is equivalent to
// having an outerplanar embedding.
// ---------------------------------------------------------------------------

namespace {

bool connected_without_pair(const Graph& b, int x, int y) {
    int n = b.order();
    int start = -1;
    for (int v = 0; v < n && start == -1; ++v)
        if (v != x && v != y) start = v;
    if (start == -1) return true;
    Bitset seen(n);
    seen.set(x);
    seen.set(y);
    seen.set(start);
    std::vector<int> stack{start};
    int cnt = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : b.neighbors(u))
            if (!seen.test(v)) {
                seen.set(v);
                ++cnt;
                stack.push_back(v);
            }
    }
    return cnt == n - 2;
}

struct BlockAnalysis {
    bool outerplanar = false;
    std::vector<int> cycle;  // Hamiltonian boundary cycle when n >= 3
};

BlockAnalysis analyze_block(const Graph& b) {
    BlockAnalysis res;
    int n = b.order();
    if (n <= 2) {
        res.outerplanar = true;
        return res;
    }
    if (n == 3) {
        res.outerplanar = true;
        res.cycle = {0, 1, 2};
        return res;
    }
    if (b.size() > 2L * n - 3) return res;

    auto edges = b.edges();
    std::vector<std::pair<int, int>> boundary, chords;
    for (auto [u, v] : edges)
        (connected_without_pair(b, u, v) ? boundary : chords).push_back({u, v});

    std::vector<std::vector<int>> bnd(n);
    for (auto [u, v] : boundary) {
        bnd[u].push_back(v);
        bnd[v].push_back(u);
    }
    for (int v = 0; v < n; ++v)
        if (bnd[v].size() != 2) return res;

    std::vector<int> cycle{0, std::min(bnd[0][0], bnd[0][1])};
    while (int(cycle.size()) < n) {
        int cur = cycle.back(), prev = cycle[cycle.size() - 2];
        int nxt = bnd[cur][0] == prev ? bnd[cur][1] : bnd[cur][0];
        if (nxt == 0) break;  // closed early: boundary edges form several cycles
        cycle.push_back(nxt);
    }
    if (int(cycle.size()) < n) return res;
    int last = cycle.back();
    if (bnd[last][0] != 0 && bnd[last][1] != 0) return res;

    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[cycle[i]] = i;
    auto inside = [&](int p, int lo, int hi) { return p > lo && p < hi; };
    for (size_t i = 0; i < chords.size(); ++i) {
        auto [a1, b1] = chords[i];
        int lo1 = std::min(pos[a1], pos[b1]), hi1 = std::max(pos[a1], pos[b1]);
        for (size_t j = i + 1; j < chords.size(); ++j) {
            auto [a2, b2] = chords[j];
            if (inside(pos[a2], lo1, hi1) != inside(pos[b2], lo1, hi1)) {
                if (pos[a2] != lo1 && pos[a2] != hi1 && pos[b2] != lo1 && pos[b2] != hi1)
                    return res;  // properly crossing chords
            }
        }
    }
    res.outerplanar = true;
    res.cycle = std::move(cycle);
    return res;
}

bool outerplanar_decision(const Graph& g) {
    // Fail fast on the edge-count necessary condition, per component.
    for (const VertexSet& comp : connected_components(g)) {
        if (comp.size() < 2) continue;
        long edges = 0;
        SubGraph sub = induce(g, comp);
        edges = sub.g.size();
        if (edges > 2L * long(comp.size()) - 3) return false;
    }
    for (const VertexSet& blk : block_cut_tree(g).blocks)
        if (!analyze_block(induce(g, blk).g).outerplanar) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Witness extraction: starting from a non-outerplanar block, greedily delete
// then contract edges while non-outerplanarity is preserved, dropping
// stranded isolated vertices. K4 and K2,3 are the only minor-minimal
// non-outerplanar graphs, so the reduction must terminate at one of them;
// the contraction history gives the branch sets.
// ---------------------------------------------------------------------------

struct MinorState {
    std::vector<VertexSet> branch;              // branch[i] = original vertices merged into i
    std::vector<std::pair<int, int>> edges;     // simple edges on current ids

    Graph build() const {
        return Graph(int(branch.size()), edges);
    }

    void drop_isolated() {
        std::vector<char> used(branch.size(), 0);
        for (auto [u, v] : edges) used[u] = used[v] = 1;
        std::vector<int> remap(branch.size(), -1);
        std::vector<VertexSet> nb;
        for (size_t i = 0; i < branch.size(); ++i)
            if (used[i]) {
                remap[i] = int(nb.size());
                nb.push_back(branch[i]);
            }
        for (auto& [u, v] : edges) {
            u = remap[u];
            v = remap[v];
        }
        branch = std::move(nb);
    }

    MinorState without_edge(size_t idx) const {
        MinorState s = *this;
        s.edges.erase(s.edges.begin() + long(idx));
        s.drop_isolated();
        return s;
    }

    MinorState contract_edge(size_t idx) const {
        MinorState s = *this;
        auto [keep, gone] = s.edges[idx];
        s.branch[keep] = vset::unite(s.branch[keep], s.branch[gone]);
        std::vector<std::pair<int, int>> ne;
        for (auto [u, v] : s.edges) {
            if (u == gone) u = keep;
            if (v == gone) v = keep;
            if (u == v) continue;
            ne.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(ne.begin(), ne.end());
        ne.erase(std::unique(ne.begin(), ne.end()), ne.end());
        s.edges = std::move(ne);
        // renumber past the emptied slot
        s.branch.erase(s.branch.begin() + gone);
        for (auto& [u, v] : s.edges) {
            if (u > gone) --u;
            if (v > gone) --v;
        }
        s.drop_isolated();
        return s;
    }
};

std::optional<MinorModel> classify_obstruction(const MinorState& st) {
    Graph h = st.build();
    int n = h.order();
    MinorModel m;
    if (n == 4 && h.size() == 6) {
        m.target = MinorModel::K4;
        m.branch_sets = st.branch;
        return m;
    }
    if (n == 5 && h.size() == 6) {
        VertexSet small, big;
        for (int v = 0; v < 5; ++v) (h.degree(v) == 3 ? small : big).push_back(v);
        if (small.size() != 2 || big.size() != 3) return std::nullopt;
        if (h.has_edge(small[0], small[1])) return std::nullopt;
        for (int b : big) {
            if (h.degree(b) != 2) return std::nullopt;
            for (int s : small)
                if (!h.has_edge(b, s)) return std::nullopt;
        }
        m.target = MinorModel::K23;
        for (int s : small) m.branch_sets.push_back(st.branch[s]);
        for (int b : big) m.branch_sets.push_back(st.branch[b]);
        return m;
    }
    return std::nullopt;
}

MinorModel extract_obstruction(const Graph& block) {
    MinorState st;
    st.branch.resize(block.order());
    for (int v = 0; v < block.order(); ++v) st.branch[v] = {v};
    st.edges = block.edges();

    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < st.edges.size();) {
            MinorState cand = st.without_edge(i);
            if (!outerplanar_decision(cand.build())) {
                st = std::move(cand);
                changed = true;
            } else {
                ++i;
            }
        }
        for (size_t i = 0; i < st.edges.size();) {
            MinorState cand = st.contract_edge(i);
            if (!outerplanar_decision(cand.build())) {
                st = std::move(cand);
                changed = true;
            } else {
                ++i;
            }
        }
    }
    auto model = classify_obstruction(st);
    LTDKIT_CHECK(model.has_value(), "obstruction reduction did not end at K4 or K2,3");
    return *model;
}

}  // namespace

bool validate_minor_model(const Graph& g, const MinorModel& m) {
    size_t expect = m.target == MinorModel::K4 ? 4 : 5;
    if (m.branch_sets.size() != expect) return false;
    Bitset seen(g.order());
    for (const VertexSet& bs : m.branch_sets) {
        if (bs.empty()) return false;
        for (int v : bs) {
            if (v < 0 || v >= g.order() || seen.test(v)) return false;
            seen.set(v);
        }
        if (!is_connected(induce(g, bs).g)) return false;
    }
    auto linked = [&](const VertexSet& a, const VertexSet& b) {
        for (int u : a)
            for (int v : b)
                if (g.has_edge(u, v)) return true;
        return false;
    };
    if (m.target == MinorModel::K4) {
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = i + 1; j < 4; ++j)
                if (!linked(m.branch_sets[i], m.branch_sets[j])) return false;
    } else {
        for (size_t i = 0; i < 2; ++i)
            for (size_t j = 2; j < 5; ++j)
                if (!linked(m.branch_sets[i], m.branch_sets[j])) return false;
    }
    return true;
}

OuterplanarResult recognize_outerplanar(const Graph& g) {
    OuterplanarResult res;
    for (const VertexSet& blk : block_cut_tree(g).blocks) {
        SubGraph sub = induce(g, blk);
        if (!analyze_block(sub.g).outerplanar) {
            MinorModel local = extract_obstruction(sub.g);
            for (VertexSet& bs : local.branch_sets) bs = sub.to_orig(bs);
            LTDKIT_CHECK(validate_minor_model(g, local), "extracted minor model failed validation");
            res.obstruction = std::move(local);
            return res;
        }
    }
    res.outerplanar = true;
    return res;
}

std::vector<int> ham_cycle_outerplanar(const Graph& g) {
    int n = g.order();
    if (n < 3) throw usage_error("ham_cycle_outerplanar: order must be >= 3");
    BlockCutTree t = block_cut_tree(g);
    if (t.blocks.size() != 1 || int(t.blocks[0].size()) != n)
        throw usage_error("ham_cycle_outerplanar: graph is not 2-connected");
    BlockAnalysis a = analyze_block(g);
    if (!a.outerplanar) throw usage_error("ham_cycle_outerplanar: graph is not outerplanar");

    // Normalize: start at vertex 0's position... rotate to smallest vertex,
    // orient so the successor is the smaller neighbor.
    std::vector<int>& c = a.cycle;
    int k = int(std::min_element(c.begin(), c.end()) - c.begin());
    std::rotate(c.begin(), c.begin() + k, c.end());
    if (c[1] > c[n - 1]) std::reverse(c.begin() + 1, c.end());
    return c;
}

LegDecomposition leg_decomposition(const Graph& g) {
    if (!is_connected(g)) throw usage_error("leg_decomposition: graph must be connected");
    if (is_tree(g)) throw usage_error("leg_decomposition: graph must not be a tree");

    LegDecomposition ld;
    for (int leaf = 0; leaf < g.order(); ++leaf) {
        if (g.degree(leaf) != 1) continue;
        std::vector<int> path{leaf};
        int prev = leaf, cur = g.neighbors(leaf)[0];
        while (g.degree(cur) == 2) {
            int nxt = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
            path.push_back(cur);
            prev = cur;
            cur = nxt;
        }
        path.push_back(cur);  // the anchor, deg >= 3 since g has a cycle
        std::reverse(path.begin(), path.end());
        ld.legs.push_back(std::move(path));
    }

    // Core: drop every bridge, then every stranded isolated vertex.
    auto brs = bridges(g);
    std::vector<std::pair<int, int>> kept;
    for (auto [u, v] : g.edges())
        if (!std::binary_search(brs.begin(), brs.end(), std::make_pair(u, v)))
            kept.emplace_back(u, v);
    std::vector<int> deg(g.order(), 0);
    for (auto [u, v] : kept) {
        ++deg[u];
        ++deg[v];
    }
    for (int v = 0; v < g.order(); ++v)
        if (deg[v] > 0) ld.core.push_back(v);

    ld.small_bridge_hypothesis = true;
    for (auto [u, v] : brs) {
        // size of u's side of g - uv
        Bitset seen(g.order());
        seen.set(u);
        std::vector<int> stack{u};
        int cnt = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : g.neighbors(x)) {
                if (x == u && y == v) continue;
                if (!seen.test(y)) {
                    seen.set(y);
                    ++cnt;
                    stack.push_back(y);
                }
            }
        }
        int small = std::min(cnt, g.order() - cnt);
        if (small > 3) {
            ld.small_bridge_hypothesis = false;
            ld.hypothesis_note = "bridge (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") separates a component of order " + std::to_string(small);
            break;
        }
    }
    return ld;
}

}  // namespace ltdkit
