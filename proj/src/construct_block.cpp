#include <algorithm>
#include <string>

#include "construct_internal.hpp"
#include "ltdkit/errors.hpp"
#include "ltdkit/structure.hpp"

namespace ltdkit {

// ---------------------------------------------------------------------------
// Block graphs. The theorem's induction, run as a recursion: root the
// block-cut tree at the smallest cut vertex, take a deepest leaf block, and
// let p be the cut vertex three levels up. The blocks that are children or
// great-grandchildren of v_p form B_p; U is their vertex union, A the cut
// vertices inside U. A is an LTD-set of G[U]; the remainder G - U is handled
// recursively, with two rounds of twin repair (G'' = G' - x, G* = G'' - y)
// when deleting U creates twins.
// ---------------------------------------------------------------------------

namespace {

bool iso_p3(const Graph& g) { return g.order() == 3 && g.size() == 2; }

VertexSet p3_base(const Graph& g, std::vector<std::string>& trace) {
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            if (is_ltd_set(g, {a, b})) {
                trace.push_back("base P_3: {" + std::to_string(a) + "," + std::to_string(b) + "}");
                return {a, b};
            }
    throw internal_error("P_3 must have a 2-element LTD-set");
}

struct RootedBlockTree {
    BlockCutTree bct;
    std::vector<int> block_parent_cut;   // -1 for blocks containing the root only
    std::vector<int> cut_parent_block;   // -1 for the root cut vertex
    std::vector<int> block_depth;        // root cut vertex has depth 0
    std::vector<int> cut_depth;          // indexed by vertex id (valid for cut vertices)
    int root = -1;
};

RootedBlockTree root_tree(const Graph& g) {
    RootedBlockTree t;
    t.bct = block_cut_tree(g);
    LTDKIT_CHECK(!t.bct.cut_vertices.empty(), "twin-free block graph of order >= 4 has a cut vertex");
    t.root = t.bct.cut_vertices[0];

    int nb = int(t.bct.blocks.size());
    t.block_parent_cut.assign(nb, -2);
    t.cut_parent_block.assign(g.order(), -2);
    t.block_depth.assign(nb, -1);
    t.cut_depth.assign(g.order(), -1);

    std::vector<std::vector<int>> blocks_of_cut(g.order());
    for (auto [b, c] : t.bct.tree_edges) blocks_of_cut[c].push_back(b);

    // BFS over the bipartite incidence structure.
    std::vector<std::pair<bool, int>> queue{{false, t.root}};  // (is_block, id)
    t.cut_depth[t.root] = 0;
    t.cut_parent_block[t.root] = -1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        auto [is_block, id] = queue[qi];
        if (is_block) {
            for (int c : t.bct.blocks[id]) {
                if (!t.bct.is_cut_vertex(c) || t.cut_depth[c] != -1) continue;
                t.cut_depth[c] = t.block_depth[id] + 1;
                t.cut_parent_block[c] = id;
                queue.emplace_back(false, c);
            }
        } else {
            for (int b : blocks_of_cut[id]) {
                if (t.block_depth[b] != -1) continue;
                t.block_depth[b] = t.cut_depth[id] + 1;
                t.block_parent_cut[b] = id;
                queue.emplace_back(true, b);
            }
        }
    }
    return t;
}

VertexSet block_ltd(const Graph& g, std::vector<std::string>& trace) {
    int n = g.order();
    if (n == 3) {
        LTDKIT_CHECK(iso_p3(g), "3-vertex recursion case must be P_3");
        return p3_base(g, trace);
    }
    LTDKIT_CHECK(n >= 4, "recursion reaches only P_3 or graphs of order >= 4");
    LTDKIT_CHECK(is_twin_free(g), "recursion invariant: twin-free");

    RootedBlockTree t = root_tree(g);
    const auto& blocks = t.bct.blocks;

    // Deepest leaf block; ties resolved by the lexicographic block order.
    int uf = -1;
    for (size_t b = 0; b < blocks.size(); ++b) {
        int cuts = 0;
        for (int v : blocks[b]) cuts += t.bct.is_cut_vertex(v);
        if (cuts == 1 && (uf == -1 || t.block_depth[b] > t.block_depth[uf])) uf = int(b);
    }
    LTDKIT_CHECK(uf >= 0, "block-cut tree has a leaf block");
    LTDKIT_CHECK(blocks[uf].size() == 2, "twin-freeness forces leaf blocks of order 2");

    int q = t.block_parent_cut[uf];
    LTDKIT_CHECK(q >= 0, "leaf block has a parent cut vertex");
    int bprime = t.cut_parent_block[q];
    LTDKIT_CHECK(bprime >= 0, "deepest leaf is at depth >= 3: parent block exists");
    int p = t.block_parent_cut[bprime];
    LTDKIT_CHECK(p >= 0, "deepest leaf is at depth >= 3: great-grandparent v_p exists");

    VertexSet u_set, a_set;
    for (size_t b = 0; b < blocks.size(); ++b) {
        bool child = t.block_parent_cut[int(b)] == p;
        bool great_grandchild = false;
        int pc = t.block_parent_cut[int(b)];
        if (pc >= 0 && pc != p) {
            int pb = t.cut_parent_block[pc];
            if (pb >= 0 && t.block_parent_cut[pb] == p) great_grandchild = true;
        }
        if (child || great_grandchild) u_set = vset::unite(u_set, blocks[b]);
    }
    for (int v : u_set)
        if (t.bct.is_cut_vertex(v)) a_set.push_back(v);
    LTDKIT_CHECK(a_set.size() >= 2, "A contains p and the parent cut of the deepest leaf");
    LTDKIT_CHECK(long(u_set.size()) >= 2 * long(a_set.size()) - 1, "|U| >= 2|A| - 1");
    trace.push_back("p=" + std::to_string(p) + " U=" + vset::to_string(u_set) + " A=" +
                    vset::to_string(a_set));

    SubGraph gp = induce_without(g, u_set);
    int np = gp.g.order();
    TwinReport tw = twin_report(gp.g);

    if (tw.twin_free() || iso_p3(gp.g)) {
        if (np == 0) {
            trace.push_back("G' empty: A alone is the LTD-set");
            return a_set;
        }
        LTDKIT_CHECK(np >= 3, "G' twin-free: order 1 and 2 are impossible");
        VertexSet sp = gp.to_orig(block_ltd(gp.g, trace));
        return vset::unite(sp, a_set);
    }

    // G' has twins; exactly one pair {x, y}, with x the p-adjacent one.
    LTDKIT_CHECK(tw.classes.size() == 1 && tw.classes[0].vertices.size() == 2,
                 "G' has exactly one twin pair");
    int x = gp.orig[tw.classes[0].vertices[0]];
    int y = gp.orig[tw.classes[0].vertices[1]];
    if (g.has_edge(p, y)) std::swap(x, y);
    LTDKIT_CHECK(g.has_edge(p, x) && !g.has_edge(p, y), "exactly one twin is adjacent to p");
    LTDKIT_CHECK(!t.bct.is_cut_vertex(y), "the twin y is not a cut vertex");
    trace.push_back("G' twins: x=" + std::to_string(x) + " y=" + std::to_string(y));

    SubGraph gpp = induce_without(g, vset::unite(u_set, {x}));
    int npp = gpp.g.order();
    LTDKIT_CHECK(is_connected(gpp.g), "G'' = G' - x stays connected");
    LTDKIT_CHECK(npp != 2, "G'' cannot have order 2");

    if (npp == 1) {
        trace.push_back("G'' is a single vertex: A u {x}");
        return vset::unite(a_set, {x});
    }

    TwinReport twpp = twin_report(gpp.g);
    if (twpp.twin_free() || iso_p3(gpp.g)) {
        VertexSet spp = gpp.to_orig(block_ltd(gpp.g, trace));
        return vset::unite(spp, a_set);
    }

    // G'' still has twins: they are y and a leaf x'' of the block Y; drop y.
    LTDKIT_CHECK(twpp.classes.size() == 1 && twpp.classes[0].vertices.size() == 2,
                 "G'' has exactly one twin pair");
    int ta = gpp.orig[twpp.classes[0].vertices[0]];
    int tb = gpp.orig[twpp.classes[0].vertices[1]];
    LTDKIT_CHECK(ta == y || tb == y, "the G'' twins include y");
    trace.push_back("G'' twins include y; recursing on G* = G'' - y");

    SubGraph gs = induce_without(g, vset::unite(u_set, {x, y}));
    LTDKIT_CHECK(gs.g.order() >= 3, "G* has order >= 3");
    LTDKIT_CHECK(is_connected(gs.g), "G* stays connected");
    LTDKIT_CHECK(is_twin_free(gs.g), "G* is twin-free");
    VertexSet ss = gs.to_orig(block_ltd(gs.g, trace));
    return vset::unite(vset::unite(ss, a_set), {x});
}

}  // namespace

Certificate construct_block(const Graph& g) {
    int n = g.order();
    if (!is_connected(g)) throw domain_error("block theorem requires a connected graph");
    if (!iso_p3(g)) {
        if (n < 4) throw domain_error("block theorem requires P_3 or order >= 4");
        if (!is_twin_free(g)) throw domain_error("block theorem requires a twin-free graph");
        if (!recognize_block_graph(g)) throw domain_error("graph is not a block graph");
    }
    std::vector<std::string> trace;
    VertexSet s = block_ltd(g, trace);
    return detail::finish_certificate(g, std::move(s), Theorem::block, {2L * n, 3}, false,
                                      detail::floor_two_thirds(n), std::move(trace));
}

}  // namespace ltdkit
