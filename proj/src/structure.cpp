#include "ltdkit/structure.hpp"

#include <algorithm>
#include <map>

#include "ltdkit/errors.hpp"

namespace ltdkit {

std::vector<VertexSet> connected_components(const Graph& g) {
    int n = g.order();
    std::vector<VertexSet> comps;
    Bitset seen(n);
    for (int s = 0; s < n; ++s) {
        if (seen.test(s)) continue;
        VertexSet comp;
        std::vector<int> stack{s};
        seen.set(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int v : g.neighbors(u))
                if (!seen.test(v)) {
                    seen.set(v);
                    stack.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;  // outer order = by smallest member, since s scans upward
}

namespace {

// One pass of the lowpoint DFS, iterative to keep the stack shallow.
// Emits blocks via the pending edge stack and marks cut vertices.
struct BlockDfs {
    const Graph& g;
    std::vector<int> num, low, parent, child_count;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<VertexSet> blocks;
    std::vector<bool> is_cut;
    int timer = 0;

    explicit BlockDfs(const Graph& gr)
        : g(gr),
          num(gr.order(), -1),
          low(gr.order(), 0),
          parent(gr.order(), -1),
          child_count(gr.order(), 0),
          is_cut(gr.order(), false) {}

    void pop_block(int u, int v) {
        VertexSet blk;
        auto add = [&](int x) { blk.push_back(x); };
        while (true) {
            auto [a, b] = edge_stack.back();
            edge_stack.pop_back();
            add(a);
            add(b);
            if ((a == u && b == v) || (a == v && b == u)) break;
        }
        std::sort(blk.begin(), blk.end());
        blk.erase(std::unique(blk.begin(), blk.end()), blk.end());
        blocks.push_back(std::move(blk));
    }

    void run(int root) {
        struct Frame {
            int v;
            size_t i;
        };
        std::vector<Frame> stack{{root, 0}};
        num[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            int v = f.v;
            if (f.i < g.neighbors(v).size()) {
                int w = g.neighbors(v)[f.i++];
                if (num[w] == -1) {
                    edge_stack.emplace_back(v, w);
                    parent[w] = v;
                    ++child_count[v];
                    num[w] = low[w] = timer++;
                    stack.push_back({w, 0});
                } else if (w != parent[v] && num[w] < num[v]) {
                    edge_stack.emplace_back(v, w);
                    low[v] = std::min(low[v], num[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= num[p]) {
                        pop_block(p, v);
                        if (parent[p] != -1 || child_count[p] >= 2) is_cut[p] = true;
                    }
                }
            }
        }
    }
};

}  // namespace

BlockCutTree block_cut_tree(const Graph& g) {
    BlockDfs dfs(g);
    for (int v = 0; v < g.order(); ++v)
        if (dfs.num[v] == -1 && !g.neighbors(v).empty()) dfs.run(v);

    BlockCutTree t;
    t.blocks = std::move(dfs.blocks);
    std::sort(t.blocks.begin(), t.blocks.end());
    for (int v = 0; v < g.order(); ++v)
        if (dfs.is_cut[v]) t.cut_vertices.push_back(v);
    for (size_t b = 0; b < t.blocks.size(); ++b)
        for (int v : t.blocks[b])
            if (dfs.is_cut[v]) t.tree_edges.emplace_back(int(b), v);
    return t;
}

std::vector<std::pair<int, int>> bridges(const Graph& g) {
    // A bridge is exactly a 2-vertex block.
    std::vector<std::pair<int, int>> out;
    for (const VertexSet& blk : block_cut_tree(g).blocks)
        if (blk.size() == 2) out.emplace_back(blk[0], blk[1]);
    std::sort(out.begin(), out.end());
    return out;
}

TwinReport twin_report(const Graph& g) {
    TwinReport rep;
    // Group by open neighborhood, then by closed neighborhood. A vertex with
    // an open twin cannot also have a closed twin, so the classes are disjoint.
    std::map<Bitset, VertexSet> open_groups, closed_groups;
    for (int v = 0; v < g.order(); ++v) {
        open_groups[g.row(v)].push_back(v);
        Bitset closed = g.row(v);
        closed.set(v);
        closed_groups[closed].push_back(v);
    }
    for (auto& [nb, vs] : open_groups)
        if (vs.size() >= 2) rep.classes.push_back({TwinClass::open, vs});
    for (auto& [nb, vs] : closed_groups)
        if (vs.size() >= 2) rep.classes.push_back({TwinClass::closed, vs});
    std::sort(rep.classes.begin(), rep.classes.end(),
              [](const TwinClass& a, const TwinClass& b) { return a.vertices < b.vertices; });
    return rep;
}

bool is_twin_free(const Graph& g) { return twin_report(g).twin_free(); }

bool is_isolate_free(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.neighbors(v).empty()) return false;
    return true;
}

}  // namespace ltdkit
