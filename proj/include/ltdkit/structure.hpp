#pragma once

#include <utility>
#include <vector>

#include "ltdkit/graph.hpp"

namespace ltdkit {

// Maximal class of pairwise twins, |vertices| >= 2. Open classes induce no
// edges, closed classes induce cliques; the two kinds cannot share a vertex.
struct TwinClass {
    enum Kind { open, closed } kind;
    VertexSet vertices;
};

struct TwinReport {
    std::vector<TwinClass> classes;  // ordered by smallest member
    bool twin_free() const { return classes.empty(); }
};

// Blocks (maximal 2-connected components, bridge edges as 2-vertex blocks),
// cut vertices, and the bipartite incidence tree between them.
struct BlockCutTree {
    std::vector<VertexSet> blocks;                  // each sorted; list sorted lexicographically
    VertexSet cut_vertices;
    std::vector<std::pair<int, int>> tree_edges;    // (block index, cut vertex)

    bool is_cut_vertex(int v) const { return vset::contains(cut_vertices, v); }
};

// Partition of [0,n) into maximal connected sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

// Edges whose removal increases the component count, as (u,v) with u < v,
// lexicographically sorted.
std::vector<std::pair<int, int>> bridges(const Graph& g);

BlockCutTree block_cut_tree(const Graph& g);

TwinReport twin_report(const Graph& g);
bool is_twin_free(const Graph& g);

bool is_isolate_free(const Graph& g);

}  // namespace ltdkit
