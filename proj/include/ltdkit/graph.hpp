#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ltdkit/bitset.hpp"

namespace ltdkit {

// Sorted, duplicate-free vertex list. The role of D/S in every definition.
using VertexSet = std::vector<int>;

namespace vset {
bool contains(const VertexSet& s, int v);
VertexSet unite(const VertexSet& a, const VertexSet& b);
VertexSet minus(const VertexSet& a, const VertexSet& b);
VertexSet intersect(const VertexSet& a, const VertexSet& b);
VertexSet normalized(VertexSet s);  // sort + dedupe
std::string to_string(const VertexSet& s);
}  // namespace vset

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
// Neighbor lists are sorted; a bitset row per vertex backs O(1) adjacency
// tests and the set arithmetic the exhaustive solvers live on.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : Graph(n, {}) {}
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    long size() const { return m_; }

    int degree(int v) const;  // usage_error on out-of-range v
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const Bitset& row(int v) const { return rows_[v]; }
    bool has_edge(int u, int v) const { return u >= 0 && u < n_ && v >= 0 && v < n_ && rows_[u].test(v); }

    int min_degree() const;
    int max_degree() const;

    // Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    long m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Bitset> rows_;
};

// Induced subgraph together with the old-id of each new vertex.
// orig[new] = old; vertices are renumbered in ascending old-id order.
struct SubGraph {
    Graph g;
    std::vector<int> orig;

    VertexSet to_orig(const VertexSet& s) const;
};

SubGraph induce(const Graph& g, const VertexSet& keep);
SubGraph induce_without(const Graph& g, const VertexSet& drop);

Graph complement(const Graph& g);

bool is_connected(const Graph& g);   // vacuously true for n = 0
bool is_tree(const Graph& g);        // connected and m = n - 1

}  // namespace ltdkit
