#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "ltdkit/graph.hpp"

namespace ltdkit {

// --- fixed families ---------------------------------------------------------

Graph path_graph(int n);      // P_n, n >= 1
Graph cycle_graph(int n);     // C_n, n >= 3
Graph complete_graph(int n);  // K_n, n >= 1
Graph star_graph(int n);      // K_{1,n-1}, n >= 2; vertex 0 is the center

// H with a fresh 2-path attached to every vertex; order 3|V(H)|.
// Vertex v keeps its id; its path is 3v', 3v'+1 style fresh ids above |V(H)|.
Graph two_corona(const Graph& h);

// The split graph G_k: clique q_1..q_k,q_1'..q_k' (ids 0..2k-1), stable
// s_1..s_k (ids 2k..3k-1); N(s_i) = {q_i, q_i'} for i < k, N(s_k) = {q_1..q_k}.
Graph split_tight(int k);  // k >= 3

// Two k-cliques a_1..a_k (ids 0..k-1) and b_1..b_k (ids k..2k-1) with
// a_i ~ b_j iff i > j. Reconstructed edge rule; tests pin gamma = n/2.
Graph half_graph_complement(int k);  // k >= 2

// --- random instances --------------------------------------------------------

enum class GraphClass { split, cobipartite, block, subcubic, outerplanar };

struct RandomModel {
    GraphClass cls;
    int n;
    uint64_t seed;
    bool twin_free_required = true;
};

// Seedable generator per class; output passes the class recognizer and, when
// required, is twin-free (rejection sampling, cap 1000 retries). Equal
// (model, seed) gives the identical graph.
Graph random_instance(const RandomModel& m);

// --- exhaustive enumeration ---------------------------------------------------

struct EnumFilter {
    bool twin_free = false;
    std::optional<GraphClass> cls;
};

// Streams every connected graph on n unlabeled vertices exactly once (one
// canonical representative each), 1 <= n <= 8. yield returns false to stop.
void enumerate_connected(int n, const EnumFilter& filter,
                         const std::function<bool(const Graph&)>& yield);

// --- small-graph canonical forms (n <= 11) ------------------------------------

// Adjacency mask: bit for pair (i,j), i<j, at index j(j-1)/2 + i.
uint64_t mask_of(const Graph& g);
Graph graph_from_mask(int n, uint64_t mask);

// Minimum mask over all vertex relabelings, low-bit-first comparison.
uint64_t canonical_mask(int n, uint64_t mask);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace ltdkit
