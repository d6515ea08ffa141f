#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ltdkit/graph.hpp"

namespace ltdkit {

// V = c1 ⊎ c2, each inducing a clique. c1/c2 come from 2-coloring the
// complement starting at the smallest vertex of each component.
struct CobipartiteWitness {
    VertexSet c1, c2;
};

// V = clique ⊎ stable.
struct SplitWitness {
    VertexSet clique, stable;
};

// Branch sets of a K4 or K2,3 minor model: disjoint, each connected in the
// host graph, with an edge between every pair the target requires.
struct MinorModel {
    enum Target { K4, K23 } target = K4;
    std::vector<VertexSet> branch_sets;  // K4: 4 sets; K2,3: first 2 = the small side
};

struct OuterplanarResult {
    bool outerplanar = false;
    std::optional<MinorModel> obstruction;  // present iff !outerplanar
};

std::optional<CobipartiteWitness> recognize_cobipartite(const Graph& g);
std::optional<SplitWitness> recognize_split(const Graph& g);
bool recognize_block_graph(const Graph& g);
bool recognize_subcubic(const Graph& g);
OuterplanarResult recognize_outerplanar(const Graph& g);

bool validate_minor_model(const Graph& g, const MinorModel& m);

// The unique Hamiltonian cycle of a 2-connected outerplanar graph of order
// >= 3, as a vertex sequence starting at the smallest vertex, second vertex
// the smaller of its two cycle neighbors. usage_error if the preconditions
// fail.
std::vector<int> ham_cycle_outerplanar(const Graph& g);

// Pendant path l_0..l_k with deg(l_0) >= 3, deg(l_k) = 1, interior degree 2.
struct LegDecomposition {
    std::vector<std::vector<int>> legs;  // each [l_0, ..., l_k], ordered by leaf vertex
    VertexSet core;                      // vertices left after removing all bridges + isolated remnants
    bool small_bridge_hypothesis = false;  // every bridge splits off a side of <= 3 vertices
    std::string hypothesis_note;
};

// Pre: g connected and not a tree (usage_error otherwise). Legs of any length
// are reported; small_bridge_hypothesis flags whether every bridge leaves a
// side of at most three vertices.
LegDecomposition leg_decomposition(const Graph& g);

}  // namespace ltdkit
