#pragma once

#include <utility>
#include <vector>

#include "ltdkit/graph.hpp"

namespace ltdkit {

// N(v) ∩ D for every v outside D, keyed ascending by v.
struct LocationProfile {
    std::vector<std::pair<int, VertexSet>> entries;
};

bool is_td_set(const Graph& g, const VertexSet& d);
bool is_ltd_set(const Graph& g, const VertexSet& d);
LocationProfile location_profile(const Graph& g, const VertexSet& d);

// Verdict with a concrete witness on failure, for the CLI and for error
// messages: either an undominated vertex or an unlocated pair outside d.
struct LtdCheck {
    bool td_ok = false;
    bool ltd_ok = false;
    int undominated = -1;                  // smallest, when !td_ok
    std::pair<int, int> unlocated{-1, -1}; // lexicographically first, when td_ok && !ltd_ok
};
LtdCheck check_ltd(const Graph& g, const VertexSet& d);

struct ExactResult {
    int value = 0;
    VertexSet witness;               // lexicographically smallest minimum set
    bool optimality_checked = true;  // false only when the node budget ran out
};

struct SearchBudget {
    long max_nodes = -1;  // -1 = unlimited; a pure safety valve
};

// Minimum LTD-set by iterative deepening on set size with branch-and-bound.
// domain_error if g has an isolated vertex; usage_error beyond desk scale.
ExactResult exact_min_ltd(const Graph& g, SearchBudget budget = {});

// Minimum TD-set, same engine without the location constraints.
ExactResult exact_min_td(const Graph& g, SearchBudget budget = {});

}  // namespace ltdkit
