#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ltdkit/graph.hpp"
#include "ltdkit/ltd.hpp"
#include "ltdkit/recognize.hpp"

namespace ltdkit {

enum class Theorem {
    cobipartite,   // <= ceil(n/2)
    split,         // strictly < 2n/3
    block,         // <= 2n/3
    subcubic,      // <= 2n/3
    outerplanar,   // <= 2n/3
    exact,         // value from the exact solver (dispatcher fallback)
    composite,     // sum over components (dispatcher on disconnected input)
};

std::string theorem_name(Theorem t);

struct Rational {
    long num = 0;
    long den = 1;
};

// A constructed LTD-set, the bound it must satisfy, and how it was built.
// Every constructor verifies its set with is_ltd_set before returning.
struct Certificate {
    VertexSet set;
    Theorem theorem = Theorem::exact;
    Rational bound;      // the theorem's cap, e.g. 2n/3
    bool strict = false; // |set| < bound rather than <=
    long bound_cap = 0;  // largest integer size the bound admits
    bool verified = false;
    std::vector<std::string> trace;

    long size() const { return long(set.size()); }
};

// The subcubic theorem's excluded family {K_1, K_2, K_4, K_{1,3}}.
enum class FTdomKind { K1, K2, K4, K13, not_in_family };
FTdomKind ftdom_kind(const Graph& g);

// Twin-free cobipartite graphs: gamma_t^L <= ceil(n/2). The witness cliques
// may come in either order.
Certificate construct_cobipartite(const Graph& g, const CobipartiteWitness& w);

// Twin-free isolate-free split graphs: gamma_t^L < 2n/3.
Certificate construct_split(const Graph& g, const SplitWitness& w);

// P_3, or connected twin-free block graphs of order >= 4: gamma_t^L <= 2n/3.
Certificate construct_block(const Graph& g);

// Connected subcubic graphs of order >= 3 outside F_tdom (twins allowed):
// gamma_t^L <= 2n/3.
Certificate construct_subcubic(const Graph& g);

// Connected twin-free isolate-free outerplanar graphs: gamma_t^L <= 2n/3.
Certificate construct_outerplanar(const Graph& g);

// The small-bridge construction: applicable when g is connected, twin-free,
// not a tree, and every bridge cuts off a side of at most three vertices.
// nullopt when the hypothesis fails and the caller must recurse instead.
std::optional<Certificate> smallbridge_construct(const Graph& g, const LegDecomposition& ld);

// Tries block, split, cobipartite, outerplanar, subcubic in that order; falls
// back to the exact solver for small leftovers. domain_error when nothing
// applies.
Certificate construct_auto(const Graph& g);

}  // namespace ltdkit
