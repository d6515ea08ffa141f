#include "ltdkit/construct.hpp"

#include <algorithm>

#include "construct_internal.hpp"
#include "ltdkit/errors.hpp"
#include "ltdkit/structure.hpp"

namespace ltdkit {

std::string theorem_name(Theorem t) {
    switch (t) {
        case Theorem::cobipartite: return "cobipartite";
        case Theorem::split: return "split";
        case Theorem::block: return "block";
        case Theorem::subcubic: return "subcubic";
        case Theorem::outerplanar: return "outerplanar";
        case Theorem::exact: return "exact";
        case Theorem::composite: return "composite";
    }
    return "?";
}

namespace detail {

long floor_two_thirds(long n) { return 2 * n / 3; }
long strict_two_thirds_cap(long n) { return (2 * n + 2) / 3 - 1; }  // max integer < 2n/3
long ceil_half(long n) { return (n + 1) / 2; }

Certificate finish_certificate(const Graph& g, VertexSet set, Theorem t, Rational bound,
                               bool strict, long cap, std::vector<std::string> trace) {
    Certificate c;
    c.set = vset::normalized(std::move(set));
    c.theorem = t;
    c.bound = bound;
    c.strict = strict;
    c.bound_cap = cap;
    c.trace = std::move(trace);
    c.verified = is_ltd_set(g, c.set);
    LTDKIT_CHECK(c.verified, theorem_name(t) + " construction produced a non-LTD set " +
                                 vset::to_string(c.set));
    LTDKIT_CHECK(c.size() <= cap, theorem_name(t) + " construction exceeded its bound: |set|=" +
                                      std::to_string(c.size()) + " cap=" + std::to_string(cap));
    return c;
}

}  // namespace detail

FTdomKind ftdom_kind(const Graph& g) {
    int n = g.order();
    long m = g.size();
    if (n == 1) return FTdomKind::K1;
    if (n == 2 && m == 1) return FTdomKind::K2;
    if (n == 4 && m == 6) return FTdomKind::K4;
    if (n == 4 && m == 3 && g.max_degree() == 3) return FTdomKind::K13;
    return FTdomKind::not_in_family;
}

// ---------------------------------------------------------------------------
// Cobipartite. With C1, C2 the witness cliques, |C1| <= |C2|:
//   - if C1 totally dominates, C1 itself is locating (twin-freeness);
//   - otherwise a unique v in C2 has no C1-neighbor, and the proof swaps in
//     one C2-vertex, either replacing some w in C1 with no C2-neighbor or
//     extending C1 by one vertex when C2 is too large to use directly.
// ---------------------------------------------------------------------------

Certificate construct_cobipartite(const Graph& g, const CobipartiteWitness& w) {
    int n = g.order();
    VertexSet c1 = vset::normalized(w.c1), c2 = vset::normalized(w.c2);
    if (int(c1.size() + c2.size()) != n || !vset::intersect(c1, c2).empty())
        throw usage_error("cobipartite witness does not partition the vertex set");
    auto check_clique = [&](const VertexSet& c) {
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = i + 1; j < c.size(); ++j)
                if (!g.has_edge(c[i], c[j])) return false;
        return true;
    };
    if (!check_clique(c1) || !check_clique(c2))
        throw usage_error("cobipartite witness parts are not cliques");
    if (!is_twin_free(g)) throw domain_error("cobipartite theorem requires a twin-free graph");
    if (c1.size() > c2.size()) std::swap(c1, c2);
    LTDKIT_CHECK(is_connected(g), "twin-free cobipartite graph must be connected");
    LTDKIT_CHECK(c1.size() >= 2 && c2.size() >= 2, "twin-free cobipartite cliques have size >= 2");

    Rational bound{n, 2};
    long cap = detail::ceil_half(n);
    std::vector<std::string> trace;
    Bitset c1b = Bitset::of(n, c1), c2b = Bitset::of(n, c2);

    if (is_td_set(g, c1)) {
        trace.push_back("C1 " + vset::to_string(c1) + " is a TD-set, hence an LTD-set");
        return detail::finish_certificate(g, c1, Theorem::cobipartite, bound, false, cap, trace);
    }

    VertexSet undominated;
    for (int v : c2)
        if (!g.row(v).intersects(c1b)) undominated.push_back(v);
    LTDKIT_CHECK(undominated.size() == 1, "exactly one C2-vertex may lack a C1-neighbor");
    int v_lone = undominated[0];
    trace.push_back("v=" + std::to_string(v_lone) + " is the unique C2-vertex with no C1-neighbor");

    VertexSet w_cands;
    for (int u : c1)
        if (!g.row(u).intersects(c2b)) w_cands.push_back(u);

    if (!w_cands.empty()) {
        int w_drop = w_cands[0];
        int x = -1;
        for (int u : c2)
            if (u != v_lone) { x = u; break; }
        LTDKIT_CHECK(x >= 0, "C2 has a vertex other than v");
        VertexSet d = vset::unite(vset::minus(c1, {w_drop}), {x});
        trace.push_back("w=" + std::to_string(w_drop) + " in C1 has no C2-neighbor: D=(C1\\{w}) u {x}, x=" +
                        std::to_string(x));
        return detail::finish_certificate(g, d, Theorem::cobipartite, bound, false, cap, trace);
    }

    if (long(c2.size()) <= cap) {
        trace.push_back("every C1-vertex has a C2-neighbor: C2 is an LTD-set within the bound");
        return detail::finish_certificate(g, c2, Theorem::cobipartite, bound, false, cap, trace);
    }

    int x = -1;
    for (int u : c2)
        if (u != v_lone) { x = u; break; }
    VertexSet d = vset::unite(c1, {x});
    LTDKIT_CHECK(long(d.size()) <= cap, "|C1|+1 fits under ceil(n/2) when |C2| exceeds it");
    trace.push_back("C2 too large: D = C1 u {x}, x=" + std::to_string(x));
    return detail::finish_certificate(g, d, Theorem::cobipartite, bound, false, cap, trace);
}

// ---------------------------------------------------------------------------
// Split. Q a clique, S stable:
//   - |Q| < 2n/3: Q is an LTD-set;
//   - |Q| > 2n/3: D = S plus one neighbor q_s per s in S, |D| <= 2|S| < 2n/3;
//   - |Q| = 2n/3: some s, s' share a neighbor (twin-freeness); merging their
//     two representatives into a common q_{s,s'} saves one vertex.
// ---------------------------------------------------------------------------

Certificate construct_split(const Graph& g, const SplitWitness& w) {
    int n = g.order();
    VertexSet q = vset::normalized(w.clique), s = vset::normalized(w.stable);
    if (int(q.size() + s.size()) != n || !vset::intersect(q, s).empty())
        throw usage_error("split witness does not partition the vertex set");
    for (size_t i = 0; i < q.size(); ++i)
        for (size_t j = i + 1; j < q.size(); ++j)
            if (!g.has_edge(q[i], q[j])) throw usage_error("split witness clique is not complete");
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j])) throw usage_error("split witness stable part has an edge");
    if (!is_isolate_free(g)) throw domain_error("split theorem requires an isolate-free graph");
    if (!is_twin_free(g)) throw domain_error("split theorem requires a twin-free graph");
    LTDKIT_CHECK(q.size() >= 2 && s.size() >= 2,
                 "twin-free isolate-free split graph has |Q|,|S| >= 2 (theorem hypothesis implies n >= 4)");

    Rational bound{2L * n, 3};
    long cap = detail::strict_two_thirds_cap(n);
    std::vector<std::string> trace;

    if (3L * long(q.size()) < 2L * n) {
        trace.push_back("|Q| < 2n/3: Q is an LTD-set");
        return detail::finish_certificate(g, q, Theorem::split, bound, true, cap, trace);
    }

    auto smallest_neighbor = [&](int sv) {
        const auto& nb = g.neighbors(sv);
        LTDKIT_CHECK(!nb.empty(), "stable vertex must have a neighbor in Q");
        return nb[0];
    };

    if (3L * long(q.size()) > 2L * n) {
        VertexSet d = s;
        for (int sv : s) d.push_back(smallest_neighbor(sv));
        trace.push_back("|Q| > 2n/3: D = S plus one clique neighbor per stable vertex");
        return detail::finish_certificate(g, d, Theorem::split, bound, true, cap, trace);
    }

    // |Q| = 2n/3 exactly: find the lexicographically first pair s,s' with a
    // common neighbor, and the smallest such neighbor.
    int s1 = -1, s2 = -1, qc = -1;
    for (size_t i = 0; i < s.size() && s1 == -1; ++i)
        for (size_t j = i + 1; j < s.size() && s1 == -1; ++j) {
            Bitset common = g.row(s[i]) & g.row(s[j]);
            if (common.any()) {
                s1 = s[i];
                s2 = s[j];
                qc = common.find_first();
            }
        }
    LTDKIT_CHECK(s1 != -1, "|Q| = 2n/3: twin-freeness forces two stable vertices with a common neighbor");
    VertexSet d = s;
    d.push_back(qc);
    for (int sv : s)
        if (sv != s1 && sv != s2) d.push_back(smallest_neighbor(sv));
    trace.push_back("|Q| = 2n/3: merged representatives of s=" + std::to_string(s1) + ", s'=" +
                    std::to_string(s2) + " into common neighbor q=" + std::to_string(qc));
    return detail::finish_certificate(g, d, Theorem::split, bound, true, cap, trace);
}

// ---------------------------------------------------------------------------
// Dispatcher.
// ---------------------------------------------------------------------------

Certificate construct_auto(const Graph& g) {
    int n = g.order();
    if (!is_isolate_free(g)) throw domain_error("no LTD-set exists: graph has an isolated vertex");

    auto comps = connected_components(g);
    if (comps.size() > 1) {
        Certificate c;
        c.theorem = Theorem::composite;
        long cap = 0;
        for (const VertexSet& comp : comps) {
            SubGraph sub = induce(g, comp);
            Certificate part = construct_auto(sub.g);
            VertexSet mapped = sub.to_orig(part.set);
            c.set = vset::unite(c.set, mapped);
            cap += part.bound_cap;
            c.trace.push_back("component " + vset::to_string(comp) + ": " + theorem_name(part.theorem) +
                              " gives " + vset::to_string(mapped));
        }
        c.bound = {cap, 1};
        c.bound_cap = cap;
        c.verified = is_ltd_set(g, c.set);
        LTDKIT_CHECK(c.verified, "componentwise union must be an LTD-set");
        return c;
    }

    bool twin_free = is_twin_free(g);

    if ((n == 3 && g.size() == 2) || (twin_free && n >= 4 && recognize_block_graph(g)))
        return construct_block(g);
    if (twin_free) {
        if (auto w = recognize_split(g)) return construct_split(g, *w);
        if (auto w = recognize_cobipartite(g)) return construct_cobipartite(g, *w);
        if (recognize_outerplanar(g).outerplanar) return construct_outerplanar(g);
    }
    if (n >= 3 && g.max_degree() <= 3 && ftdom_kind(g) == FTdomKind::not_in_family)
        return construct_subcubic(g);

    if (n <= 20) {
        ExactResult r = exact_min_ltd(g);
        Certificate c;
        c.set = r.witness;
        c.theorem = Theorem::exact;
        c.bound = {r.value, 1};
        c.bound_cap = r.value;
        c.verified = is_ltd_set(g, c.set);
        c.trace.push_back("exact solver: gamma_t^L = " + std::to_string(r.value));
        LTDKIT_CHECK(c.verified, "exact witness must verify");
        return c;
    }
    throw domain_error("unsupported instance: no theorem applies and the order is too large for exact search");
}

}  // namespace ltdkit
