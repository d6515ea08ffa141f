#include <algorithm>
#include <map>
#include <string>

#include "construct_internal.hpp"
#include "ltdkit/errors.hpp"
#include "ltdkit/structure.hpp"

namespace ltdkit {

// ---------------------------------------------------------------------------
// Outerplanar graphs. Two regimes:
//   - no bridge separates two sides of order >= 4: the small-bridge
//     construction walks the Hamiltonian cycle of every 2-connected core
//     component, handles the pendant legs by fixed rules (steps 1-3), and
//     fills the remaining cycle stretches with a 2-in-3 pattern (step 4);
//   - otherwise, split on such a bridge and combine recursive solutions,
//     repairing the twins the split creates (cases 1 and 2 below).
// Trees fall back to the exact solver (or a pruned greedy beyond desk scale);
// their 2n/3 bound comes from earlier work on C4-free graphs, not from the
// constructions here.
// ---------------------------------------------------------------------------

namespace {

VertexSet op_ltd(const Graph& g, std::vector<std::string>& trace);

// --- small-bridge construction ----------------------------------------------

struct CoreBlocks {
    Graph core;                    // bridge-free core on its own ids
    std::vector<int> orig;         // core id -> g id
    std::vector<VertexSet> order;  // blocks in BFS order, g ids
    std::vector<int> attach;       // attach[i] = c_i in g ids, -1 for the root block
};

CoreBlocks core_blocks(const Graph& g, const LegDecomposition& ld) {
    CoreBlocks cb;
    auto brs = bridges(g);
    std::vector<int> idx(g.order(), -1);
    for (size_t i = 0; i < ld.core.size(); ++i) idx[ld.core[i]] = int(i);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (!std::binary_search(brs.begin(), brs.end(), std::make_pair(u, v))) {
            LTDKIT_CHECK(idx[u] >= 0 && idx[v] >= 0, "non-bridge edges live inside the core");
            edges.emplace_back(idx[u], idx[v]);
        }
    cb.core = Graph(int(ld.core.size()), edges);
    cb.orig = ld.core;
    LTDKIT_CHECK(cb.core.min_degree() >= 2, "bridge-free core has min degree >= 2");
    LTDKIT_CHECK(is_connected(cb.core), "bridge-free core of a connected graph is connected");

    BlockCutTree bct = block_cut_tree(cb.core);
    int nb = int(bct.blocks.size());
    std::vector<VertexSet> blocks_g(nb);
    for (int b = 0; b < nb; ++b) {
        for (int v : bct.blocks[b]) blocks_g[b].push_back(cb.orig[v]);
        std::sort(blocks_g[b].begin(), blocks_g[b].end());
        LTDKIT_CHECK(bct.blocks[b].size() >= 3, "core blocks are 2-connected");
    }

    // Root at a leaf block, smallest vertex set lexicographically; BFS across
    // shared cut vertices gives the <= 1 intersection indexing.
    std::vector<std::vector<int>> blocks_of_cut(cb.core.order());
    for (auto [b, c] : bct.tree_edges) blocks_of_cut[c].push_back(b);
    int root = -1;
    for (int b = 0; b < nb; ++b) {
        int cuts = 0;
        for (int v : bct.blocks[b]) cuts += bct.is_cut_vertex(v);
        if (cuts > 1) continue;
        if (root == -1 || blocks_g[b] < blocks_g[root]) root = b;
    }
    LTDKIT_CHECK(root >= 0, "block-cut tree of the core has a leaf block");

    std::vector<char> seen(nb, 0);
    std::vector<std::pair<int, int>> queue{{root, -1}};  // (block, attach vertex in core ids)
    seen[root] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        auto [b, att] = queue[qi];
        cb.order.push_back(blocks_g[b]);
        cb.attach.push_back(att == -1 ? -1 : cb.orig[att]);
        for (int c : bct.blocks[b]) {
            if (!bct.is_cut_vertex(c)) continue;
            for (int nbk : blocks_of_cut[c])
                if (!seen[nbk]) {
                    seen[nbk] = 1;
                    queue.emplace_back(nbk, c);
                }
        }
    }
    return cb;
}

VertexSet smallbridge_set(const Graph& g, const LegDecomposition& ld,
                          std::vector<std::string>& trace) {
    LTDKIT_CHECK(ld.small_bridge_hypothesis, "small-bridge construction needs the hypothesis");
    Bitset core_b = Bitset::of(g.order(), ld.core);
    for (const auto& leg : ld.legs) {
        LTDKIT_CHECK(leg.size() >= 2 && leg.size() <= 4,
                     "twin-free + hypothesis: legs have length 1..3");
        LTDKIT_CHECK(core_b.test(leg[0]), "leg anchors lie on the core");
    }

    CoreBlocks cb = core_blocks(g, ld);

    // Assign each leg to the first block (in BFS order) containing its anchor.
    std::vector<int> first_block(g.order(), -1);
    for (size_t i = 0; i < cb.order.size(); ++i)
        for (int v : cb.order[i])
            if (first_block[v] == -1) first_block[v] = int(i);
    std::vector<std::vector<const std::vector<int>*>> legs_in_block(cb.order.size());
    for (const auto& leg : ld.legs) legs_in_block[first_block[leg[0]]].push_back(&leg);

    Bitset in_s(g.order());
    auto add = [&](int v) { in_s.set(v); };

    for (size_t bi = 0; bi < cb.order.size(); ++bi) {
        const VertexSet& blk = cb.order[bi];
        int ci = cb.attach[bi];

        // Hamiltonian cycle, started at c_i (or the smallest vertex), oriented
        // toward the smaller neighbor.
        SubGraph sub = induce(g, blk);
        std::vector<int> cyc_local = ham_cycle_outerplanar(sub.g);
        std::vector<int> cyc;
        for (int v : cyc_local) cyc.push_back(sub.orig[v]);
        int L = int(cyc.size());
        int start = 0;
        if (ci != -1)
            start = int(std::find(cyc.begin(), cyc.end(), ci) - cyc.begin());
        std::rotate(cyc.begin(), cyc.begin() + start, cyc.end());
        if (cyc[1] > cyc[L - 1]) std::reverse(cyc.begin() + 1, cyc.end());

        std::map<int, std::vector<const std::vector<int>*>> legs_at;
        for (const auto* leg : legs_in_block[bi]) legs_at[(*leg)[0]].push_back(leg);
        auto has_leg = [&](int v) { return legs_at.count(v) > 0; };
        auto has_len1_leg = [&](int v) {
            auto it = legs_at.find(v);
            if (it == legs_at.end()) return false;
            for (const auto* leg : it->second)
                if (leg->size() == 2) return true;
            return false;
        };

        // step 1: fixed picks inside each leg
        for (const auto* legp : legs_in_block[bi]) {
            const auto& leg = *legp;
            switch (leg.size()) {
                case 2: add(leg[0]); break;                // length 1: l_0
                case 3: add(leg[0]); add(leg[1]); break;   // length 2: l_0, l_1
                default: add(leg[1]); add(leg[2]); break;  // length 3: l_1, l_2
            }
        }

        // steps 2 and 3: neighbors of vertices carrying a length-1 leg
        for (int j = 0; j < L; ++j) {
            int vj = cyc[j];
            if (!has_len1_leg(vj)) continue;
            int prev = cyc[(j - 1 + L) % L], next = cyc[(j + 1) % L];
            if (has_leg(prev)) {
                if (next != ci && !has_leg(next)) add(next);
                else if (next == ci) add(prev);
            }
            if (has_leg(next)) {
                if (prev != ci && !has_leg(prev)) add(prev);
                else if (prev == ci) add(next);
            }
            if (!has_leg(prev) && !has_leg(next)) {
                if ((j == 1 || j == L - 1) && cyc[0] != ci) add(cyc[0]);
                else if (j == L - 1 && cyc[0] == ci) add(cyc[L - 2]);
                else if (j == 2) add(cyc[1]);
                else add(cyc[(j + 1) % L]);
            }
        }

        // step 4: 2-in-3 pattern over the untouched cycle vertices
        std::vector<int> u;
        for (int j = 0; j < L; ++j)
            if (cyc[j] != ci && !in_s.test(cyc[j])) u.push_back(cyc[j]);
        int last = int(u.size()) - 1;
        for (int t = 0; t <= last; ++t) {
            bool pick = (t % 3 == 1) || (t % 3 == 2);
            if (last % 3 == 1) {  // endpoint exception
                if (t == last) pick = false;
                if (t == last - 1) pick = true;
            }
            if (pick) add(u[t]);
        }
        trace.push_back("block " + vset::to_string(blk) +
                        (ci == -1 ? std::string(" (root)") : " (c=" + std::to_string(ci) + ")") +
                        ": cycle pass done");
    }
    return in_s.to_vector();
}

// --- bridge surgery (the theorem's inductive cases) --------------------------

VertexSet rec_on(const Graph& g, const VertexSet& vertices, std::vector<std::string>& trace) {
    SubGraph sub = induce(g, vertices);
    return sub.to_orig(op_ltd(sub.g, trace));
}

// An LTD-set of the side A (vertex set a_vs, bridge endpoint va) that
// contains va, stays within 2|A|/3, and keeps working when the pendant vb is
// attached back. Requires A to have twins; A - va must have twins too
// (otherwise the caller is in case 1).
VertexSet claim_set(const Graph& g, const VertexSet& a_vs, int va, int vb,
                    std::vector<std::string>& trace) {
    SubGraph a_sub = induce(g, a_vs);
    const Graph& a = a_sub.g;
    auto to_local = [&](int v) {
        return int(std::lower_bound(a_sub.orig.begin(), a_sub.orig.end(), v) - a_sub.orig.begin());
    };
    int v_loc = to_local(va);

    TwinReport tw = twin_report(a);
    LTDKIT_CHECK(tw.classes.size() == 1 && tw.classes[0].vertices.size() == 2,
                 "a non-twin-free bridge side has exactly one twin pair");
    LTDKIT_CHECK(vset::contains(tw.classes[0].vertices, v_loc),
                 "the bridge endpoint is one of the twins");
    int u = tw.classes[0].vertices[0] == v_loc ? tw.classes[0].vertices[1]
                                               : tw.classes[0].vertices[0];

    VertexSet nv;  // N(va) \ {u} in local ids
    for (int w : a.neighbors(v_loc))
        if (w != u) nv.push_back(w);
    LTDKIT_CHECK(nv.size() == 1 || nv.size() == 2,
                 "outerplanarity bounds the twin's shared neighborhood");

    SubGraph ap = induce_without(a, {v_loc});
    LTDKIT_CHECK(!is_twin_free(ap.g), "claim applies only when A - v still has twins");

    int s_loc, t_loc = -1;
    if (nv.size() == 1) {
        s_loc = nv[0];
        LTDKIT_CHECK(a.has_edge(v_loc, u), "case |N(v)\\{u}|=1: the edge vu is present");
    } else {
        // The twins of A - va are u and one of the two shared neighbors; that
        // one is t, the other is s.
        TwinReport twp = twin_report(ap.g);
        LTDKIT_CHECK(twp.classes.size() >= 1, "A - va has a twin pair");
        VertexSet pair_orig;  // in a-local ids
        for (int w : twp.classes[0].vertices) pair_orig.push_back(ap.orig[w]);
        LTDKIT_CHECK(vset::contains(pair_orig, u), "u is one of the twins of A - va");
        int other = pair_orig[0] == u ? pair_orig[1] : pair_orig[0];
        LTDKIT_CHECK(other == nv[0] || other == nv[1], "the second twin of A - va is s or t");
        t_loc = other;
        s_loc = nv[0] == other ? nv[1] : nv[0];
    }

    VertexSet s_set;  // result in a-local ids
    VertexSet dropped = nv.size() == 1 ? VertexSet{v_loc, u} : VertexSet{v_loc, t_loc};
    SubGraph g1s = induce_without(a, vset::normalized(dropped));

    if (g1s.g.order() == 2 && g1s.g.size() == 1) {
        s_set = {v_loc, s_loc};
        trace.push_back("claim: G1* = K_2, take {v, s}");
    } else if (is_twin_free(g1s.g)) {
        VertexSet inner = g1s.to_orig(op_ltd(g1s.g, trace));
        LTDKIT_CHECK(vset::contains(inner, s_loc), "s is a support vertex, so s is in the set");
        s_set = vset::unite(inner, {v_loc});
        trace.push_back("claim: G1* twin-free, recursed and added v");
    } else {
        LTDKIT_CHECK(nv.size() == 2, "G1* with twins only arises in the two-neighbor case");
        SubGraph h = induce_without(a, vset::normalized({v_loc, t_loc, u}));
        if (h.g.order() == 2 && h.g.size() == 1) {
            s_set = vset::normalized({v_loc, s_loc, u});
            trace.push_back("claim: G1* - u = K_2, take {v, s, u}");
        } else {
            LTDKIT_CHECK(is_twin_free(h.g), "G1* - u is twin-free or K_2");
            VertexSet inner = h.to_orig(op_ltd(h.g, trace));
            LTDKIT_CHECK(vset::contains(inner, s_loc), "s stays a support vertex in G1* - u");
            s_set = vset::unite(inner, vset::normalized({v_loc, u}));
            trace.push_back("claim: recursed on G1* - u and added {v, u}");
        }
    }

    LTDKIT_CHECK(is_ltd_set(a, s_set), "claim set is an LTD-set of the side");
    LTDKIT_CHECK(3 * long(s_set.size()) <= 2 * long(a.order()), "claim set is within 2|A|/3");
    VertexSet out = a_sub.to_orig(s_set);
    // It must also survive re-attaching the pendant endpoint of the bridge.
    SubGraph with_pendant = induce(g, vset::unite(a_vs, {vb}));
    LTDKIT_CHECK(is_ltd_set(with_pendant.g, [&] {
                     VertexSet local;
                     for (int v : out)
                         local.push_back(int(std::lower_bound(with_pendant.orig.begin(),
                                                              with_pendant.orig.end(), v) -
                                             with_pendant.orig.begin()));
                     return vset::normalized(local);
                 }()),
                 "claim set locates across the re-attached bridge");
    LTDKIT_CHECK(vset::contains(out, va), "claim set contains the bridge endpoint");
    return out;
}

// Case 1: A - va is twin-free. Solve A - va and B + va (va as a pendant),
// dropping va from the B side when it would duplicate a leaf.
VertexSet case1_set(const Graph& g, const VertexSet& a_vs, int va, const VertexSet& b_vs,
                    std::vector<std::string>& trace) {
    VertexSet ap = vset::minus(a_vs, {va});
    VertexSet sa = rec_on(g, ap, trace);

    VertexSet bp = vset::unite(b_vs, {va});
    SubGraph bsub = induce(g, bp);
    VertexSet sb;
    if (is_twin_free(bsub.g)) {
        sb = bsub.to_orig(op_ltd(bsub.g, trace));
        trace.push_back("case 1: B + pendant v is twin-free");
    } else {
        TwinReport tw = twin_report(bsub.g);
        int va_loc = int(std::lower_bound(bsub.orig.begin(), bsub.orig.end(), va) - bsub.orig.begin());
        LTDKIT_CHECK(tw.classes.size() == 1 && tw.classes[0].vertices.size() == 2 &&
                         vset::contains(tw.classes[0].vertices, va_loc),
                     "twins of B + v are v and a sibling leaf");
        SubGraph b2 = induce(g, b_vs);
        LTDKIT_CHECK(is_twin_free(b2.g), "B itself is twin-free here");
        sb = b2.to_orig(op_ltd(b2.g, trace));
        trace.push_back("case 1: B + pendant v duplicated a leaf, solved B alone");
    }
    return vset::unite(sa, sb);
}

VertexSet bridge_surgery(const Graph& g, std::vector<std::string>& trace) {
    // Lexicographically smallest bridge with both sides of order >= 4.
    auto brs = bridges(g);
    int bu = -1, bv = -1;
    VertexSet side_u;
    for (auto [x, y] : brs) {
        Bitset seen(g.order());
        seen.set(x);
        std::vector<int> stack{x};
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(c)) {
                if (c == x && w == y) continue;
                if (!seen.test(w)) {
                    seen.set(w);
                    stack.push_back(w);
                }
            }
        }
        int cnt = seen.count();
        if (cnt >= 4 && g.order() - cnt >= 4) {
            bu = x;
            bv = y;
            side_u = seen.to_vector();
            break;
        }
    }
    LTDKIT_CHECK(bu != -1, "bridge surgery requires a bridge with both sides >= 4");
    VertexSet all(g.order());
    for (int i = 0; i < g.order(); ++i) all[i] = i;
    VertexSet side_v = vset::minus(all, side_u);
    trace.push_back("splitting on bridge (" + std::to_string(bu) + "," + std::to_string(bv) + ")");

    bool tf_u = is_twin_free(induce(g, side_u).g);
    bool tf_v = is_twin_free(induce(g, side_v).g);

    VertexSet s;
    if (tf_u && tf_v) {
        s = vset::unite(rec_on(g, side_u, trace), rec_on(g, side_v, trace));
        trace.push_back("both sides twin-free: direct union");
    } else if (tf_u || tf_v) {
        const VertexSet& a_vs = tf_u ? side_v : side_u;
        const VertexSet& b_vs = tf_u ? side_u : side_v;
        int va = tf_u ? bv : bu, vb = tf_u ? bu : bv;
        if (is_twin_free(induce(g, vset::minus(a_vs, {va})).g)) {
            s = case1_set(g, a_vs, va, b_vs, trace);
        } else {
            s = vset::unite(claim_set(g, a_vs, va, vb, trace), rec_on(g, b_vs, trace));
        }
    } else {
        bool u_case1 = is_twin_free(induce(g, vset::minus(side_u, {bu})).g);
        bool v_case1 = is_twin_free(induce(g, vset::minus(side_v, {bv})).g);
        if (u_case1) {
            s = case1_set(g, side_u, bu, side_v, trace);
        } else if (v_case1) {
            s = case1_set(g, side_v, bv, side_u, trace);
        } else {
            s = vset::unite(claim_set(g, side_u, bu, bv, trace),
                            claim_set(g, side_v, bv, bu, trace));
        }
    }
    LTDKIT_CHECK(is_ltd_set(g, s), "combined bridge-surgery set is an LTD-set");
    return s;
}

// --- tree fallback ------------------------------------------------------------

VertexSet tree_fallback(const Graph& g, std::vector<std::string>& trace) {
    int n = g.order();
    long cap = detail::floor_two_thirds(n);
    if (n <= 20) {
        ExactResult r = exact_min_ltd(g);
        if (r.value > cap)
            throw domain_error("unsupported instance: tree exceeds the 2n/3 bound");  // unreachable for twin-free trees
        trace.push_back("tree component: exact solver, gamma = " + std::to_string(r.value));
        return r.witness;
    }
    // Greedy grow then prune; verified, never reported beyond the bound.
    VertexSet d;
    while (!is_ltd_set(g, d)) {
        LtdCheck c = check_ltd(g, d);
        int pick = -1;
        if (!c.td_ok) {
            int best = -1;
            for (int v = 0; v < n; ++v) {
                if (vset::contains(d, v)) continue;
                int gain = 0;
                for (int w : g.neighbors(v))
                    if (!g.row(w).intersects(Bitset::of(n, d))) ++gain;
                if (gain > best) {
                    best = gain;
                    pick = v;
                }
            }
        } else {
            Bitset diff = g.row(c.unlocated.first) ^ g.row(c.unlocated.second);
            pick = diff.and_not(Bitset::of(n, d)).find_first();
        }
        LTDKIT_CHECK(pick >= 0, "greedy tree fallback can always extend");
        d = vset::unite(d, {pick});
    }
    for (int v = n - 1; v >= 0; --v) {
        if (!vset::contains(d, v)) continue;
        VertexSet without = vset::minus(d, {v});
        if (is_ltd_set(g, without)) d = without;
    }
    if (long(d.size()) > cap)
        throw domain_error("unsupported instance: tree fallback exceeded the 2n/3 bound");
    trace.push_back("tree component: greedy fallback, size " + std::to_string(d.size()));
    return d;
}

VertexSet op_ltd(const Graph& g, std::vector<std::string>& trace) {
    LTDKIT_CHECK(is_connected(g) && is_twin_free(g) && is_isolate_free(g),
                 "outerplanar recursion invariant");
    if (is_tree(g)) return tree_fallback(g, trace);
    LegDecomposition ld = leg_decomposition(g);
    VertexSet s =
        ld.small_bridge_hypothesis ? smallbridge_set(g, ld, trace) : bridge_surgery(g, trace);
    LTDKIT_CHECK(is_ltd_set(g, s), "outerplanar recursion produced an LTD-set");
    LTDKIT_CHECK(3 * long(s.size()) <= 2 * long(g.order()), "outerplanar recursion met the bound");
    return s;
}

}  // namespace

std::optional<Certificate> smallbridge_construct(const Graph& g, const LegDecomposition& ld) {
    if (!is_connected(g) || is_tree(g))
        throw usage_error("small-bridge construction requires a connected non-tree graph");
    if (!is_twin_free(g)) throw domain_error("small-bridge construction requires a twin-free graph");
    if (!ld.small_bridge_hypothesis) return std::nullopt;
    std::vector<std::string> trace;
    VertexSet s = smallbridge_set(g, ld, trace);
    int n = g.order();
    return detail::finish_certificate(g, std::move(s), Theorem::outerplanar, {2L * n, 3}, false,
                                      detail::floor_two_thirds(n), std::move(trace));
}

Certificate construct_outerplanar(const Graph& g) {
    int n = g.order();
    if (!is_connected(g)) throw domain_error("outerplanar theorem requires a connected graph");
    if (!is_isolate_free(g)) throw domain_error("no LTD-set exists: graph has an isolated vertex");
    if (!is_twin_free(g)) throw domain_error("outerplanar theorem requires a twin-free graph");
    if (!recognize_outerplanar(g).outerplanar)
        throw domain_error("graph is not outerplanar (has a K4 or K2,3 minor)");
    std::vector<std::string> trace;
    VertexSet s = op_ltd(g, trace);
    return detail::finish_certificate(g, std::move(s), Theorem::outerplanar, {2L * n, 3}, false,
                                      detail::floor_two_thirds(n), std::move(trace));
}

}  // namespace ltdkit
