#include "ltdkit/ltd.hpp"

#include <algorithm>
#include <string>

#include "ltdkit/errors.hpp"
#include "ltdkit/structure.hpp"

namespace ltdkit {

namespace {

Bitset to_bitset(const Graph& g, const VertexSet& d) {
    Bitset b(g.order());
    for (int v : d) {
        if (v < 0 || v >= g.order()) throw usage_error("set member out of range: " + std::to_string(v));
        b.set(v);
    }
    return b;
}

}  // namespace

bool is_td_set(const Graph& g, const VertexSet& d) {
    Bitset db = to_bitset(g, d);
    for (int v = 0; v < g.order(); ++v)
        if (!g.row(v).intersects(db)) return false;
    return true;
}

LocationProfile location_profile(const Graph& g, const VertexSet& d) {
    Bitset db = to_bitset(g, d);
    LocationProfile p;
    for (int v = 0; v < g.order(); ++v) {
        if (db.test(v)) continue;
        p.entries.emplace_back(v, (g.row(v) & db).to_vector());
    }
    return p;
}

LtdCheck check_ltd(const Graph& g, const VertexSet& d) {
    Bitset db = to_bitset(g, d);
    LtdCheck c;
    for (int v = 0; v < g.order(); ++v) {
        if (!g.row(v).intersects(db)) {
            c.undominated = v;
            return c;  // td_ok = ltd_ok = false
        }
    }
    c.td_ok = true;
    // Profiles of the vertices outside d, checked pairwise via sorting.
    std::vector<std::pair<Bitset, int>> profiles;
    for (int v = 0; v < g.order(); ++v)
        if (!db.test(v)) profiles.emplace_back(g.row(v) & db, v);
    std::sort(profiles.begin(), profiles.end(),
              [](const auto& a, const auto& b) { return a.first < b.first || (a.first == b.first && a.second < b.second); });
    std::pair<int, int> worst{-1, -1};
    for (size_t i = 0; i + 1 < profiles.size(); ++i) {
        if (profiles[i].first == profiles[i + 1].first) {
            std::pair<int, int> pr{profiles[i].second, profiles[i + 1].second};
            if (worst.first == -1 || pr < worst) worst = pr;
        }
    }
    if (worst.first != -1) {
        c.unlocated = worst;
        return c;
    }
    c.ltd_ok = true;
    return c;
}

bool is_ltd_set(const Graph& g, const VertexSet& d) { return check_ltd(g, d).ltd_ok; }

// ---------------------------------------------------------------------------
// Exact search. Vertices are decided in index order, include before exclude,
// so the first solution found at the minimum size is the lexicographically
// smallest one. Capped at 64 vertices so all state fits in single words.
// ---------------------------------------------------------------------------

namespace {

struct Solver {
    const Graph& g;
    bool locating;
    long max_nodes;
    int n;
    int target = 0;
    int max_deg;
    uint64_t full;
    std::vector<uint64_t> row;
    std::vector<std::pair<uint64_t, uint64_t>> twin_classes;  // (member mask, ignored) locating only
    long nodes = 0;
    bool aborted = false;
    uint64_t found = 0;
    bool has_found = false;

    Solver(const Graph& gr, bool loc, long budget)
        : g(gr), locating(loc), max_nodes(budget), n(gr.order()), max_deg(std::max(1, gr.max_degree())) {
        full = n == 64 ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);
        row.resize(n);
        for (int v = 0; v < n; ++v) {
            uint64_t r = 0;
            for (int w : g.neighbors(v)) r |= uint64_t(1) << w;
            row[v] = r;
        }
        if (locating)
            for (const TwinClass& tc : twin_report(gr).classes) {
                uint64_t m = 0;
                for (int v : tc.vertices) m |= uint64_t(1) << v;
                twin_classes.emplace_back(m, 0);
            }
    }

    bool feasible_final(uint64_t d) const {
        for (int v = 0; v < n; ++v)
            if (!(row[v] & d)) return false;
        if (!locating) return true;
        uint64_t outs = full & ~d;
        // Distinct profiles among the outs.
        uint64_t profs[64];
        int k = 0;
        uint64_t o = outs;
        while (o) {
            int v = __builtin_ctzll(o);
            o &= o - 1;
            profs[k++] = row[v] & d;
        }
        std::sort(profs, profs + k);
        for (int i = 0; i + 1 < k; ++i)
            if (profs[i] == profs[i + 1]) return false;
        return true;
    }

    // i: next undecided vertex; d: chosen so far; outs: decided-out.
    bool dfs(int i, uint64_t d, int dcount, uint64_t outs) {
        if (max_nodes >= 0 && ++nodes > max_nodes) {
            aborted = true;
            return false;
        }
        int need = target - dcount;
        int remaining = n - i;
        if (need > remaining) return false;
        if (need == 0 || need == remaining) {
            // The completion is forced: all remaining out, or all remaining in.
            uint64_t final_d = d;
            if (need == remaining)
                for (int v = i; v < n; ++v) final_d |= uint64_t(1) << v;
            if (feasible_final(final_d)) {
                found = final_d;
                has_found = true;
                return true;
            }
            return false;
        }

        uint64_t high = full & ~((uint64_t(1) << i) - 1);  // vertices >= i
        uint64_t reach = d | high;

        // Every vertex must still be dominatable.
        int undominated = 0;
        for (int v = 0; v < n; ++v) {
            if (!(row[v] & reach)) return false;
            if (!(row[v] & d)) ++undominated;
        }
        if (dcount + (undominated + max_deg - 1) / max_deg > target) return false;

        if (locating) {
            // Each twin class keeps at most one vertex out of d.
            int twin_need = 0;
            for (auto [mask, _] : twin_classes) {
                int size = __builtin_popcountll(mask);
                int in = __builtin_popcountll(mask & d);
                int possible = __builtin_popcountll(mask & high);
                if (in + possible < size - 1) return false;
                twin_need += std::max(0, size - 1 - in);
            }
            if (dcount + twin_need > target) return false;
        }

        uint64_t bit = uint64_t(1) << i;
        // include first: the first full solution is the lexicographic minimum
        if (dcount < target && dfs(i + 1, d | bit, dcount + 1, outs)) return true;
        if (aborted) return false;

        if (locating) {
            // i joins the outs; a pair of outs that can never be separated by a
            // future choice kills the branch.
            uint64_t future = full & ~((uint64_t(2) << i) - 1);  // vertices > i
            uint64_t o = outs;
            while (o) {
                int u = __builtin_ctzll(o);
                o &= o - 1;
                uint64_t diff = row[u] ^ row[i];
                if (!(diff & d) && !(diff & future)) return false;
            }
        }
        return dfs(i + 1, d, dcount, outs | bit);
    }
};

VertexSet mask_to_set(uint64_t m) {
    VertexSet s;
    while (m) {
        s.push_back(__builtin_ctzll(m));
        m &= m - 1;
    }
    return s;
}

// Fallback witness when the budget runs out: grow greedily by domination
// gain, then patch unlocated pairs; always terminates with a valid set.
VertexSet greedy_ltd(const Graph& g, bool locating) {
    VertexSet d;
    Bitset in(g.order());
    while (true) {
        LtdCheck c = check_ltd(g, d);
        if (locating ? c.ltd_ok : c.td_ok) return d;
        int pick = -1;
        if (!c.td_ok) {
            int best = -1;
            for (int v = 0; v < g.order(); ++v) {
                if (in.test(v)) continue;
                int gain = 0;
                for (int w : g.neighbors(v)) {
                    bool dom = false;
                    for (int x : g.neighbors(w))
                        if (in.test(x)) { dom = true; break; }
                    if (!dom) ++gain;
                }
                if (gain > best) { best = gain; pick = v; }
            }
        } else {
            auto [a, b] = c.unlocated;
            Bitset diff = g.row(a) ^ g.row(b);
            pick = diff.and_not(in).find_first();
        }
        LTDKIT_CHECK(pick >= 0, "greedy fallback could not extend the set");
        in.set(pick);
        d = vset::unite(d, {pick});
    }
}

ExactResult exact_min(const Graph& g, bool locating, SearchBudget budget) {
    int n = g.order();
    if (n == 0) return {0, {}, true};
    if (!is_isolate_free(g))
        throw domain_error("no LTD-set exists: graph has an isolated vertex");
    if (n > 64) throw usage_error("exact search supports at most 64 vertices");

    Solver s(g, locating, budget.max_nodes);

    int comps = int(connected_components(g).size());
    int lb = 2 * comps;
    lb = std::max(lb, (n + s.max_deg - 1) / s.max_deg);
    if (locating) {
        int twin_lb = 0;
        for (auto [mask, _] : s.twin_classes) twin_lb += __builtin_popcountll(mask) - 1;
        lb = std::max(lb, twin_lb);
        int loc = 1;
        while (n - loc > (loc >= 63 ? n : (1 << loc) - 1)) ++loc;  // n - s <= 2^s - 1
        lb = std::max(lb, loc);
    }

    for (int size = std::min(lb, n); size <= n; ++size) {
        s.target = size;
        if (s.dfs(0, 0, 0, 0)) return {size, mask_to_set(s.found), true};
        if (s.aborted) break;
    }
    if (s.aborted) {
        VertexSet w = greedy_ltd(g, locating);
        return {int(w.size()), w, false};
    }
    throw internal_error("exact search exhausted all sizes without a solution");
}

}  // namespace

ExactResult exact_min_ltd(const Graph& g, SearchBudget budget) { return exact_min(g, true, budget); }

ExactResult exact_min_td(const Graph& g, SearchBudget budget) { return exact_min(g, false, budget); }

}  // namespace ltdkit
