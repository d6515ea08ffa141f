#include "ltdkit/families.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "ltdkit/errors.hpp"
#include "ltdkit/recognize.hpp"
#include "ltdkit/structure.hpp"

namespace ltdkit {

Graph path_graph(int n) {
    if (n < 1) throw usage_error("path_graph: n >= 1 required");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw usage_error("cycle_graph: n >= 3 required");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph complete_graph(int n) {
    if (n < 1) throw usage_error("complete_graph: n >= 1 required");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph star_graph(int n) {
    if (n < 2) throw usage_error("star_graph: n >= 2 required");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return Graph(n, e);
}

Graph two_corona(const Graph& h) {
    if (h.order() < 1) throw usage_error("two_corona: base graph must be non-empty");
    if (!is_connected(h)) throw usage_error("two_corona: base graph must be connected");
    int k = h.order();
    std::vector<std::pair<int, int>> e = h.edges();
    for (int v = 0; v < k; ++v) {
        int a = k + 2 * v, b = k + 2 * v + 1;
        e.emplace_back(v, a);
        e.emplace_back(a, b);
    }
    return Graph(3 * k, e);
}

Graph split_tight(int k) {
    if (k < 3) throw usage_error("split_tight: k >= 3 required");
    // q_i = i-1, q_i' = k+i-1, s_i = 2k+i-1 (1-indexed names)
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 2 * k; ++i)
        for (int j = i + 1; j < 2 * k; ++j) e.emplace_back(i, j);
    for (int i = 1; i < k; ++i) {
        e.emplace_back(2 * k + i - 1, i - 1);      // s_i ~ q_i
        e.emplace_back(2 * k + i - 1, k + i - 1);  // s_i ~ q_i'
    }
    for (int j = 0; j < k; ++j) e.emplace_back(3 * k - 1, j);  // s_k ~ q_1..q_k
    Graph g(3 * k, e);
    LTDKIT_CHECK(recognize_split(g).has_value(), "split_tight: output not split");
    LTDKIT_CHECK(is_twin_free(g), "split_tight: output has twins");
    return g;
}

Graph half_graph_complement(int k) {
    if (k < 2) throw usage_error("half_graph_complement: k >= 2 required");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            e.emplace_back(i, j);
            e.emplace_back(k + i, k + j);
        }
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j < i; ++j) e.emplace_back(i - 1, k + j - 1);  // a_i ~ b_j iff i > j
    Graph g(2 * k, e);
    LTDKIT_CHECK(recognize_cobipartite(g).has_value(), "half_graph_complement: output not cobipartite");
    LTDKIT_CHECK(is_twin_free(g), "half_graph_complement: output has twins");
    return g;
}

// ---------------------------------------------------------------------------
// Random models. All randomness goes through raw mt19937_64 draws so equal
// seeds give byte-identical graphs across platforms.
// ---------------------------------------------------------------------------

namespace {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(uint64_t seed) : eng(seed) {}
    uint64_t below(uint64_t k) { return eng() % k; }
    bool chance(double p) { return double(eng() >> 11) / double(uint64_t(1) << 53) < p; }
};

Graph gen_split(int n, Rng& rng) {
    int q = 2 + int(rng.below(uint64_t(n - 3)));  // |Q| in [2, n-2]
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j) e.emplace_back(i, j);
    for (int s = q; s < n; ++s) {
        int attached = 0;
        for (int i = 0; i < q; ++i)
            if (rng.chance(0.35)) {
                e.emplace_back(i, s);
                ++attached;
            }
        if (attached == 0) e.emplace_back(int(rng.below(uint64_t(q))), s);
    }
    return Graph(n, e);
}

Graph gen_cobipartite(int n, Rng& rng) {
    int c1 = 2 + int(rng.below(uint64_t(n - 3)));
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < c1; ++i)
        for (int j = i + 1; j < c1; ++j) e.emplace_back(i, j);
    for (int i = c1; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    for (int i = 0; i < c1; ++i)
        for (int j = c1; j < n; ++j)
            if (rng.chance(0.3)) e.emplace_back(i, j);
    return Graph(n, e);
}

// Tree of cliques, grown so the result is usually twin-free: a block of a
// twin-free block graph has at most one non-cut vertex, and no vertex may
// carry two pendant leaves. Vertices in needs_child still owe a second block;
// the budget bookkeeping keeps them affordable. The outer rejection loop
// deals with the rare shapes this still cannot avoid.
Graph gen_block(int n, Rng& rng) {
    std::vector<std::vector<int>> adj(1);
    std::vector<std::pair<int, int>> e;
    std::vector<int> blocks_at{0};
    int created = 1;
    std::set<int> needs_child;

    auto add_edge = [&](int u, int v) {
        e.emplace_back(u, v);
        adj[u].push_back(v);
        adj[v].push_back(u);
    };
    auto has_pendant_leaf = [&](int a) {
        for (int w : adj[a])
            if (adj[w].size() == 1) return true;
        return false;
    };
    auto attach_block = [&](int a, int k) {  // k new vertices forming a clique with a
        std::vector<int> fresh;
        for (int i = 0; i < k; ++i) {
            adj.emplace_back();
            blocks_at.push_back(1);
            fresh.push_back(created++);
        }
        for (int i = 0; i < k; ++i) {
            add_edge(a, fresh[i]);
            for (int j = i + 1; j < k; ++j) add_edge(fresh[i], fresh[j]);
        }
        if (++blocks_at[a] >= 2)
            needs_child.erase(a);
        else
            needs_child.insert(a);  // only the start vertex's first block
        for (int i = 0; i + 1 < k; ++i) needs_child.insert(fresh[i]);  // last one may stay non-cut
    };

    long guard = 50L * n;
    while (created < n && guard-- > 0) {
        int budget = n - created;
        int owed = int(needs_child.size());
        int a;
        if (budget <= owed) {
            a = -1;  // forced finishing: serve an owed vertex that accepts a pendant
            for (int v : needs_child)
                if (!has_pendant_leaf(v)) { a = v; break; }
            if (a == -1) break;
            attach_block(a, 1);
            continue;
        }
        if (!needs_child.empty() && rng.chance(0.5)) {
            auto it = needs_child.begin();
            std::advance(it, long(rng.below(needs_child.size())));
            a = *it;
        } else {
            a = int(rng.below(uint64_t(created)));
        }
        int slack = budget - owed + (needs_child.count(a) ? 1 : 0) - (blocks_at[a] == 0 ? 1 : 0);
        std::vector<int> ks;
        if (slack >= 1 && !has_pendant_leaf(a)) ks.push_back(1);
        for (int k = 2; k <= 4 && k <= budget; ++k)
            if (k + (k - 1) <= slack) ks.push_back(k);
        if (ks.empty()) continue;
        attach_block(a, ks[rng.below(ks.size())]);
    }
    // Pad to exact order with a chain of pendants; twins get rejected outside.
    while (created < n) {
        int a = -1;
        for (int v = 0; v < created && a == -1; ++v)
            if (!has_pendant_leaf(v)) a = v;
        attach_block(a == -1 ? created - 1 : a, 1);
    }
    return Graph(n, e);
}

Graph gen_subcubic(int n, Rng& rng) {
    for (int attempt = 0; attempt < 400; ++attempt) {
        std::vector<int> deg(n);
        int total = 0;
        for (int v = 0; v < n; ++v) {
            deg[v] = rng.chance(0.75) ? 3 : 2;
            total += deg[v];
        }
        if (total % 2) {
            deg[0] = deg[0] == 3 ? 2 : 3;
        }
        std::vector<int> stubs;
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < deg[v]; ++i) stubs.push_back(v);
        for (size_t i = stubs.size(); i > 1; --i)
            std::swap(stubs[i - 1], stubs[rng.below(i)]);
        std::vector<std::pair<int, int>> e;
        bool ok = true;
        std::set<std::pair<int, int>> used;
        for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || used.count({std::min(u, v), std::max(u, v)})) {
                ok = false;
                break;
            }
            used.insert({std::min(u, v), std::max(u, v)});
            e.emplace_back(u, v);
        }
        if (!ok) continue;
        Graph g(n, e);
        if (is_connected(g)) return g;
    }
    throw domain_error("random_instance: subcubic configuration model failed to produce a simple connected graph");
}

Graph gen_outerplanar(int n, Rng& rng) {
    // Random triangulation of the polygon 0..n-1, then random chord deletions.
    // The boundary cycle always survives, so the result stays connected and
    // outerplanar (non-crossing chords inside one face).
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    std::vector<std::pair<int, int>> chords;
    std::vector<std::pair<int, int>> work{{0, n - 1}};
    while (!work.empty()) {
        auto [i, j] = work.back();
        work.pop_back();
        if (j - i < 2) continue;
        int k = i + 1 + int(rng.below(uint64_t(j - i - 1)));
        if (k - i >= 2) chords.emplace_back(i, k);
        if (j - k >= 2) chords.emplace_back(k, j);
        work.push_back({i, k});
        work.push_back({k, j});
    }
    for (auto [u, v] : chords)
        if (!rng.chance(0.45)) e.emplace_back(u, v);
    return Graph(n, e);
}

}  // namespace

Graph random_instance(const RandomModel& m) {
    // Below these orders no twin-free instance of the class exists.
    int min_n = (m.cls == GraphClass::outerplanar || m.cls == GraphClass::subcubic) ? 5 : 4;
    if (m.n < min_n)
        throw usage_error("random_instance: n >= " + std::to_string(min_n) + " required for this class");
    Rng rng(m.seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Graph g;
        switch (m.cls) {
            case GraphClass::split: g = gen_split(m.n, rng); break;
            case GraphClass::cobipartite: g = gen_cobipartite(m.n, rng); break;
            case GraphClass::block: g = gen_block(m.n, rng); break;
            case GraphClass::subcubic: g = gen_subcubic(m.n, rng); break;
            case GraphClass::outerplanar: g = gen_outerplanar(m.n, rng); break;
        }
        if (m.twin_free_required && !is_twin_free(g)) continue;
        switch (m.cls) {
            case GraphClass::split:
                LTDKIT_CHECK(recognize_split(g).has_value(), "random split instance failed recognizer");
                break;
            case GraphClass::cobipartite:
                LTDKIT_CHECK(recognize_cobipartite(g).has_value(), "random cobipartite instance failed recognizer");
                break;
            case GraphClass::block:
                LTDKIT_CHECK(recognize_block_graph(g), "random block instance failed recognizer");
                break;
            case GraphClass::subcubic:
                LTDKIT_CHECK(recognize_subcubic(g), "random subcubic instance failed recognizer");
                break;
            case GraphClass::outerplanar:
                LTDKIT_CHECK(recognize_outerplanar(g).outerplanar, "random outerplanar instance failed recognizer");
                break;
        }
        return g;
    }
    throw domain_error("random_instance: retry cap exceeded while sampling a twin-free instance");
}

// ---------------------------------------------------------------------------
// Canonical forms. Masks are compared low-bit-first so that assigning new
// labels 0,1,2,... fixes a growing prefix; the backtracking prunes any
// branch whose prefix already exceeds the best known labeling.
// ---------------------------------------------------------------------------

namespace {

// a < b when the lowest differing bit is 0 in a
inline bool lex_less(uint64_t a, uint64_t b) {
    uint64_t x = a ^ b;
    if (!x) return false;
    return !(a & (x & ~(x - 1)));
}

struct CanonSearch {
    int n;
    std::vector<uint64_t> rows;  // original adjacency rows as vertex masks
    uint64_t best = ~uint64_t(0);
    std::vector<int> assign;     // assign[pos] = original vertex
    uint64_t used = 0;

    void rec(int pos, uint64_t prefix) {
        if (pos == n) {
            if (lex_less(prefix, best)) best = prefix;
            return;
        }
        int base = pos * (pos - 1) / 2;
        // Twin candidates are interchangeable: swapping two vertices with equal
        // open or closed neighborhoods is an automorphism, so trying one per
        // twin class is enough. This collapses the factorial blowup on
        // complete graphs, stars and the like.
        int tried_v[12];
        int tried = 0;
        for (int v = 0; v < n; ++v) {
            if (used & (uint64_t(1) << v)) continue;
            bool dup = false;
            for (int t = 0; t < tried && !dup; ++t) {
                int u = tried_v[t];
                uint64_t diff = rows[u] ^ rows[v];
                dup = diff == 0 || diff == ((uint64_t(1) << u) | (uint64_t(1) << v));
            }
            if (dup) continue;
            tried_v[tried++] = v;
            uint64_t column = 0;
            for (int p = 0; p < pos; ++p)
                if (rows[v] & (uint64_t(1) << assign[p])) column |= uint64_t(1) << (base + p);
            uint64_t next = prefix | column;
            // compare the decided prefix against best's prefix
            int bits = base + pos;
            uint64_t prefix_mask = bits >= 64 ? ~uint64_t(0) : ((uint64_t(1) << bits) - 1);
            uint64_t b = best & prefix_mask;
            if (lex_less(b, next)) continue;  // prefix already worse
            assign[pos] = v;
            used |= uint64_t(1) << v;
            rec(pos + 1, next);
            used &= ~(uint64_t(1) << v);
        }
    }
};

}  // namespace

uint64_t mask_of(const Graph& g) {
    if (g.order() > 11) throw usage_error("mask_of: supports at most 11 vertices");
    uint64_t m = 0;
    for (auto [i, j] : g.edges()) m |= uint64_t(1) << (j * (j - 1) / 2 + i);
    return m;
}

Graph graph_from_mask(int n, uint64_t mask) {
    std::vector<std::pair<int, int>> e;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (mask & (uint64_t(1) << (j * (j - 1) / 2 + i))) e.emplace_back(i, j);
    return Graph(n, e);
}

uint64_t canonical_mask(int n, uint64_t mask) {
    if (n > 11) throw usage_error("canonical_mask: supports at most 11 vertices");
    CanonSearch cs;
    cs.n = n;
    cs.rows.assign(n, 0);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (mask & (uint64_t(1) << (j * (j - 1) / 2 + i))) {
                cs.rows[i] |= uint64_t(1) << j;
                cs.rows[j] |= uint64_t(1) << i;
            }
    cs.assign.assign(n, -1);
    cs.rec(0, 0);
    return cs.best;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    if (a.order() == 0) return true;
    return canonical_mask(a.order(), mask_of(a)) == canonical_mask(b.order(), mask_of(b));
}

// ---------------------------------------------------------------------------
// Enumeration by vertex extension: every graph on k vertices arises from a
// graph on k-1 by adding one vertex, so extending every canonical (k-1)-graph
// with every neighborhood and re-canonicalizing reaches every canonical form.
// ---------------------------------------------------------------------------

void enumerate_connected(int n, const EnumFilter& filter,
                         const std::function<bool(const Graph&)>& yield) {
    if (n < 1 || n > 8) throw usage_error("enumerate_connected: 1 <= n <= 8 required");
    std::set<uint64_t> level{0};  // the 1-vertex graph
    for (int k = 2; k <= n; ++k) {
        std::set<uint64_t> next;
        int base = k * (k - 1) / 2 - (k - 1);  // first bit index of column k-1
        for (uint64_t parent : level)
            for (uint64_t nb = 0; nb < (uint64_t(1) << (k - 1)); ++nb)
                next.insert(canonical_mask(k, parent | (nb << base)));
        level = std::move(next);
    }
    for (uint64_t mask : level) {
        Graph g = graph_from_mask(n, mask);
        if (!is_connected(g)) continue;
        if (filter.twin_free && !is_twin_free(g)) continue;
        if (filter.cls) {
            bool ok = true;
            switch (*filter.cls) {
                case GraphClass::split: ok = recognize_split(g).has_value(); break;
                case GraphClass::cobipartite: ok = recognize_cobipartite(g).has_value(); break;
                case GraphClass::block: ok = recognize_block_graph(g); break;
                case GraphClass::subcubic: ok = recognize_subcubic(g); break;
                case GraphClass::outerplanar: ok = recognize_outerplanar(g).outerplanar; break;
            }
            if (!ok) continue;
        }
        if (!yield(g)) return;
    }
}

}  // namespace ltdkit
