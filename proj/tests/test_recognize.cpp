#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "ltdkit/errors.hpp"
#include "ltdkit/families.hpp"
#include "ltdkit/recognize.hpp"
#include "ltdkit/structure.hpp"
#include "oracles.hpp"

using namespace ltdkit;

namespace {

bool cobipartite_witness_valid(const Graph& g, const CobipartiteWitness& w) {
    if (int(w.c1.size() + w.c2.size()) != g.order()) return false;
    for (auto* part : {&w.c1, &w.c2})
        for (size_t i = 0; i < part->size(); ++i)
            for (size_t j = i + 1; j < part->size(); ++j)
                if (!g.has_edge((*part)[i], (*part)[j])) return false;
    return vset::intersect(w.c1, w.c2).empty();
}

bool complement_bipartite_brute(const Graph& g) {
    // 2-color the complement by brute force over all colorings (small n)
    Graph co = complement(g);
    int n = g.order();
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
        bool ok = true;
        for (auto [u, v] : co.edges())
            if (((mask >> u) & 1) == ((mask >> v) & 1)) { ok = false; break; }
        if (ok) return true;
    }
    return n == 0;
}

}  // namespace

TEST_CASE("cobipartite recognition examples") {
    auto k3 = recognize_cobipartite(complete_graph(3));
    REQUIRE(k3.has_value());
    CHECK(k3->c1 == VertexSet{0, 1, 2});
    CHECK(k3->c2.empty());

    CHECK(!recognize_cobipartite(cycle_graph(5)).has_value());

    auto h = recognize_cobipartite(half_graph_complement(3));
    REQUIRE(h.has_value());
    CHECK(h->c1.size() == 3);
    CHECK(h->c2.size() == 3);
    CHECK(cobipartite_witness_valid(half_graph_complement(3), *h));
}

TEST_CASE("cobipartite recognition matches complement bipartiteness") {
    for (uint64_t seed = 0; seed < 300; ++seed) {
        int n = 1 + int(seed % 7);
        Graph g = oracles::random_graph(n, 0.55, seed ^ 0xc0b1);
        auto w = recognize_cobipartite(g);
        CHECK(w.has_value() == complement_bipartite_brute(g));
        if (w) CHECK(cobipartite_witness_valid(g, *w));
    }
}

TEST_CASE("split recognition examples") {
    auto star = recognize_split(star_graph(4));
    REQUIRE(star.has_value());
    CHECK(star->clique.size() == 2);
    CHECK(vset::contains(star->clique, 0));

    CHECK(!recognize_split(cycle_graph(4)).has_value());

    auto g3 = recognize_split(split_tight(3));
    REQUIRE(g3.has_value());
    CHECK(g3->clique.size() == 6);
    CHECK(g3->stable.size() == 3);
}

TEST_CASE("split recognition matches brute-force bipartition search") {
    for (uint64_t seed = 0; seed < 300; ++seed) {
        int n = 1 + int(seed % 7);
        Graph g = oracles::random_graph(n, 0.5, seed ^ 0x5011);
        CHECK(recognize_split(g).has_value() == oracles::brute_is_split(g));
    }
}

TEST_CASE("block graph recognition") {
    CHECK(recognize_block_graph(path_graph(6)));
    CHECK(!recognize_block_graph(cycle_graph(4)));
    CHECK(recognize_block_graph(fixtures::fig_block_graph()));
    CHECK(recognize_block_graph(fixtures::bowtie()));
    CHECK(!recognize_block_graph(fixtures::diamond()));
}

TEST_CASE("subcubic recognition") {
    CHECK(recognize_subcubic(two_corona(cycle_graph(6))));
    CHECK(!recognize_subcubic(complete_graph(5)));
    CHECK(recognize_subcubic(Graph(0)));
}

TEST_CASE("outerplanar recognition examples") {
    CHECK(recognize_outerplanar(cycle_graph(7)).outerplanar);

    auto k4 = recognize_outerplanar(complete_graph(4));
    REQUIRE(!k4.outerplanar);
    REQUIRE(k4.obstruction.has_value());
    CHECK(k4.obstruction->target == MinorModel::K4);
    CHECK(k4.obstruction->branch_sets.size() == 4);
    for (const auto& bs : k4.obstruction->branch_sets) CHECK(bs.size() == 1);

    auto k23 = recognize_outerplanar(oracles::k23());
    REQUIRE(!k23.outerplanar);
    CHECK(k23.obstruction->target == MinorModel::K23);
    CHECK(validate_minor_model(oracles::k23(), *k23.obstruction));
}

TEST_CASE("outerplanar recognition matches exhaustive minor search, n <= 7") {
    int checked = 0;
    enumerate_connected(6, {}, [&](const Graph& g) {
        auto r = recognize_outerplanar(g);
        CHECK(r.outerplanar == oracles::brute_outerplanar(g));
        if (!r.outerplanar) CHECK(validate_minor_model(g, *r.obstruction));
        // edge-count necessary condition
        if (r.outerplanar && g.order() >= 2) CHECK(g.size() <= 2L * g.order() - 3);
        ++checked;
        return true;
    });
    CHECK(checked == 112);
    // spot-sets of 7- and 8-vertex graphs via random masks
    for (uint64_t seed = 0; seed < 150; ++seed) {
        Graph g = oracles::random_graph(7, 0.25 + 0.05 * double(seed % 8), seed ^ 0x0779);
        auto r = recognize_outerplanar(g);
        CHECK(r.outerplanar == oracles::brute_outerplanar(g));
        if (!r.outerplanar) CHECK(validate_minor_model(g, *r.obstruction));
    }
    for (uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = oracles::random_graph(8, 0.2 + 0.05 * double(seed % 6), seed ^ 0x0880);
        auto r = recognize_outerplanar(g);
        CHECK(r.outerplanar == oracles::brute_outerplanar(g));
        if (!r.outerplanar) CHECK(validate_minor_model(g, *r.obstruction));
    }
}

TEST_CASE("hamiltonian cycle of 2-connected outerplanar blocks") {
    auto c5 = ham_cycle_outerplanar(cycle_graph(5));
    CHECK(c5 == std::vector<int>{0, 1, 2, 3, 4});

    // C_4 plus a chord: cycle excludes the chord
    Graph c4c(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    auto cyc = ham_cycle_outerplanar(c4c);
    CHECK(cyc == std::vector<int>{0, 1, 2, 3});

    // fan on 5 vertices (maximal outerplanar): boundary cycle
    Graph fan(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}, {0, 3}});
    auto f = ham_cycle_outerplanar(fan);
    CHECK(f == std::vector<int>{0, 1, 2, 3, 4});

    CHECK_THROWS_AS(ham_cycle_outerplanar(path_graph(4)), usage_error);
    CHECK_THROWS_AS(ham_cycle_outerplanar(complete_graph(4)), usage_error);
}

TEST_CASE("hamiltonian cycle matches brute enumeration and is unique") {
    int tested = 0;
    for (int n = 4; n <= 10 && tested < 500; ++n) {
        for (uint64_t seed = 0; seed < 120; ++seed) {
            RandomModel m{GraphClass::outerplanar, std::max(5, n), seed * 31 + n, false};
            Graph g = random_instance(m);
            auto bct = block_cut_tree(g);
            if (bct.blocks.size() != 1) continue;
            auto cycles = oracles::brute_ham_cycles(g);
            REQUIRE(cycles.size() == 1);  // unique for 2-connected outerplanar
            auto mine = ham_cycle_outerplanar(g);
            std::vector<std::pair<int, int>> edges;
            for (size_t i = 0; i < mine.size(); ++i) {
                int a = mine[i], b = mine[(i + 1) % mine.size()];
                edges.emplace_back(std::min(a, b), std::max(a, b));
            }
            std::sort(edges.begin(), edges.end());
            CHECK(edges == cycles[0]);
            ++tested;
        }
    }
    CHECK(tested > 100);
}

TEST_CASE("leg decomposition examples") {
    // C_5 with a pendant path of length 2 at vertex 0
    Graph g(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 6}});
    auto ld = leg_decomposition(g);
    REQUIRE(ld.legs.size() == 1);
    CHECK(ld.legs[0] == std::vector<int>{0, 5, 6});
    CHECK(ld.core == VertexSet{0, 1, 2, 3, 4});
    CHECK(ld.small_bridge_hypothesis);

    auto corona = leg_decomposition(two_corona(cycle_graph(6)));
    CHECK(corona.legs.size() == 6);
    for (const auto& leg : corona.legs) CHECK(leg.size() == 3);
    CHECK(corona.core == VertexSet{0, 1, 2, 3, 4, 5});
    CHECK(corona.small_bridge_hypothesis);

    auto c5 = leg_decomposition(cycle_graph(5));
    CHECK(c5.legs.empty());
    CHECK(c5.core == VertexSet{0, 1, 2, 3, 4});

    CHECK_THROWS_AS(leg_decomposition(path_graph(5)), usage_error);   // tree
    CHECK_THROWS_AS(leg_decomposition(Graph(4, {{0, 1}, {2, 3}})), usage_error);  // disconnected
}

TEST_CASE("leg decomposition flags a big bridge") {
    // two 5-cycles joined by a bridge
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) e.emplace_back(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i) e.emplace_back(5 + i, 5 + (i + 1) % 5);
    e.emplace_back(0, 5);
    auto ld = leg_decomposition(Graph(10, e));
    CHECK(!ld.small_bridge_hypothesis);
    CHECK(ld.legs.empty());
}

TEST_CASE("leg reattachment reproduces the graph") {
    for (uint64_t seed = 0; seed < 60; ++seed) {
        // outerplanar random + random legs attached by hand
        Graph base = random_instance({GraphClass::outerplanar, 8, seed, false});
        std::vector<std::pair<int, int>> e = base.edges();
        int next = base.order();
        std::mt19937_64 eng(seed);
        for (int v = 0; v < base.order(); v += 2) {
            int len = 1 + int(eng() % 3);
            int prev = v;
            for (int i = 0; i < len; ++i) {
                e.emplace_back(prev, next);
                prev = next++;
            }
        }
        Graph g(next, e);
        auto ld = leg_decomposition(g);
        // legs have the degree profile and their union with the core is V
        std::set<int> covered(ld.core.begin(), ld.core.end());
        for (const auto& leg : ld.legs) {
            CHECK(g.degree(leg.front()) >= 3);
            CHECK(g.degree(leg.back()) == 1);
            for (size_t i = 1; i + 1 < leg.size(); ++i) CHECK(g.degree(leg[i]) == 2);
            for (size_t i = 0; i + 1 < leg.size(); ++i) CHECK(g.has_edge(leg[i], leg[i + 1]));
            for (size_t i = 1; i < leg.size(); ++i) {
                CHECK(!covered.count(leg[i]));
                covered.insert(leg[i]);
            }
        }
        CHECK(int(covered.size()) == g.order());
    }
}
