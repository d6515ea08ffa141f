#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "ltdkit/construct.hpp"
#include "ltdkit/errors.hpp"
#include "ltdkit/families.hpp"
#include "ltdkit/io.hpp"
#include "ltdkit/structure.hpp"
#include "oracles.hpp"

using namespace ltdkit;

namespace {

// Outerplanar graphs with large bridges: a few random outerplanar blocks
// chained by paths, so the bridge-surgery cases actually fire.
Graph bridgey_outerplanar(uint64_t seed) {
    std::mt19937_64 eng(seed);
    for (int attempt = 0; attempt < 200; ++attempt) {
        int parts = 2 + int(eng() % 3);
        std::vector<std::pair<int, int>> edges;
        int total = 0;
        std::vector<int> entry;
        for (int p = 0; p < parts; ++p) {
            int n = 5 + int(eng() % 6);
            Graph blk = random_instance({GraphClass::outerplanar, n, eng(), false});
            for (auto [u, v] : blk.edges()) edges.emplace_back(total + u, total + v);
            entry.push_back(total + int(eng() % n));
            total += n;
        }
        for (int p = 1; p < parts; ++p) {
            int hops = int(eng() % 3);  // path of 0..2 intermediate vertices
            int prev = entry[size_t(eng() % p)];
            for (int h = 0; h < hops; ++h) {
                edges.emplace_back(prev, total);
                prev = total++;
            }
            edges.emplace_back(prev, entry[p]);
        }
        Graph g(total, edges);
        if (!is_twin_free(g)) continue;
        if (!recognize_outerplanar(g).outerplanar) continue;
        return g;
    }
    throw std::runtime_error("bridgey_outerplanar: could not sample");
}

}  // namespace

TEST_CASE("ftdom classification") {
    CHECK(ftdom_kind(Graph(1)) == FTdomKind::K1);
    CHECK(ftdom_kind(complete_graph(2)) == FTdomKind::K2);
    CHECK(ftdom_kind(complete_graph(4)) == FTdomKind::K4);
    CHECK(ftdom_kind(star_graph(4)) == FTdomKind::K13);
    CHECK(ftdom_kind(path_graph(4)) == FTdomKind::not_in_family);
    CHECK(ftdom_kind(fixtures::diamond()) == FTdomKind::not_in_family);
}

TEST_CASE("cobipartite construction") {
    Graph h2 = half_graph_complement(2);
    auto w = recognize_cobipartite(h2);
    REQUIRE(w.has_value());
    auto cert = construct_cobipartite(h2, *w);
    CHECK(cert.verified);
    CHECK(cert.size() == 2);  // = ceil(n/2)
    CHECK(cert.bound_cap == 2);

    for (int k = 2; k <= 5; ++k) {
        Graph g = half_graph_complement(k);
        auto cw = recognize_cobipartite(g);
        REQUIRE(cw.has_value());
        auto c = construct_cobipartite(g, *cw);
        CHECK(c.verified);
        CHECK(c.size() <= (g.order() + 1) / 2);
    }

    CHECK_THROWS_AS(construct_cobipartite(complete_graph(3), CobipartiteWitness{{0, 1, 2}, {}}),
                    domain_error);  // twins
}

TEST_CASE("cobipartite construction on random twin-free instances") {
    int exercised = 0;
    for (uint64_t seed = 1; exercised < 120; ++seed) {
        Graph g = random_instance({GraphClass::cobipartite, 6 + int(seed % 20), seed, true});
        auto w = recognize_cobipartite(g);
        REQUIRE(w.has_value());
        auto c = construct_cobipartite(g, *w);
        CHECK(c.verified);
        CHECK(c.size() <= (g.order() + 1) / 2);
        if (g.order() <= 13) {
            auto exact = oracles::naive_min_ltd(g);
            REQUIRE(exact.has_value());
            CHECK(exact->first <= c.size());
        }
        ++exercised;
    }
}

TEST_CASE("split construction: tight family") {
    for (int k : {3, 4, 5}) {
        Graph g = split_tight(k);
        auto w = recognize_split(g);
        REQUIRE(w.has_value());
        auto c = construct_split(g, *w);
        CHECK(c.verified);
        CHECK(c.strict);
        CHECK(3 * c.size() < 2L * g.order());
        CHECK(c.size() <= 2 * k - 1);
    }
    CHECK(exact_min_ltd(split_tight(5)).value == 9);

    // P_3 is split but has twins: the theorem's |Q|,|S| >= 2 guard
    auto w = recognize_split(path_graph(3));
    REQUIRE(w.has_value());
    CHECK_THROWS_AS(construct_split(path_graph(3), *w), domain_error);
}

TEST_CASE("split construction hits every proof case") {
    bool small_q = false, big_q = false, exact_q = false;
    int exercised = 0;
    for (uint64_t seed = 1; exercised < 300; ++seed) {
        Graph g = random_instance({GraphClass::split, 4 + int(seed % 26), seed, true});
        auto w = recognize_split(g);
        REQUIRE(w.has_value());
        auto c = construct_split(g, *w);
        CHECK(c.verified);
        CHECK(3 * c.size() < 2L * g.order());
        long q3 = 3L * long(w->clique.size());
        (q3 < 2L * g.order() ? small_q : q3 > 2L * g.order() ? big_q : exact_q) = true;
        ++exercised;
    }
    CHECK(small_q);
    CHECK(big_q);
    CHECK(exact_q);  // |Q| = 2n/3 occurs in the sample
}

TEST_CASE("block construction: P_3 and the figure graph") {
    auto p3 = construct_block(path_graph(3));
    CHECK(p3.verified);
    CHECK(p3.set == VertexSet{0, 1});

    Graph fig = fixtures::fig_block_graph();
    auto c = construct_block(fig);
    CHECK(c.verified);
    CHECK(c.size() <= 8);  // floor(2*13/3)
    // the first reduction picks p=2 and A={2,5,6}
    REQUIRE(!c.trace.empty());
    CHECK(c.trace[0].find("A={2,5,6}") != std::string::npos);

    Graph corona = two_corona(complete_graph(6));
    auto cc = construct_block(corona);
    CHECK(cc.verified);
    CHECK(cc.size() <= 12);
    CHECK(exact_min_ltd(corona).value == 12);
}

TEST_CASE("block construction rejects bad inputs") {
    CHECK_THROWS_AS(construct_block(cycle_graph(5)), domain_error);      // not a block graph
    CHECK_THROWS_AS(construct_block(complete_graph(4)), domain_error);   // twins
    CHECK_THROWS_AS(construct_block(Graph(7, {{0, 1}, {2, 3}, {3, 4}, {2, 4}, {4, 5}, {5, 6}})),
                    domain_error);                                       // disconnected
}

TEST_CASE("block construction on random twin-free block graphs") {
    int exercised = 0;
    for (uint64_t seed = 1; exercised < 150; ++seed) {
        Graph g = random_instance({GraphClass::block, 6 + int(seed % 30), seed, true});
        auto c = construct_block(g);
        CHECK(c.verified);
        CHECK(3 * c.size() <= 2L * g.order());
        if (g.order() <= 13) {
            auto exact = oracles::naive_min_ltd(g);
            REQUIRE(exact.has_value());
            CHECK(exact->first <= c.size());
        }
        ++exercised;
    }
}

TEST_CASE("subcubic construction: named examples") {
    CHECK(construct_subcubic(complete_graph(3)).size() == 2);
    CHECK(construct_subcubic(fixtures::diamond()).size() == 2);
    CHECK(construct_subcubic(cycle_graph(5)).size() == 3);

    Graph corona = two_corona(cycle_graph(6));
    auto c = construct_subcubic(corona);
    CHECK(c.verified);
    CHECK(c.size() <= 12);
    CHECK(exact_min_ltd(corona).value == 12);

    CHECK_THROWS_AS(construct_subcubic(complete_graph(4)), domain_error);
    CHECK_THROWS_AS(construct_subcubic(star_graph(4)), domain_error);
    CHECK_THROWS_AS(construct_subcubic(complete_graph(2)), domain_error);
    CHECK_THROWS_AS(construct_subcubic(complete_graph(5)), usage_error);  // not subcubic
}

TEST_CASE("subcubic construction allows twins") {
    auto c4 = construct_subcubic(cycle_graph(4));
    CHECK(c4.verified);
    CHECK(c4.size() == 2);
    auto paw = construct_subcubic(fixtures::paw());
    CHECK(paw.verified);
    CHECK(paw.size() == 2);
}

TEST_CASE("subcubic construction survives exhaustive small graphs") {
    for (int n = 3; n <= 7; ++n) {
        EnumFilter f;
        f.cls = GraphClass::subcubic;
        enumerate_connected(n, f, [&](const Graph& g) {
            if (ftdom_kind(g) != FTdomKind::not_in_family) return true;
            auto c = construct_subcubic(g);
            CHECK(c.verified);
            CHECK(3 * c.size() <= 2L * g.order());
            auto exact = oracles::naive_min_ltd(g);
            REQUIRE(exact.has_value());
            CHECK(exact->first <= c.size());
            return true;
        });
    }
}

TEST_CASE("subcubic construction on random instances up to n=120") {
    int exercised = 0;
    for (uint64_t seed = 1; exercised < 150; ++seed) {
        int n = 8 + int(seed * 7 % 113);
        Graph g = random_instance({GraphClass::subcubic, n, seed, (seed % 3) != 0});
        if (ftdom_kind(g) != FTdomKind::not_in_family) continue;
        auto c = construct_subcubic(g);
        CHECK(c.verified);
        CHECK(3 * c.size() <= 2L * g.order());
        ++exercised;
    }
}

TEST_CASE("small-bridge construction: figure goldens") {
    Graph corona = two_corona(cycle_graph(6));
    auto ld = leg_decomposition(corona);
    auto cert = smallbridge_construct(corona, ld);
    REQUIRE(cert.has_value());
    CHECK(cert->verified);
    CHECK(cert->set == VertexSet{0, 1, 2, 3, 4, 5, 6, 8, 10, 12, 14, 16});

    Graph c9 = cycle_graph(9);
    auto c9cert = smallbridge_construct(c9, leg_decomposition(c9));
    REQUIRE(c9cert.has_value());
    CHECK(c9cert->set == VertexSet{1, 2, 4, 5, 7, 8});
    CHECK(c9cert->verified);

    Graph fig5 = fixtures::fig_smallbridge_example();
    REQUIRE(is_twin_free(fig5));
    REQUIRE(recognize_outerplanar(fig5).outerplanar);
    auto ld5 = leg_decomposition(fig5);
    REQUIRE(ld5.small_bridge_hypothesis);
    auto c5 = smallbridge_construct(fig5, ld5);
    REQUIRE(c5.has_value());
    CHECK(c5->verified);
    CHECK(c5->set == fixtures::fig_smallbridge_expected());
}

TEST_CASE("small-bridge construction: leg-length selection rules") {
    // legs of length 1, 2, 3 pick {l0}, {l0,l1}, {l1,l2}
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 6; ++i) e.emplace_back(i, (i + 1) % 6);
    e.emplace_back(0, 6);                                        // length 1 at 0
    e.emplace_back(2, 7); e.emplace_back(7, 8);                  // length 2 at 2
    e.emplace_back(4, 9); e.emplace_back(9, 10); e.emplace_back(10, 11);  // length 3 at 4
    Graph g(12, e);
    REQUIRE(is_twin_free(g));
    auto cert = smallbridge_construct(g, leg_decomposition(g));
    REQUIRE(cert.has_value());
    CHECK(cert->verified);
    CHECK(vset::contains(cert->set, 0));                        // l0 of the length-1 leg
    CHECK(vset::contains(cert->set, 2));
    CHECK(vset::contains(cert->set, 7));                        // l0, l1 of the length-2 leg
    CHECK(!vset::contains(cert->set, 8));
    CHECK(vset::contains(cert->set, 9));
    CHECK(vset::contains(cert->set, 10));                       // l1, l2 of the length-3 leg
    CHECK(!vset::contains(cert->set, 11));
}

TEST_CASE("small-bridge construction signals non-applicability") {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) e.emplace_back(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i) e.emplace_back(5 + i, 5 + (i + 1) % 5);
    e.emplace_back(0, 5);
    Graph g(10, e);
    CHECK(!smallbridge_construct(g, leg_decomposition(g)).has_value());
    CHECK_THROWS_AS(smallbridge_construct(path_graph(6), leg_decomposition(cycle_graph(5))),
                    usage_error);  // tree input
}

TEST_CASE("outerplanar construction: cycles and coronas") {
    auto c7 = construct_outerplanar(cycle_graph(7));
    CHECK(c7.verified);
    CHECK(c7.size() <= 4);
    CHECK(exact_min_ltd(cycle_graph(7)).value == 4);

    auto corona = construct_outerplanar(two_corona(cycle_graph(6)));
    CHECK(corona.verified);
    CHECK(corona.set == VertexSet{0, 1, 2, 3, 4, 5, 6, 8, 10, 12, 14, 16});

    CHECK_THROWS_AS(construct_outerplanar(complete_graph(4)), domain_error);
    CHECK_THROWS_AS(construct_outerplanar(cycle_graph(4)), domain_error);  // twins
}

TEST_CASE("outerplanar bridge surgery: hand-built twin cases") {
    // Case 2 via the claim: triangle {0,1,2} with pendant 3 at 2, bridged at 0
    // to a 5-cycle. The side {0,1,2,3} has closed twins {0,1}.
    Graph g2(9, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {0, 4},
                 {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 4}});
    REQUIRE(is_twin_free(g2));
    auto c2 = construct_outerplanar(g2);
    CHECK(c2.verified);
    CHECK(3 * c2.size() <= 2L * g2.order());

    // Case 1: {0,1} are open twins over {2,3} in the left side (a 4-cycle
    // with a tail), and removing the endpoint 0 leaves it twin-free.
    Graph g1(10, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {0, 5},
                  {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 5}});
    REQUIRE(is_twin_free(g1));
    auto c1 = construct_outerplanar(g1);
    CHECK(c1.verified);
    CHECK(3 * c1.size() <= 2L * g1.order());

    // Case 1 with the duplicated-leaf wrinkle: the B side already has a leaf
    // at the bridge endpoint.
    Graph g3(11, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {0, 5},
                  {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 5}, {5, 10}});
    REQUIRE(is_twin_free(g3));
    auto c3 = construct_outerplanar(g3);
    CHECK(c3.verified);
    CHECK(3 * c3.size() <= 2L * g3.order());
}

TEST_CASE("outerplanar construction on bridge-rich random instances") {
    for (uint64_t seed = 0; seed < 80; ++seed) {
        Graph g = bridgey_outerplanar(seed);
        auto c = construct_outerplanar(g);
        CHECK(c.verified);
        CHECK(3 * c.size() <= 2L * g.order());
        if (g.order() <= 13) {
            auto exact = oracles::naive_min_ltd(g);
            REQUIRE(exact.has_value());
            CHECK(exact->first <= c.size());
        }
    }
}

TEST_CASE("outerplanar construction on polygon-style random instances") {
    int exercised = 0;
    for (uint64_t seed = 1; exercised < 120; ++seed) {
        Graph g = random_instance({GraphClass::outerplanar, 5 + int(seed % 40), seed, true});
        auto c = construct_outerplanar(g);
        CHECK(c.verified);
        CHECK(3 * c.size() <= 2L * g.order());
        ++exercised;
    }
}

TEST_CASE("construct_auto dispatch") {
    auto c6 = construct_auto(cycle_graph(6));
    CHECK(c6.theorem == Theorem::outerplanar);
    CHECK(c6.size() == 4);

    auto k4 = construct_auto(complete_graph(4));
    CHECK(k4.theorem == Theorem::exact);
    CHECK(k4.size() == 3);

    Graph split30 = random_instance({GraphClass::split, 30, 1, true});
    auto cs = construct_auto(split30);
    CHECK(cs.theorem == Theorem::split);
    CHECK(cs.verified);
    CHECK(cs.size() < 20);

    // disconnected input: componentwise
    std::vector<std::pair<int, int>> e = cycle_graph(6).edges();
    e.emplace_back(6, 7);
    e.emplace_back(7, 8);
    auto mixed = construct_auto(Graph(9, e));
    CHECK(mixed.theorem == Theorem::composite);
    CHECK(mixed.verified);

    CHECK_THROWS_AS(construct_auto(Graph(2)), domain_error);  // isolated vertices
}

TEST_CASE("constructions bound sandwich on exhaustive small outerplanar graphs") {
    EnumFilter f;
    f.twin_free = true;
    f.cls = GraphClass::outerplanar;
    for (int n = 4; n <= 7; ++n) {
        enumerate_connected(n, f, [&](const Graph& g) {
            if (!is_isolate_free(g)) return true;
            auto c = construct_outerplanar(g);
            auto exact = oracles::naive_min_ltd(g);
            REQUIRE(exact.has_value());
            CHECK(exact->first <= c.size());
            CHECK(c.size() <= c.bound_cap);
            return true;
        });
    }
}
