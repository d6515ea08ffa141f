#pragma once

// Hand-built graphs used across the test suites, including the paper-figure
// graphs with a fixed vertex numbering.

#include "ltdkit/graph.hpp"

namespace fixtures {

using ltdkit::Graph;

inline Graph paw() {  // triangle 0,1,2 plus pendant 3 at 0
    return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
}

inline Graph diamond() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

inline Graph bowtie() {  // two triangles sharing vertex 2
    return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

// The block graph of the figure with seven blocks: cut vertices carry the
// paper's labels 1..6 (r=1, p=2), the non-cut vertices are 0 and 7..12.
//   B1 = {1,7}  B2 = K4 {1,2,3,8}  B3 = K4 {2,5,6,9}  B4 = {0,5}
//   B5 = {6,10}  B6 = triangle {3,4,11}  B7 = {4,12}
inline Graph fig_block_graph() {
    return Graph(13, {{1, 7},
                      {1, 2}, {1, 3}, {1, 8}, {2, 3}, {2, 8}, {3, 8},
                      {2, 5}, {2, 6}, {2, 9}, {5, 6}, {5, 9}, {6, 9},
                      {0, 5},
                      {6, 10},
                      {3, 4}, {3, 11}, {4, 11},
                      {4, 12}});
}

// The small-bridge worked example: a 5-cycle {0..4} and a 22-cycle
// 0,5,6,...,25 sharing vertex 0, with non-crossing chords and pendant legs.
// Cycle position j (the paper's v_j) is vertex 4+j for j >= 1.
inline Graph fig_smallbridge_example() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) e.push_back({i, (i + 1) % 5});
    e.push_back({0, 5});
    for (int v = 5; v < 25; ++v) e.push_back({v, v + 1});
    e.push_back({25, 0});
    // chords
    e.push_back({5, 23});
    e.push_back({23, 20});
    e.push_back({20, 6});
    e.push_back({7, 9});
    e.push_back({9, 15});
    e.push_back({15, 18});
    e.push_back({18, 16});
    e.push_back({19, 9});
    // legs: (anchor, path...)
    e.push_back({5, 26});                                      // v1: length 1
    e.push_back({11, 27});                                     // v7: length 1
    e.push_back({11, 28}); e.push_back({28, 29});              // v7: length 2
    e.push_back({12, 30}); e.push_back({30, 31}); e.push_back({31, 32});  // v8: length 3
    e.push_back({12, 33}); e.push_back({33, 34}); e.push_back({34, 35});  // v8: length 3
    e.push_back({14, 36}); e.push_back({36, 37});              // v10: length 2
    e.push_back({14, 38}); e.push_back({38, 39});              // v10: length 2
    e.push_back({15, 40}); e.push_back({40, 41}); e.push_back({41, 42});  // v11: length 3
    e.push_back({15, 43}); e.push_back({43, 44});              // v11: length 2
    e.push_back({16, 45});                                     // v12: length 1
    e.push_back({21, 46});                                     // v17: length 1
    return Graph(47, e);
}

// Black vertices of the small-bridge figure under the numbering above, plus
// the {1,2,3} pattern the construction places on the 5-cycle root block.
inline ltdkit::VertexSet fig_smallbridge_expected() {
    return {1, 2, 3,
            5, 6, 8, 9, 10, 11, 13, 14, 15, 16, 17, 18, 20, 21, 22, 23, 24,
            28, 30, 31, 33, 34, 36, 38, 40, 41, 43};
}

}  // namespace fixtures
