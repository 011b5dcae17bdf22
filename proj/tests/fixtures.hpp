#pragma once

#include "pg/plane_graph.hpp"
#include "pg/rooted.hpp"

#include <vector>

namespace fixtures {

using pg::PlaneGraph;

inline PlaneGraph triangle() {
    return PlaneGraph::build_from_rotation({{1, 2}, {2, 0}, {0, 1}});
}

inline PlaneGraph single_edge() {
    return PlaneGraph::build_from_rotation({{1}, {0}});
}

inline PlaneGraph path3() {
    return PlaneGraph::build_from_rotation({{1}, {0, 2}, {1}});
}

// outer square 0..3, inner square 4..7, spokes i - i+4
inline PlaneGraph cube() {
    return PlaneGraph::build_from_rotation({
        {1, 4, 3},
        {0, 2, 5},
        {3, 6, 1},
        {0, 7, 2},
        {0, 5, 7},
        {4, 1, 6},
        {7, 5, 2},
        {4, 6, 3},
    });
}

// outer triangle 0,1,2 with hub 3 inside (K4 = wheel W3)
inline PlaneGraph k4_wheel() {
    return PlaneGraph::build_from_rotation({
        {1, 3, 2},
        {2, 3, 0},
        {0, 3, 1},
        {0, 1, 2},
    });
}

inline PlaneGraph cycle(int n) {
    std::vector<std::vector<int>> rot(n);
    for (int i = 0; i < n; ++i) rot[i] = {(i + 1) % n, (i + n - 1) % n};
    return PlaneGraph::build_from_rotation(rot);
}

// triangle 0,1,2 with a pendant vertex 3 attached to 0
inline PlaneGraph triangle_with_pendant() {
    return PlaneGraph::build_from_rotation({{1, 3, 2}, {2, 0}, {0, 1}, {0}});
}

// triangle 0,1,2; vertex 3 inside and 4 outside, both joined to all three
inline PlaneGraph double_wheel() {
    return PlaneGraph::build_from_rotation({
        {1, 3, 2, 4},
        {2, 3, 0, 4},
        {0, 3, 1, 4},
        {0, 1, 2},
        {0, 2, 1},
    });
}

inline pg::RootedPlaneGraph cube_rooted() {
    return pg::RootedPlaneGraph::root_at(cube(), {0, 1, 2, 3});
}

inline pg::AbstractGraph complete(int n) {
    pg::AbstractGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

} // namespace fixtures
