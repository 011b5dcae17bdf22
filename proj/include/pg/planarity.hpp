#pragma once

#include "pg/plane_graph.hpp"

#include <optional>
#include <vector>

namespace pg {

// Planarity test plus embedding for small connected graphs: face-by-face
// fragment insertion with backtracking over the admissible faces, run per
// biconnected block and merged at the cut vertices. Intended for the graph
// sizes this toolkit handles (contractions of desk-scale inputs), not as a
// general-purpose planarity library.
std::optional<std::vector<std::vector<int>>> planar_rotation(const AbstractGraph& g);

inline std::optional<PlaneGraph> planar_embedding(const AbstractGraph& g) {
    auto rot = planar_rotation(g);
    if (!rot) return std::nullopt;
    return PlaneGraph::build_from_rotation(*rot);
}

} // namespace pg
