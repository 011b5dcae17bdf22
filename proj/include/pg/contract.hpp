#pragma once

#include "pg/planarity.hpp"
#include "pg/plane_graph.hpp"

#include <optional>
#include <vector>

namespace pg {

struct ContractionResult {
    AbstractGraph graph;
    std::vector<int> vertex_map; // original vertex -> contracted vertex
    // best-effort re-embedding; empty when the contracted graph is not
    // planar, in which case cycle conditions still apply to `graph`
    std::optional<PlaneGraph> embedding;

    bool has_embedding() const { return embedding.has_value(); }
};

// Identifies each set to a single vertex and merges parallel edges. Throws
// LoopCreated when a set contains two adjacent vertices.
ContractionResult contract_sets(const PlaneGraph& g, const std::vector<std::vector<int>>& sets);

} // namespace pg
