#include "pg/contract.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace pg {

ContractionResult contract_sets(const PlaneGraph& g, const std::vector<std::vector<int>>& sets) {
    int n = g.vertex_count();
    std::vector<int> group(n, -1);
    for (int i = 0; i < static_cast<int>(sets.size()); ++i) {
        if (sets[i].empty()) throw GraphError(GraphErrorKind::BadVertexId, "empty contraction set");
        for (int v : sets[i]) {
            if (v < 0 || v >= n) throw GraphError(GraphErrorKind::BadVertexId, "vertex out of range");
            if (group[v] != -1)
                throw GraphError(GraphErrorKind::BadVertexId, "contraction sets are not disjoint");
            group[v] = i;
        }
    }
    for (const auto& s : sets)
        for (size_t i = 0; i < s.size(); ++i)
            for (size_t j = i + 1; j < s.size(); ++j)
                if (g.has_edge(s[i], s[j]))
                    throw GraphError(GraphErrorKind::LoopCreated,
                                     "vertices " + std::to_string(s[i] + 1) + " and " +
                                         std::to_string(s[j] + 1) + " are adjacent");

    // each set collapses onto its least member; ids compress in vertex order
    std::vector<int> rep(n);
    for (int v = 0; v < n; ++v) rep[v] = v;
    for (const auto& s : sets) {
        int m = *std::min_element(s.begin(), s.end());
        for (int v : s) rep[v] = m;
    }
    std::vector<int> newid(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (rep[v] == v) newid[v] = next++;

    ContractionResult res;
    res.vertex_map.resize(n);
    for (int v = 0; v < n; ++v) res.vertex_map[v] = newid[rep[v]];
    res.graph = AbstractGraph(next);
    for (int v = 0; v < n; ++v)
        for (int w : g.rotation(v))
            if (v < w && res.vertex_map[v] != res.vertex_map[w])
                res.graph.add_edge(res.vertex_map[v], res.vertex_map[w]);

    res.embedding = planar_embedding(res.graph);
    return res;
}

} // namespace pg
