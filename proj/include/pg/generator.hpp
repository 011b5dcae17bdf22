#pragma once

#include "pg/plane_graph.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace pg {

class BoundTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class GenFilter { All, FamilyF, HasTriangle };

// Canonical byte code of an embedding, invariant under relabeling and
// reflection: the minimum, over all starting darts and both orientations, of
// the breadth-first planar_code emitted from that dart. Two rotation systems
// get the same code iff they are isomorphic as sphere embeddings.
std::vector<std::uint8_t> embedding_code(const std::vector<std::vector<int>>& rotation);

PlaneGraph decode_embedding_code(const std::vector<std::uint8_t>& code);

// Exhaustively generates the connected plane graphs with at most max_n
// vertices (max_n <= 10), one canonical representative per embedding class,
// by face-corner edge insertion and leaf attachment starting from K1.
// Deterministic output order: (n, m, code).
std::vector<PlaneGraph> generate_plane_graphs(int max_n, GenFilter filter = GenFilter::All);

bool has_triangle(const AbstractGraph& g);

} // namespace pg
