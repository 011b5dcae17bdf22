#pragma once

#include "pg/plane_graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pg {

struct CycleWitness {
    std::vector<int> vertices; // canonical: least rotation/reflection
    bool facial = false;
    bool separating = false;

    int length() const { return static_cast<int>(vertices.size()); }
};

// Lexicographically least among all rotations and both directions.
std::vector<int> canonical_cycle(const std::vector<int>& cycle);

// All simple cycles of length <= max_len on an abstract adjacency, each once
// in canonical form, sorted by (length, vertex sequence). 3 <= max_len <= 8.
std::vector<std::vector<int>> find_cycles_up_to(const AbstractGraph& g, int max_len);

// Same enumeration on the embedding, with facial / separating tags.
std::vector<CycleWitness> cycles_up_to(const PlaneGraph& g, int max_len);

// True iff vertices lie strictly on both sides of the cycle in the embedding.
// Throws NotACycle when the sequence is not a cycle of g.
bool is_separating(const PlaneGraph& g, const std::vector<int>& cycle);

enum class ViolationKind { FiveCycle, AdjacentTriangles };

struct FamilyViolation {
    ViolationKind kind;
    std::vector<int> cycle;        // the 5-cycle, or the first triangle
    std::vector<int> second_cycle; // the second triangle (adjacency case)
    std::string describe() const;
};

struct FamilyVerdict {
    std::optional<FamilyViolation> violation;
    bool in_family() const { return !violation.has_value(); }
};

// Family membership: no 5-cycle and no two triangles sharing an edge.
// Pure cycle conditions, so both graph views are supported.
FamilyVerdict check_family_membership(const AbstractGraph& g);
FamilyVerdict check_family_membership(const PlaneGraph& g);

} // namespace pg
