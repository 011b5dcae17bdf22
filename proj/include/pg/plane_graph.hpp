#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pg {

enum class GraphErrorKind {
    MissingReverseEdge,
    LoopOrMultiEdge,
    Disconnected,
    EulerViolation,
    NotAFace,
    NotACycle,
    LoopCreated,
    BadVertexId,
};

class GraphError : public std::runtime_error {
public:
    GraphError(GraphErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    GraphErrorKind kind() const { return kind_; }

private:
    GraphErrorKind kind_;
};

// Plain simple graph, no embedding. Used for contraction results and as the
// shared adjacency view for colorings and cycle conditions.
struct AbstractGraph {
    int n = 0;
    std::vector<std::vector<int>> adj; // sorted, no loops, no duplicates

    AbstractGraph() = default;
    explicit AbstractGraph(int n_) : n(n_), adj(n_) {}

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    int edge_count() const;
    bool connected() const;
};

// One face of the embedding: a closed boundary walk. walk[i] -> walk[i+1]
// are the directed edges of the face; |walk| is the face degree. Walks may
// repeat vertices (a tree edge is walked from both sides).
struct Face {
    std::vector<int> walk;
    std::vector<int> boundary; // distinct walk vertices, ascending

    int degree() const { return static_cast<int>(walk.size()); }
    bool contains(int v) const;
    // true when the walk visits |walk| distinct vertices, i.e. bounds a cycle
    bool is_simple() const { return static_cast<int>(boundary.size()) == degree(); }
};

// Immutable combinatorial embedding: a clockwise rotation per vertex plus the
// face set it induces. Faces are traced with one fixed convention: the
// successor of directed edge (u,v) leaves v toward the neighbor preceding u
// in v's clockwise rotation.
class PlaneGraph {
public:
    PlaneGraph() = default; // empty; fill via build_from_rotation

    // Validates symmetry, simplicity, connectivity and the genus-0 face count.
    static PlaneGraph build_from_rotation(const std::vector<std::vector<int>>& rotation);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    int face_count() const { return static_cast<int>(faces_.size()); }

    const std::vector<int>& rotation(int v) const { return rotation_[v]; }
    const std::vector<std::vector<int>>& rotations() const { return rotation_; }
    int degree(int v) const { return static_cast<int>(rotation_[v].size()); }
    bool has_edge(int u, int v) const;

    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(int f) const { return faces_[f]; }

    // Faces incident with v, in clockwise order around v: entry i is the face
    // containing the directed edge (v, rotation(v)[i]).
    const std::vector<int>& faces_at(int v) const { return vertex_faces_[v]; }
    // Face on the side of directed edge (u,v), i.e. the face whose walk
    // contains u followed by v.
    int face_of_dart(int u, int v) const;

    // Index of the face bounded by `cycle` (as an unordered closed walk up to
    // rotation/reflection), or -1.
    int find_face(const std::vector<int>& cycle) const;

    AbstractGraph abstract() const;

    // Interior vertices of degree < 3 are legal for the data model; this
    // lists them so callers can surface a structural note instead of failing.
    std::vector<int> low_degree_vertices() const;

private:
    void trace_faces();

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> rotation_;
    std::vector<Face> faces_;
    std::vector<std::vector<int>> vertex_faces_;
    // position of u within rotation_[v], keyed like the rotation itself
    std::vector<std::vector<int>> dart_face_; // face id per dart (v, rotation_[v][i])
};

} // namespace pg
