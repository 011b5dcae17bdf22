#pragma once

#include "pg/plane_graph.hpp"

#include <utility>
#include <vector>

namespace pg {

// A PlaneGraph with one face designated as the outer face. Its boundary cycle
// is C0; every other face is classified by how many of its boundary vertices
// lie on C0 (0 -> F_k, 1 -> F_k', 2 -> F_k'').
class RootedPlaneGraph {
public:
    // `cycle` must bound a face; throws NotAFace otherwise.
    static RootedPlaneGraph root_at(PlaneGraph g, const std::vector<int>& cycle);
    // Roots at an arbitrary face index, including degenerate (non-cycle)
    // walks. Charge accounting is well defined for any designated face, which
    // lets sweeps run over graphs whose faces are all degenerate (trees).
    static RootedPlaneGraph root_at_face(PlaneGraph g, int face_index);

    const PlaneGraph& base() const { return base_; }
    int outer_face() const { return outer_; }
    const std::vector<int>& outer_cycle() const { return c0_; }
    int c0_length() const { return static_cast<int>(c0_.size()); }

    bool on_c0(int v) const { return on_c0_[v]; }
    bool interior(int v) const { return !on_c0_[v]; }

    // |b(f) ∩ C0|
    int c0_incidence(int f) const { return c0_count_[f]; }
    bool is_outer(int f) const { return f == outer_; }

    // F_k (count==0), F_k' (==1), F_k'' (==2) membership for non-outer faces.
    bool in_F(int f) const { return f != outer_ && c0_count_[f] == 0; }
    bool in_Fp(int f) const { return f != outer_ && c0_count_[f] == 1; }
    bool in_Fpp(int f) const { return f != outer_ && c0_count_[f] == 2; }

    // all non-outer faces with degree k and the given C0 incidence
    std::vector<int> face_class(int k, int c0_vertices) const;

    // chords of C0 (edges joining non-consecutive C0 vertices); recorded, not
    // rejected — a facial 7-cycle need not be induced
    const std::vector<std::pair<int, int>>& c0_chords() const { return chords_; }

private:
    RootedPlaneGraph() = default;
    void finish();

    PlaneGraph base_;
    int outer_ = -1;
    std::vector<int> c0_;
    std::vector<char> on_c0_;
    std::vector<int> c0_count_;
    std::vector<std::pair<int, int>> chords_;
};

} // namespace pg
