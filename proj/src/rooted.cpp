#include "pg/rooted.hpp"

#include <algorithm>

namespace pg {

RootedPlaneGraph RootedPlaneGraph::root_at(PlaneGraph g, const std::vector<int>& cycle) {
    int f = g.find_face(cycle);
    if (f < 0)
        throw GraphError(GraphErrorKind::NotAFace, "cycle does not bound a face");
    return root_at_face(std::move(g), f);
}

RootedPlaneGraph RootedPlaneGraph::root_at_face(PlaneGraph g, int face_index) {
    if (face_index < 0 || face_index >= g.face_count())
        throw GraphError(GraphErrorKind::NotAFace, "no such face");
    RootedPlaneGraph r;
    r.base_ = std::move(g);
    r.outer_ = face_index;
    r.c0_ = r.base_.face(face_index).walk;
    r.finish();
    return r;
}

void RootedPlaneGraph::finish() {
    int n = base_.vertex_count();
    on_c0_.assign(n, 0);
    for (int v : base_.face(outer_).boundary) on_c0_[v] = 1;

    c0_count_.assign(base_.face_count(), 0);
    for (int f = 0; f < base_.face_count(); ++f) {
        int c = 0;
        for (int v : base_.face(f).boundary) c += on_c0_[v];
        c0_count_[f] = c;
    }

    // chords: edges between C0 vertices that are not consecutive on the walk
    int k = c0_length();
    chords_.clear();
    if (k >= 3 && base_.face(outer_).is_simple()) {
        auto consecutive = [&](int u, int v) {
            for (int i = 0; i < k; ++i) {
                int a = c0_[i], b = c0_[(i + 1) % k];
                if ((a == u && b == v) || (a == v && b == u)) return true;
            }
            return false;
        };
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                int u = c0_[i], v = c0_[j];
                if (base_.has_edge(u, v) && !consecutive(u, v))
                    chords_.emplace_back(std::min(u, v), std::max(u, v));
            }
        std::sort(chords_.begin(), chords_.end());
        chords_.erase(std::unique(chords_.begin(), chords_.end()), chords_.end());
    }
}

std::vector<int> RootedPlaneGraph::face_class(int k, int c0_vertices) const {
    std::vector<int> out;
    for (int f = 0; f < base_.face_count(); ++f)
        if (f != outer_ && base_.face(f).degree() == k && c0_count_[f] == c0_vertices)
            out.push_back(f);
    return out;
}

} // namespace pg
