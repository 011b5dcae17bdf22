#include "pg/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace pg {

void AbstractGraph::add_edge(int u, int v) {
    if (u == v) throw GraphError(GraphErrorKind::LoopOrMultiEdge, "loop at vertex " + std::to_string(u + 1));
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw GraphError(GraphErrorKind::BadVertexId, "edge endpoint out of range");
    if (has_edge(u, v)) return;
    adj[u].insert(std::lower_bound(adj[u].begin(), adj[u].end(), v), v);
    adj[v].insert(std::lower_bound(adj[v].begin(), adj[v].end(), u), u);
}

bool AbstractGraph::has_edge(int u, int v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

int AbstractGraph::edge_count() const {
    int s = 0;
    for (const auto& a : adj) s += static_cast<int>(a.size());
    return s / 2;
}

bool AbstractGraph::connected() const {
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : adj[u])
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                q.push(w);
            }
    }
    return cnt == n;
}

bool Face::contains(int v) const {
    return std::binary_search(boundary.begin(), boundary.end(), v);
}

PlaneGraph PlaneGraph::build_from_rotation(const std::vector<std::vector<int>>& rotation) {
    PlaneGraph g;
    g.n_ = static_cast<int>(rotation.size());
    if (g.n_ == 0) throw GraphError(GraphErrorKind::BadVertexId, "empty graph");
    g.rotation_ = rotation;

    int dart_count = 0;
    for (int v = 0; v < g.n_; ++v) {
        std::set<int> seen;
        for (int w : rotation[v]) {
            if (w < 0 || w >= g.n_)
                throw GraphError(GraphErrorKind::BadVertexId,
                                 "vertex " + std::to_string(v + 1) + " lists a neighbor out of range");
            if (w == v)
                throw GraphError(GraphErrorKind::LoopOrMultiEdge, "loop at vertex " + std::to_string(v + 1));
            if (!seen.insert(w).second)
                throw GraphError(GraphErrorKind::LoopOrMultiEdge,
                                 "repeated neighbor in rotation of vertex " + std::to_string(v + 1));
        }
        dart_count += static_cast<int>(rotation[v].size());
    }
    for (int v = 0; v < g.n_; ++v)
        for (int w : rotation[v]) {
            const auto& rw = rotation[w];
            if (std::find(rw.begin(), rw.end(), v) == rw.end())
                throw GraphError(GraphErrorKind::MissingReverseEdge,
                                 "edge " + std::to_string(v + 1) + "-" + std::to_string(w + 1) +
                                     " has no reverse");
        }
    g.m_ = dart_count / 2;

    // connectivity
    {
        std::vector<char> seen(g.n_, 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        int cnt = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : rotation[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++cnt;
                    q.push(w);
                }
        }
        if (cnt != g.n_) throw GraphError(GraphErrorKind::Disconnected, "graph is not connected");
    }

    g.trace_faces();

    if (g.n_ - g.m_ + g.face_count() != 2)
        throw GraphError(GraphErrorKind::EulerViolation,
                         "rotation system is not a sphere embedding: V-E+F = " +
                             std::to_string(g.n_ - g.m_ + g.face_count()));
    return g;
}

void PlaneGraph::trace_faces() {
    if (n_ == 1 && m_ == 0) {
        // a single vertex on the sphere still has one face
        faces_.assign(1, Face{});
        vertex_faces_.assign(1, {});
        dart_face_.assign(1, {});
        return;
    }
    // position of u in rotation_[v]
    std::vector<std::map<int, int>> pos(n_);
    for (int v = 0; v < n_; ++v)
        for (int i = 0; i < degree(v); ++i) pos[v][rotation_[v][i]] = i;

    dart_face_.assign(n_, {});
    for (int v = 0; v < n_; ++v) dart_face_[v].assign(degree(v), -1);

    // raw orbits of the next-dart permutation
    std::vector<std::vector<int>> walks;
    for (int v = 0; v < n_; ++v)
        for (int i = 0; i < degree(v); ++i) {
            if (dart_face_[v][i] != -1) continue;
            std::vector<int> walk;
            int a = v, bi = i;
            int fid = static_cast<int>(walks.size());
            while (dart_face_[a][bi] == -1) {
                dart_face_[a][bi] = fid;
                int b = rotation_[a][bi];
                walk.push_back(a);
                // successor of (a,b): leave b toward the neighbor preceding a
                int pa = pos[b].at(a);
                int ci = (pa + degree(b) - 1) % degree(b);
                a = b;
                bi = ci;
            }
            walks.push_back(std::move(walk));
        }

    // canonical walk start: lexicographically least rotation of the walk,
    // then order faces by walk; keeps traces byte-for-byte reproducible
    auto canonical_rotate = [](std::vector<int>& w) {
        if (w.empty()) return;
        int k = static_cast<int>(w.size());
        int best = 0;
        for (int s = 1; s < k; ++s) {
            for (int t = 0; t < k; ++t) {
                int a = w[(s + t) % k], b = w[(best + t) % k];
                if (a != b) {
                    if (a < b) best = s;
                    break;
                }
            }
        }
        std::rotate(w.begin(), w.begin() + best, w.end());
    };

    std::vector<std::pair<std::vector<int>, int>> order;
    for (int f = 0; f < static_cast<int>(walks.size()); ++f) {
        canonical_rotate(walks[f]);
        order.emplace_back(walks[f], f);
    }
    std::sort(order.begin(), order.end());

    std::vector<int> renum(walks.size());
    faces_.clear();
    for (int newf = 0; newf < static_cast<int>(order.size()); ++newf) {
        renum[order[newf].second] = newf;
        Face face;
        face.walk = order[newf].first;
        face.boundary = face.walk;
        std::sort(face.boundary.begin(), face.boundary.end());
        face.boundary.erase(std::unique(face.boundary.begin(), face.boundary.end()), face.boundary.end());
        faces_.push_back(std::move(face));
    }
    for (int v = 0; v < n_; ++v)
        for (int i = 0; i < degree(v); ++i) dart_face_[v][i] = renum[dart_face_[v][i]];

    vertex_faces_.assign(n_, {});
    for (int v = 0; v < n_; ++v)
        for (int i = 0; i < degree(v); ++i) vertex_faces_[v].push_back(dart_face_[v][i]);
}

bool PlaneGraph::has_edge(int u, int v) const {
    const auto& r = rotation_[u];
    return std::find(r.begin(), r.end(), v) != r.end();
}

int PlaneGraph::face_of_dart(int u, int v) const {
    const auto& r = rotation_[u];
    for (int i = 0; i < degree(u); ++i)
        if (r[i] == v) return dart_face_[u][i];
    throw GraphError(GraphErrorKind::BadVertexId, "no such edge");
}

int PlaneGraph::find_face(const std::vector<int>& cycle) const {
    int k = static_cast<int>(cycle.size());
    for (int f = 0; f < face_count(); ++f) {
        const auto& w = faces_[f].walk;
        if (static_cast<int>(w.size()) != k || !faces_[f].is_simple()) continue;
        for (int s = 0; s < k; ++s) {
            bool fwd = true, rev = true;
            for (int t = 0; t < k && (fwd || rev); ++t) {
                if (w[(s + t) % k] != cycle[t]) fwd = false;
                if (w[(s + k - t) % k] != cycle[t]) rev = false;
            }
            if (fwd || rev) return f;
        }
    }
    return -1;
}

AbstractGraph PlaneGraph::abstract() const {
    AbstractGraph g(n_);
    for (int v = 0; v < n_; ++v)
        for (int w : rotation_[v])
            if (v < w) g.add_edge(v, w);
    return g;
}

std::vector<int> PlaneGraph::low_degree_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (degree(v) < 3) out.push_back(v);
    return out;
}

} // namespace pg
