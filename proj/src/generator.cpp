#include "pg/generator.hpp"

#include "pg/cycles.hpp"

#include <algorithm>
#include <unordered_set>

namespace pg {

namespace {

struct CodeBuilder {
    const std::vector<std::vector<int>>& rot;
    int n;
    std::vector<int> label;   // 0 = unassigned
    std::vector<int> order;   // label -> vertex
    std::vector<int> parent;  // vertex -> vertex it was first seen from

    explicit CodeBuilder(const std::vector<std::vector<int>>& r)
        : rot(r), n(static_cast<int>(r.size())), label(n, 0), order(n, -1), parent(n, -1) {}

    // Emits the breadth-first code for the run starting with dart (su -> sv)
    // in the given direction, comparing against `best` on the fly. Returns
    // -1/0/+1 like a three-way compare; fills `out` only when smaller.
    int run(int su, int sv, bool reflected, const std::vector<std::uint8_t>& best,
            std::vector<std::uint8_t>& out) {
        std::fill(label.begin(), label.end(), 0);
        int next = 0;
        auto assign = [&](int v, int from) {
            label[v] = ++next;
            order[next - 1] = v;
            parent[v] = from;
        };
        assign(su, sv); // parent of the root doubles as the starting neighbor

        out.clear();
        out.push_back(static_cast<std::uint8_t>(n));
        int verdict = best.empty() ? -1 : 0; // -1 smaller so far, 0 equal so far
        size_t pos = 1;
        auto emit = [&](std::uint8_t b) {
            if (verdict == 0) {
                if (pos >= best.size() || b > best[pos]) {
                    verdict = 1;
                    return;
                }
                if (b < best[pos]) verdict = -1;
            }
            ++pos;
            out.push_back(b);
        };

        for (int li = 0; li < n && verdict <= 0; ++li) {
            int v = order[li];
            const auto& r = rot[v];
            int d = static_cast<int>(r.size());
            int start = 0;
            while (r[start] != parent[v]) ++start;
            for (int s = 0; s < d; ++s) {
                int w = reflected ? r[(start - s + d) % d] : r[(start + s) % d];
                if (label[w] == 0) assign(w, v);
                emit(static_cast<std::uint8_t>(label[w]));
                if (verdict > 0) return 1;
            }
            emit(0);
            if (verdict > 0) return 1;
        }
        return verdict;
    }
};

std::vector<std::uint8_t> rotation_to_code(const std::vector<std::vector<int>>& rot) {
    int n = static_cast<int>(rot.size());
    if (n == 1) return {1, 0};
    CodeBuilder cb(rot);
    std::vector<std::uint8_t> best, scratch;
    for (int u = 0; u < n; ++u)
        for (int v : rot[u])
            for (bool refl : {false, true})
                if (cb.run(u, v, refl, best, scratch) < 0) best = scratch;
    return best;
}

std::vector<std::vector<int>> decode_rot(const std::vector<std::uint8_t>& code) {
    int n = code[0];
    std::vector<std::vector<int>> rot(n);
    size_t at = 1;
    for (int v = 0; v < n; ++v) {
        while (code[at] != 0) rot[v].push_back(code[at++] - 1);
        ++at;
    }
    return rot;
}

struct VecHash {
    size_t operator()(const std::vector<std::uint8_t>& v) const {
        size_t h = 1469598103934665603ull;
        for (auto b : v) {
            h ^= b;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// face walks of a rotation system, without full PlaneGraph validation
std::vector<std::vector<int>> face_walks(const std::vector<std::vector<int>>& rot) {
    int n = static_cast<int>(rot.size());
    std::vector<std::vector<int>> pos(n);
    for (int v = 0; v < n; ++v) {
        pos[v].assign(n, -1);
        for (int i = 0; i < static_cast<int>(rot[v].size()); ++i) pos[v][rot[v][i]] = i;
    }
    std::vector<std::vector<char>> used(n);
    for (int v = 0; v < n; ++v) used[v].assign(rot[v].size(), 0);
    std::vector<std::vector<int>> walks;
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < static_cast<int>(rot[v].size()); ++i) {
            if (used[v][i]) continue;
            std::vector<int> walk;
            int a = v, bi = i;
            while (!used[a][bi]) {
                used[a][bi] = 1;
                int b = rot[a][bi];
                walk.push_back(a);
                int pa = pos[b][a];
                int d = static_cast<int>(rot[b].size());
                bi = (pa + d - 1) % d;
                a = b;
            }
            walks.push_back(std::move(walk));
        }
    return walks;
}

} // namespace

std::vector<std::uint8_t> embedding_code(const std::vector<std::vector<int>>& rotation) {
    return rotation_to_code(rotation);
}

PlaneGraph decode_embedding_code(const std::vector<std::uint8_t>& code) {
    if (code.empty()) throw std::invalid_argument("empty embedding code");
    int n = code[0];
    std::vector<std::vector<int>> rot(n);
    size_t at = 1;
    for (int v = 0; v < n; ++v) {
        while (true) {
            if (at >= code.size()) throw std::invalid_argument("truncated embedding code");
            int b = code[at++];
            if (b == 0) break;
            rot[v].push_back(b - 1);
        }
    }
    return PlaneGraph::build_from_rotation(rot);
}

bool has_triangle(const AbstractGraph& g) {
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u]) {
            if (v < u) continue;
            for (int w : g.adj[u])
                if (w > v && g.has_edge(v, w)) return true;
        }
    return false;
}

std::vector<PlaneGraph> generate_plane_graphs(int max_n, GenFilter filter) {
    if (max_n < 1) throw BoundTooLarge("need max_n >= 1");
    if (max_n > 10) throw BoundTooLarge("generation is bounded at 10 vertices");

    std::unordered_set<std::vector<std::uint8_t>, VecHash> visited;
    std::vector<std::vector<std::uint8_t>> queue;

    auto push = [&](const std::vector<std::vector<int>>& rot) {
        auto code = rotation_to_code(rot);
        if (visited.insert(code).second) queue.push_back(std::move(code));
    };

    push({{}}); // K1

    for (size_t qi = 0; qi < queue.size(); ++qi) {
        auto code = queue[qi]; // copy: queue may reallocate
        int n = code[0];
        auto rot = decode_rot(code);
        int m = 0;
        for (const auto& r : rot) m += static_cast<int>(r.size());
        m /= 2;

        if (n == 1) {
            if (max_n >= 2) push({{1}, {0}});
            continue;
        }

        auto walks = face_walks(rot);

        // leaf attachment at every corner
        if (n + 1 <= max_n) {
            for (const auto& w : walks) {
                int k = static_cast<int>(w.size());
                for (int i = 0; i < k; ++i) {
                    int u = w[i];
                    int in_from = w[(i + k - 1) % k];
                    auto rot2 = rot;
                    rot2.push_back({u});
                    auto& ru = rot2[u];
                    ru.insert(std::find(ru.begin(), ru.end(), in_from), n);
                    push(rot2);
                }
            }
        }

        // edge insertion between two corners of the same face
        bool edge_ok = n < 3 ? true : m + 1 <= 3 * n - 6;
        if (edge_ok) {
            for (const auto& w : walks) {
                int k = static_cast<int>(w.size());
                for (int i = 0; i < k; ++i)
                    for (int j = i + 1; j < k; ++j) {
                        int u = w[i], v = w[j];
                        if (u == v) continue;
                        if (std::find(rot[u].begin(), rot[u].end(), v) != rot[u].end()) continue;
                        int u_in = w[(i + k - 1) % k];
                        int v_in = w[(j + k - 1) % k];
                        auto rot2 = rot;
                        auto& ru = rot2[u];
                        ru.insert(std::find(ru.begin(), ru.end(), u_in), v);
                        auto& rv = rot2[v];
                        rv.insert(std::find(rv.begin(), rv.end(), v_in), u);
                        push(rot2);
                    }
            }
        }
    }

    std::sort(queue.begin(), queue.end(), [](const auto& a, const auto& b) {
        if (a[0] != b[0]) return a[0] < b[0];
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });

    std::vector<PlaneGraph> out;
    out.reserve(queue.size());
    for (const auto& code : queue) {
        PlaneGraph g = decode_embedding_code(code);
        if (filter == GenFilter::FamilyF && !check_family_membership(g).in_family()) continue;
        if (filter == GenFilter::HasTriangle && !has_triangle(g.abstract())) continue;
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace pg
